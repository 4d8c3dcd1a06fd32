#pragma once

// Closed-form test functions for the inequality probe, each carrying its
// own gradient and operator-residual evaluators. Nothing is taken on
// trust: a spec is usable only after certification samples nonnegativity
// and the subsolution sign of the residual over the enlarged cylinder and
// cross-checks the supplied derivatives against finite differences.

#include "kintraj/geometry.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace kintraj {

struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Point layout: (t, x_1, ..., x_k, v), d = 1.
struct Subsolution {
    std::string name;
    int k = 1;
    double lambda = 1.0;  // coefficient field A = lambda * Id; (H2) bound is |lambda|
    std::function<double(const std::vector<double>&)> u;
    std::function<double(const std::vector<double>&)> grad_v;
    std::function<double(const std::vector<double>&)> residual;  // du/dt + drift - d/dv(A du/dv)

    bool certified = false;
    double residual_bound = 0.0;  // max sampled residual over the cylinder
    double min_value = 0.0;       // min sampled u over the cylinder
};

struct CertifyOptions {
    int resolution = 16;        // certification grid per axis
    double residual_tol = 1e-8;
    double positivity_tol = 1e-12;
    double fd_rel_tol = 1e-6;
    int fd_samples = 128;
};

// Samples u and the residual over geometry.q_tilde and finite-difference
// checks grad_v and the residual assembly. Throws certification_error on
// any violation; on success fills the certificate fields.
void certify(Subsolution& spec, const CylinderGeometry& geometry,
             const CertifyOptions& opts = {});

enum class SubsolutionKind {
    constant,                      // params: level
    affine_v,                      // params: offset, slope
    v_heat,                        // params: t0, amplitude
    kolmogorov_gaussian,           // params: t0, x0, amplitude (k = 1 only)
    shifted_positive_part_smoothed // params: shift, smoothing
};

SubsolutionKind subsolution_kind_from_string(const std::string& name);

// Builds and certifies a spec over the given geometry. `lambda` is the
// constant coefficient. Throws certification_error when the certificate
// fails (for example an affine spec whose offset does not dominate the
// velocity radius).
Subsolution make_subsolution(SubsolutionKind kind, const std::map<std::string, double>& params,
                             const CylinderGeometry& geometry, double lambda = 1.0,
                             const CertifyOptions& opts = {});

}  // namespace kintraj
