#pragma once

// Desk-scale numeric probe of the kinetic Poincare inequality (d = 1) and
// Monte Carlo audits of the substitution identities used in its proof.
// The probed statement, per certified subsolution u and epsilon in (0,1):
//
//   || (u - <u>_{Q1-})_+ ||_L1(Q1)
//     <= C ( eps^-1 ||du/dv||_L1(Qtilde) + eps^((k+1)d) ||u||_L1(Q1) ).

#include "kintraj/geometry.hpp"
#include "kintraj/serialize.hpp"
#include "kintraj/subsolution.hpp"
#include "kintraj/trajectory.hpp"

#include <vector>

namespace kintraj {

struct ProbeNorms {
    double past_mean = 0.0;  // <u> over Q1-
    double lhs = 0.0;        // positive-part deviation over Q1
    double grad_norm = 0.0;  // ||du/dv|| over Qtilde
    double u_norm = 0.0;     // ||u|| over Q1
};

struct ProbeRow {
    std::string spec;
    double eps = 0.0;
    double lhs = 0.0;
    double grad_norm = 0.0;
    double u_norm = 0.0;
    double ratio = 0.0;
};

struct ProbeResult {
    int k = 1;
    double kappa = 1.0;
    double r0 = 1.0;
    int resolution = 64;
    bool geometry_ok = true;  // q_tilde radii cover required_r0 * normalizers
    std::vector<ProbeRow> rows;
    double empirical_constant = 0.0;
    double refined_constant = 0.0;  // at doubled resolution
    double refinement_delta = 0.0;

    Json to_json() const;
    std::string to_plot_data() const;  // delimited text: eps lhs grad u ratio
};

ProbeNorms compute_norms(const Subsolution& spec, const CylinderGeometry& geometry,
                         int resolution);

// One probe row; throws std::logic_error when both norms vanish while the
// deviation does not (contradicts certification).
ProbeRow poincare_ratio(const Subsolution& spec, double eps, const CylinderGeometry& geometry,
                        int resolution);

// Full table over a spec family and epsilon grid, with the empirical
// constant re-computed at doubled resolution. required_r0 > 0 enables the
// geometry validity flag.
ProbeResult probe_sweep(const std::vector<Subsolution>& specs, const std::vector<double>& eps_grid,
                        const CylinderGeometry& geometry, int resolution,
                        double required_r0 = 0.0);

struct ChangeOfVariablesAudit {
    double lhs = 0.0;              // integral of g over the source box
    double rhs = 0.0;              // image-side integral with the 1/|det| weight
    double relative_error = 0.0;
    double det_value = 0.0;        // numeric determinant of the evaluated map
    double acceptance_rate = 0.0;  // rejection sampling efficiency on the image side
    bool conditioning_warning = false;
};

// Compares integral over B of g(Phi(y,w)) with the image-side integral
// weighted by |det|^-1, by two independent Monte Carlo estimates
// (k = 1, d = 1). Phi(y,w) = A(r)(y,w)^T + B(r)(x,v)^T at fixed x, v.
// Default integrand: a fixed smooth non-affine g; pass another to probe
// special cases (constant, affine).
using Integrand2D = std::function<double(double, double)>;
ChangeOfVariablesAudit change_of_variables_audit(const TrajectoryPair& pair, double r,
                                                 double sigma, double x, double v,
                                                 long long samples, unsigned long long seed = 17,
                                                 const Integrand2D& integrand = {});

struct GradientAudit {
    double j_estimate = 0.0;        // weighted path integral of |du/dv|
    double grad_norm = 0.0;         // ||du/dv|| over Qtilde
    double ratio = 0.0;             // j / grad_norm
    double coarse_ratio = 0.0;      // at a quarter of the samples
    double refinement_delta = 0.0;
    double containment_fraction = 0.0;
    long long violations = 0;
    Json witness;                   // first violating sample, if any
};

// Monte Carlo estimate of the r-weighted integral of |du/dv| along paths
// between Q1 and Q1-, checking that every sampled path point stays in
// q_tilde. r_exponent in {-1/2, 0}; the singular case is importance
// sampled with density proportional to r^(-1/2).
GradientAudit trajectory_gradient_audit(const TrajectoryPair& pair, const Subsolution& spec,
                                        double r_exponent, const CylinderGeometry& geometry,
                                        long long samples, int grad_resolution = 64,
                                        unsigned long long seed = 29);

}  // namespace kintraj
