#pragma once

// Certification of the trajectory-pair properties: exact symbolic checks
// (row recursion, boundary values, sigma-monomial structure, monomial
// determinant, inverse-column decay, closed-form baselines) and numeric
// constant estimates with reported witnesses and refinement deltas.

#include "kintraj/numeric_sup.hpp"
#include "kintraj/serialize.hpp"
#include "kintraj/trajectory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kintraj {

struct CheckRecord {
    std::string name;
    std::string mode;  // "exact" or "numeric"
    bool pass = false;
    Json witness;      // numeric checks always carry grid + worst point
};

// Time-gap window: sigma = s - t ranges over [-2-kappa, -kappa].
struct GapGeometry {
    double kappa = 1.0;
    double sigma_lo() const { return -2.0 - kappa; }
    double sigma_hi() const { return -kappa; }
};

struct DetCheck {
    CheckRecord record;
    PuiseuxPoly det;
    Rational exponent;        // conjectured p_k
    bool is_monomial = false;
};

struct InverseTail {
    CheckRecord record;               // decay: every leading exponent >= -3/2
    std::vector<PuiseuxPoly> column;  // exact inverse last column
    DetCheck det;
};

struct ConstantEstimate {
    double value = 0.0;
    SupPoint witness;
    double refinement_delta = 0.0;
    Json meta;  // grid resolution, attained column/block, etc.
};

struct RadiusReport {
    std::vector<double> block_sup;        // sup of row-coefficient sums S_i
    std::vector<double> theorem_ratio;    // normalizers 1+kappa (x), 1+1/kappa (v)
    std::vector<double> conjecture_ratio; // normalizer (1+1/kappa)^(i-1) for block i
    double r0_theorem = 0.0;
    double r0_conjecture = 0.0;
    double r0 = 0.0;                      // theorem convention for k = 1, else conjecture
    double refinement_delta = 0.0;
};

std::vector<CheckRecord> verify_structural(const TrajectoryPair& pair);

DetCheck verify_det_a(const TrajectoryPair& pair);

// Requires the determinant to be the expected monomial; the column is the
// adjugate column divided by it, exactly.
InverseTail inverse_last_column(const TrajectoryPair& pair);

struct DetBResult {
    std::vector<CheckRecord> records;
    double min_value = 0.0;
    double min_r = 0.0;
};
DetBResult verify_det_b_positive(const TrajectoryPair& pair, double r_lo = 0.0,
                                 double r_hi = 0.5, int grid_points = 2048,
                                 double delta_tol = 1e-4);

ConstantEstimate estimate_c0(const TrajectoryPair& pair, const GapGeometry& gap,
                             const SupGrid& grid = {});
// Same estimate from an explicit column (used to check homogeneity).
ConstantEstimate estimate_c0_from_column(const std::vector<PuiseuxPoly>& column,
                                         const GapGeometry& gap, const SupGrid& grid = {});

ConstantEstimate estimate_c1(const TrajectoryPair& pair, const GapGeometry& gap,
                             const SupGrid& grid = {});

RadiusReport compute_r0(const TrajectoryPair& pair, const GapGeometry& gap,
                        const SupGrid& grid = {});

CheckRecord verify_against_baselines(const TrajectoryPair& pair);

struct VerifyOptions {
    bool structural = true;
    bool det_a = true;
    bool inverse = true;
    bool det_b = true;
    bool c0 = true;
    bool c1 = true;
    bool r0 = true;
    bool baseline = true;  // only applies when a baseline exists
    double kappa = 1.0;
    SupGrid grid;
    double det_b_r_hi = 0.5;
    double c0_delta_tol = 1e-2;
    double c1_delta_tol = 1e-2;
    double r0_delta_tol = 1e-4;
    double det_b_delta_tol = 1e-4;

    // Comma list of tokens: structural,det,inverse,detb,c0,c1,r0,baseline.
    static VerifyOptions from_checks(const std::string& csv);
};

struct VerificationReport {
    int k = 0;
    double kappa = 1.0;
    std::vector<CheckRecord> checks;
    Json constants;
    Json tolerances;

    bool all_pass() const;
    Json to_json() const;
    std::string to_text() const;
};

VerificationReport verify_pair(const TrajectoryPair& pair, const VerifyOptions& opts = {});

}  // namespace kintraj
