#pragma once

// Declared estimation scheme for suprema and minima of piecewise-smooth
// functions on rectangles: a coarse tensor grid (r log-clustered toward 0)
// followed by coordinate golden-section refinement, run at two grid
// levels. A numeric check may only pass when both levels agree within the
// caller's tolerance; the refinement delta is always reported.

#include <functional>
#include <vector>

namespace kintraj {

struct SupGrid {
    int r_points = 256;
    int sigma_points = 64;
    bool log_r = true;        // cluster toward the left endpoint
    double r_floor = 1e-9;    // smallest positive grid point when log_r
    int refine_rounds = 3;
    double refine_tol = 1e-7; // relative bracket width
};

struct SupPoint {
    double value = 0.0;
    double r = 0.0;
    double sigma = 0.0;
};

struct SupEstimate {
    SupPoint best;            // the larger of the two levels
    double coarse = 0.0;
    double fine = 0.0;
    double refinement_delta = 0.0;  // |coarse - fine| / max(|fine|, tiny)
};

using Fn2 = std::function<double(double, double)>;
using Fn1 = std::function<double(double)>;

SupEstimate sup_over_rect(const Fn2& f, double r_lo, double r_hi, double sigma_lo,
                          double sigma_hi, const SupGrid& grid = {});

// Two-level grid + golden-section minimum of a univariate function.
SupEstimate min_over_interval(const Fn1& f, double lo, double hi, int points = 2048,
                              double refine_tol = 1e-9);

std::vector<double> make_r_grid(double lo, double hi, int n, bool log_clustered,
                                double floor_value);

}  // namespace kintraj
