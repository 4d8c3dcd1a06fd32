#include "kintraj/numeric_sup.hpp"

#include "kintraj/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kintraj {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section search for a maximum of g on [a, b].
double golden_max(const Fn1& g, double a, double b, double tol_rel, double& best_x) {
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = g(c), fd = g(d);
    const double span = std::max(std::abs(a), std::abs(b)) + 1.0;
    for (int it = 0; it < 200 && (b - a) > tol_rel * span; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = g(d);
        }
    }
    if (fc >= fd) {
        best_x = c;
        return fc;
    }
    best_x = d;
    return fd;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> pts;
    if (n < 2 || lo == hi) return {lo};
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(lo + (hi - lo) * double(i) / double(n - 1));
    return pts;
}

SupPoint scan_and_refine(const Fn2& f, const std::vector<double>& rg,
                         const std::vector<double>& sg, const SupGrid& grid) {
    struct Best {
        double value = -std::numeric_limits<double>::infinity();
        std::size_t ir = 0, is = 0;
    };
    Best best = map_reduce_chunks<Best>(
        rg.size(), Best{},
        [&](std::size_t ir) {
            Best local;
            for (std::size_t is = 0; is < sg.size(); ++is) {
                const double v = f(rg[ir], sg[is]);
                if (v > local.value) local = {v, ir, is};
            }
            return local;
        },
        [](Best acc, Best cur) { return cur.value > acc.value ? cur : acc; });

    double r = rg[best.ir];
    double s = sg[best.is];
    double value = best.value;
    for (int round = 0; round < grid.refine_rounds; ++round) {
        if (rg.size() > 1) {
            const double lo = rg[best.ir == 0 ? 0 : best.ir - 1];
            const double hi = rg[std::min(best.ir + 1, rg.size() - 1)];
            if (hi > lo) {
                double x;
                const double v = golden_max([&](double rr) { return f(rr, s); }, lo, hi,
                                            grid.refine_tol, x);
                if (v > value) {
                    value = v;
                    r = x;
                }
            }
        }
        if (sg.size() > 1) {
            const double lo = sg[best.is == 0 ? 0 : best.is - 1];
            const double hi = sg[std::min(best.is + 1, sg.size() - 1)];
            if (hi > lo) {
                double x;
                const double v = golden_max([&](double ss) { return f(r, ss); }, lo, hi,
                                            grid.refine_tol, x);
                if (v > value) {
                    value = v;
                    s = x;
                }
            }
        }
    }
    return {value, r, s};
}

}  // namespace

std::vector<double> make_r_grid(double lo, double hi, int n, bool log_clustered,
                                double floor_value) {
    if (!(hi > lo)) return {lo};
    if (!log_clustered || lo > floor_value) return uniform_grid(lo, hi, n);
    std::vector<double> pts;
    pts.reserve(n + 1);
    pts.push_back(lo);
    const double start = std::max(lo, floor_value);
    const double ratio = hi / start;
    for (int i = 0; i < n; ++i)
        pts.push_back(start * std::pow(ratio, double(i) / double(n - 1)));
    return pts;
}

SupEstimate sup_over_rect(const Fn2& f, double r_lo, double r_hi, double sigma_lo,
                          double sigma_hi, const SupGrid& grid) {
    SupEstimate est;
    const auto level = [&](int mult) {
        const auto rg = make_r_grid(r_lo, r_hi, grid.r_points * mult, grid.log_r, grid.r_floor);
        const auto sg = uniform_grid(sigma_lo, sigma_hi, grid.sigma_points * mult);
        return scan_and_refine(f, rg, sg, grid);
    };
    const SupPoint p1 = level(1);
    const SupPoint p2 = level(2);
    est.coarse = p1.value;
    est.fine = p2.value;
    est.best = p2.value >= p1.value ? p2 : p1;
    est.refinement_delta =
        std::abs(p1.value - p2.value) / std::max(std::abs(p2.value), 1e-300);
    return est;
}

SupEstimate min_over_interval(const Fn1& f, double lo, double hi, int points,
                              double refine_tol) {
    const auto level = [&](int n) {
        const auto g = uniform_grid(lo, hi, n);
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double v = f(g[i]);
            if (v < best) {
                best = v;
                bi = i;
            }
        }
        const double a = g[bi == 0 ? 0 : bi - 1];
        const double b = g[std::min(bi + 1, g.size() - 1)];
        SupPoint p{best, g[bi], 0.0};
        if (b > a) {
            double x;
            const double v = -golden_max([&](double t) { return -f(t); }, a, b, refine_tol, x);
            if (v < best) p = {v, x, 0.0};
        }
        return p;
    };
    const SupPoint p1 = level(points);
    const SupPoint p2 = level(2 * points);
    SupEstimate est;
    est.coarse = p1.value;
    est.fine = p2.value;
    est.best = p2.value <= p1.value ? p2 : p1;
    est.refinement_delta =
        std::abs(p1.value - p2.value) / std::max(std::abs(p2.value), 1e-300);
    return est;
}

}  // namespace kintraj
