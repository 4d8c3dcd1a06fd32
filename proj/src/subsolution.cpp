#include "kintraj/subsolution.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace kintraj {

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

// Central differences of the full operator: du/dt + sum_j x_j du/dx_{j-1}
// + v du/dx_k - lambda d2u/dv2, with A constant.
double fd_residual(const Subsolution& s, const std::vector<double>& p) {
    const double h1 = 1e-6;
    const double h2 = 1e-4;
    const std::size_t n = p.size();
    std::vector<double> q = p;

    const auto diff1 = [&](std::size_t axis) {
        q[axis] = p[axis] + h1;
        const double up = s.u(q);
        q[axis] = p[axis] - h1;
        const double dn = s.u(q);
        q[axis] = p[axis];
        return (up - dn) / (2.0 * h1);
    };
    q[n - 1] = p[n - 1] + h2;
    const double upp = s.u(q);
    q[n - 1] = p[n - 1] - h2;
    const double dnn = s.u(q);
    q[n - 1] = p[n - 1];
    const double d2v = (upp - 2.0 * s.u(p) + dnn) / (h2 * h2);

    double acc = diff1(0);
    for (int j = 2; j <= s.k; ++j) acc += p[j] * diff1(static_cast<std::size_t>(j) - 1);
    acc += p[n - 1] * diff1(n - 2);
    return acc - s.lambda * d2v;
}

double fd_grad_v(const Subsolution& s, const std::vector<double>& p) {
    const double h = 1e-6;
    std::vector<double> q = p;
    q.back() = p.back() + h;
    const double up = s.u(q);
    q.back() = p.back() - h;
    const double dn = s.u(q);
    return (up - dn) / (2.0 * h);
}

// Numerically stable smoothed positive part and its derivatives:
// psi(z) = max(z, 0) + delta * log1p(exp(-|z|/delta)).
double softplus(double z, double delta) {
    return std::max(z, 0.0) + delta * std::log1p(std::exp(-std::abs(z) / delta));
}
double softplus_d1(double z, double delta) { return 1.0 / (1.0 + std::exp(-z / delta)); }
double softplus_d2(double z, double delta) {
    const double s = softplus_d1(z, delta);
    return s * (1.0 - s) / delta;
}

}  // namespace

void certify(Subsolution& spec, const CylinderGeometry& geometry, const CertifyOptions& opts) {
    const Box& box = geometry.q_tilde;
    const std::size_t d = box.dims();
    if (d != static_cast<std::size_t>(spec.k) + 2)
        throw certification_error(spec.name + ": geometry dimension mismatch");

    const int res = std::max(4, opts.resolution);
    double min_u = std::numeric_limits<double>::infinity();
    double max_u = 0.0;
    double max_res = -std::numeric_limits<double>::infinity();
    std::vector<double> worst_point;

    std::vector<double> pt(d);
    std::vector<int> idx(d, 0);
    while (true) {
        for (std::size_t i = 0; i < d; ++i) {
            const auto [lo, hi] = box.axes[i];
            pt[i] = lo + (hi - lo) * (idx[i] + 0.5) / res;
        }
        const double value = spec.u(pt);
        const double rv = spec.residual(pt);
        max_u = std::max(max_u, std::abs(value));
        if (value < min_u) {
            min_u = value;
            if (value < 0.0) worst_point = pt;
        }
        max_res = std::max(max_res, rv);

        std::size_t axis = 0;
        while (axis < d && ++idx[axis] >= res) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == d) break;
    }

    if (min_u < -opts.positivity_tol * std::max(1.0, max_u)) {
        std::ostringstream os;
        os << spec.name << ": not nonnegative on the enlarged cylinder (min " << min_u << ")";
        throw certification_error(os.str());
    }
    if (max_res > opts.residual_tol) {
        std::ostringstream os;
        os << spec.name << ": residual certificate failed (max residual " << max_res << ")";
        throw certification_error(os.str());
    }

    // Finite-difference cross-check of the supplied derivatives at interior
    // sample points (deterministic seed).
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(spec.k));
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    for (int it = 0; it < opts.fd_samples; ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            const auto [lo, hi] = box.axes[i];
            pt[i] = lo + (hi - lo) * unit(rng);
        }
        const double g = spec.grad_v(pt);
        const double g_fd = fd_grad_v(spec, pt);
        if (std::abs(g - g_fd) >
            opts.fd_rel_tol * std::max({1.0, std::abs(g), std::abs(g_fd)})) {
            std::ostringstream os;
            os << spec.name << ": gradient disagrees with finite differences (" << g << " vs "
               << g_fd << ")";
            throw certification_error(os.str());
        }
        const double rv = spec.residual(pt);
        const double rv_fd = fd_residual(spec, pt);
        // The FD second derivative carries ~1e-8 relative error; scale by
        // the operator magnitude.
        const double scale = std::max({1.0, std::abs(rv), std::abs(rv_fd)});
        if (std::abs(rv - rv_fd) > 1e-4 * scale) {
            std::ostringstream os;
            os << spec.name << ": residual disagrees with finite differences (" << rv << " vs "
               << rv_fd << ")";
            throw certification_error(os.str());
        }
    }

    spec.certified = true;
    spec.residual_bound = max_res;
    spec.min_value = min_u;
}

SubsolutionKind subsolution_kind_from_string(const std::string& name) {
    if (name == "constant") return SubsolutionKind::constant;
    if (name == "affine_v" || name == "affine") return SubsolutionKind::affine_v;
    if (name == "v_heat") return SubsolutionKind::v_heat;
    if (name == "kolmogorov_gaussian") return SubsolutionKind::kolmogorov_gaussian;
    if (name == "shifted_positive_part_smoothed" || name == "smoothed_positive_part")
        return SubsolutionKind::shifted_positive_part_smoothed;
    throw std::invalid_argument("unknown subsolution kind: " + name);
}

Subsolution make_subsolution(SubsolutionKind kind, const std::map<std::string, double>& params,
                             const CylinderGeometry& geometry, double lambda,
                             const CertifyOptions& opts) {
    Subsolution s;
    s.k = geometry.k;
    s.lambda = lambda;
    const std::size_t vi = static_cast<std::size_t>(s.k) + 1;  // velocity index

    switch (kind) {
        case SubsolutionKind::constant: {
            const double level = get_param(params, "level", 1.0);
            s.name = "constant";
            s.u = [level](const std::vector<double>&) { return level; };
            s.grad_v = [](const std::vector<double>&) { return 0.0; };
            s.residual = [](const std::vector<double>&) { return 0.0; };
            break;
        }
        case SubsolutionKind::affine_v: {
            const double offset = get_param(params, "offset", 2.0);
            const double slope = get_param(params, "slope", 1.0);
            s.name = "affine_v";
            s.u = [=](const std::vector<double>& p) { return offset + slope * p[vi]; };
            s.grad_v = [slope](const std::vector<double>&) { return slope; };
            s.residual = [](const std::vector<double>&) { return 0.0; };  // A constant
            break;
        }
        case SubsolutionKind::v_heat: {
            // x-independent solution of du/dt = lambda d2u/dv2, optionally
            // centered off the velocity origin (an off-center kernel grows
            // in time on the unit ball, which makes the positive-part
            // deviation nontrivial).
            const double t0 = get_param(params, "t0", 3.0 + geometry.kappa);
            const double amp = get_param(params, "amplitude", 1.0);
            const double center = get_param(params, "center", 0.0);
            const double lam = lambda;
            s.name = "v_heat";
            s.u = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double z = p[vi] - center;
                return amp / std::sqrt(tt) * std::exp(-z * z / (4.0 * lam * tt));
            };
            s.grad_v = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double z = p[vi] - center;
                const double uu = amp / std::sqrt(tt) * std::exp(-z * z / (4.0 * lam * tt));
                return uu * (-z / (2.0 * lam * tt));
            };
            s.residual = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double z = p[vi] - center;
                const double uu = amp / std::sqrt(tt) * std::exp(-z * z / (4.0 * lam * tt));
                const double ut = uu * (-0.5 / tt + z * z / (4.0 * lam * tt * tt));
                const double uvv = uu * (z * z / (4.0 * lam * lam * tt * tt) - 1.0 / (2.0 * lam * tt));
                return ut - lam * uvv;
            };
            break;
        }
        case SubsolutionKind::kolmogorov_gaussian: {
            if (geometry.k != 1)
                throw std::invalid_argument(
                    "kolmogorov_gaussian: only implemented for the single-step operator");
            // Gaussian with the covariance of the drifted diffusion
            // (variance pair 2 lam t^3 / 3, 2 lam t; covariance lam t^2);
            // acceptance rests on the residual certificate, not on the
            // formula.
            const double t0 = get_param(params, "t0", 3.0 + geometry.kappa);
            const double x0 = get_param(params, "x0", 0.0);
            const double amp = get_param(params, "amplitude", 1.0);
            const double lam = lambda;
            s.name = "kolmogorov_gaussian";
            const auto exponent = [=](double tt, double x, double v) {
                return -3.0 * x * x / (lam * tt * tt * tt) + 3.0 * x * v / (lam * tt * tt) -
                       v * v / (lam * tt);
            };
            s.u = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double x = p[1] + x0;
                return amp / (tt * tt) * std::exp(exponent(tt, x, p[vi]));
            };
            s.grad_v = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double x = p[1] + x0;
                const double uu = amp / (tt * tt) * std::exp(exponent(tt, x, p[vi]));
                return uu * (3.0 * x / (lam * tt * tt) - 2.0 * p[vi] / (lam * tt));
            };
            s.residual = [=](const std::vector<double>& p) {
                const double tt = p[0] + t0;
                const double x = p[1] + x0;
                const double v = p[vi];
                const double uu = amp / (tt * tt) * std::exp(exponent(tt, x, v));
                const double e_t = 9.0 * x * x / (lam * tt * tt * tt * tt) -
                                   6.0 * x * v / (lam * tt * tt * tt) + v * v / (lam * tt * tt);
                const double u_t = uu * (-2.0 / tt + e_t);
                const double e_x = -6.0 * x / (lam * tt * tt * tt) + 3.0 * v / (lam * tt * tt);
                const double e_v = 3.0 * x / (lam * tt * tt) - 2.0 * v / (lam * tt);
                const double u_vv = uu * (e_v * e_v - 2.0 / (lam * tt));
                return u_t + v * (uu * e_x) - lam * u_vv;
            };
            break;
        }
        case SubsolutionKind::shifted_positive_part_smoothed: {
            const double shift = get_param(params, "shift", 0.0);
            const double delta = get_param(params, "smoothing", 0.25);
            if (delta <= 0.0)
                throw std::invalid_argument("shifted_positive_part_smoothed: smoothing must be positive");
            const double lam = lambda;
            s.name = "shifted_positive_part_smoothed";
            s.u = [=](const std::vector<double>& p) { return softplus(p[vi] - shift, delta); };
            s.grad_v = [=](const std::vector<double>& p) { return softplus_d1(p[vi] - shift, delta); };
            s.residual = [=](const std::vector<double>& p) {
                return -lam * softplus_d2(p[vi] - shift, delta);
            };
            break;
        }
    }

    certify(s, geometry, opts);
    return s;
}

}  // namespace kintraj
