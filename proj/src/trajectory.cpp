#include "kintraj/trajectory.hpp"

#include <stdexcept>

namespace kintraj {

namespace {

// Solves the shared terminal matrix against a rational right-hand side and
// returns the solution as plain rationals.
std::vector<Rational> solve_terminal(const std::vector<std::vector<Rational>>& m,
                                     const std::vector<Rational>& rhs) {
    const std::size_t n = m.size();
    PolyMatrix pm(n, n);
    std::vector<PuiseuxPoly> pr(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) pm.set(i, j, PuiseuxPoly::constant(m[i][j]));
        pr[i] = PuiseuxPoly::constant(rhs[i]);
    }
    const auto sol = fraction_solve(pm, pr);
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sol[i].den.constant_value() != Rational(1))
            throw std::logic_error("terminal solve: expected unit denominator");
        out[i] = sol[i].is_zero() ? Rational(0) : sol[i].num.constant_value();
    }
    return out;
}

}  // namespace

TrajectoryPair build_pair(int k) {
    const Ansatz ansatz = Ansatz::for_steps(k);
    const int n = k + 1;
    const auto terminal = ansatz.terminal_matrix();

    TrajectoryPair pair;
    pair.k = k;
    pair.root_denom = ansatz.root_denom;
    pair.kappa = ansatz.kappa;
    pair.a = PolyMatrix(n, n);
    pair.b = PolyMatrix(n, n);
    pair.alpha.resize(n);
    pair.beta.resize(n);

    for (int j = 0; j < n; ++j) {
        // Row i of the terminal system carries sigma^(k-i); with the
        // unknowns rescaled by sigma^(j-k) both systems are purely
        // rational and share the matrix `terminal`.
        std::vector<Rational> rhs_a(n, 0), rhs_b(n, 0);
        rhs_a[j] = 1;
        for (int i = 0; i < n; ++i) {
            if (i == j)
                rhs_b[i] = -1;
            else if (i < j)
                rhs_b[i] = -iterated_integral_factor(0, j - i);
        }
        const std::vector<Rational> alpha_hat = solve_terminal(terminal, rhs_a);
        const std::vector<Rational> beta_hat = solve_terminal(terminal, rhs_b);

        const int sigma_power = j - k;
        PuiseuxPoly a_bottom, b_bottom;
        for (int l = 0; l < n; ++l) {
            const Rational& q = ansatz.basis_exponents[l];
            a_bottom += PuiseuxPoly::monomial(alpha_hat[l], q, sigma_power);
            b_bottom += PuiseuxPoly::monomial(beta_hat[l], q, sigma_power);
            pair.alpha[j].push_back({q, alpha_hat[l], sigma_power});
            pair.beta[j].push_back({q, beta_hat[l], sigma_power});
        }
        if (j == k) b_bottom += PuiseuxPoly::constant(1);

        a_bottom.widen_root_denom(ansatz.root_denom);
        b_bottom.widen_root_denom(ansatz.root_denom);
        pair.a.set(k, j, a_bottom);
        pair.b.set(k, j, b_bottom);
        for (int i = k - 1; i >= 0; --i) {
            pair.a.set(i, j, pair.a.at(i + 1, j).weighted_integrate());
            PuiseuxPoly b_row = pair.b.at(i + 1, j).weighted_integrate();
            if (i == j) b_row += PuiseuxPoly::constant(1);
            pair.b.set(i, j, b_row);
        }
    }
    return pair;
}

KineticPoint KineticPoint::scalar(double t, std::vector<double> x_blocks, double v) {
    KineticPoint p;
    p.t = t;
    for (double xb : x_blocks) p.x.push_back({xb});
    p.v = {v};
    return p;
}

namespace {

void check_endpoints(const TrajectoryPair& pair, const KineticPoint& end1,
                     const KineticPoint& end0, double r) {
    if (!(end1.t < end0.t))
        throw std::domain_error("eval_gamma: the r = 1 endpoint must lie strictly earlier in time");
    if (r < 0.0 || r > 1.0) throw std::domain_error("eval_gamma: r must lie in [0, 1]");
    const std::size_t k = static_cast<std::size_t>(pair.k);
    if (end0.x.size() != k || end1.x.size() != k)
        throw std::invalid_argument("eval_gamma: endpoint has wrong number of position blocks");
    const std::size_t d = end0.v.size();
    if (d == 0 || end1.v.size() != d)
        throw std::invalid_argument("eval_gamma: endpoint dimension mismatch");
    for (std::size_t i = 0; i < k; ++i)
        if (end0.x[i].size() != d || end1.x[i].size() != d)
            throw std::invalid_argument("eval_gamma: endpoint dimension mismatch");
}

const std::vector<double>& block_of(const KineticPoint& p, std::size_t j, std::size_t k) {
    return j < k ? p.x[j] : p.v;
}

}  // namespace

KineticPoint eval_gamma(const TrajectoryPair& pair, const KineticPoint& end1,
                        const KineticPoint& end0, double r) {
    check_endpoints(pair, end1, end0, r);
    const std::size_t k = static_cast<std::size_t>(pair.k);
    const std::size_t d = end0.v.size();
    const double sigma = end1.t - end0.t;

    KineticPoint out;
    out.t = end0.t + sigma * r * r;
    out.x.assign(k, std::vector<double>(d, 0.0));
    out.v.assign(d, 0.0);
    for (std::size_t i = 0; i <= k; ++i) {
        std::vector<double>& dst = (i < k) ? out.x[i] : out.v;
        for (std::size_t j = 0; j <= k; ++j) {
            const double ca = pair.a.at(i, j).eval(r, sigma);
            const double cb = pair.b.at(i, j).eval(r, sigma);
            const std::vector<double>& y = block_of(end1, j, k);
            const std::vector<double>& x = block_of(end0, j, k);
            for (std::size_t c = 0; c < d; ++c) dst[c] += ca * y[c] + cb * x[c];
        }
    }
    return out;
}

std::vector<double> eval_gamma_dot_v(const TrajectoryPair& pair, const KineticPoint& end1,
                                     const KineticPoint& end0, double r) {
    check_endpoints(pair, end1, end0, r);
    const std::size_t k = static_cast<std::size_t>(pair.k);
    const std::size_t d = end0.v.size();
    const double sigma = end1.t - end0.t;

    std::vector<double> out(d, 0.0);
    for (std::size_t j = 0; j <= k; ++j) {
        const double ca = pair.a.at(k, j).differentiate_r().eval(r, sigma);
        const double cb = pair.b.at(k, j).differentiate_r().eval(r, sigma);
        const std::vector<double>& y = block_of(end1, j, k);
        const std::vector<double>& x = block_of(end0, j, k);
        for (std::size_t c = 0; c < d; ++c) out[c] += ca * y[c] + cb * x[c];
    }
    return out;
}

CompiledPair::CompiledPair(const TrajectoryPair& pair) : k_(pair.k) {
    const std::size_t n = static_cast<std::size_t>(k_) + 1;
    a_.reserve(n * n);
    b_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a_.emplace_back(pair.a.at(i, j));
            b_.emplace_back(pair.b.at(i, j));
        }
    for (std::size_t j = 0; j < n; ++j) {
        da_bottom_.emplace_back(pair.a.at(n - 1, j).differentiate_r());
        db_bottom_.emplace_back(pair.b.at(n - 1, j).differentiate_r());
    }
}

double CompiledPair::a_entry(std::size_t i, std::size_t j, double r, double sigma) const {
    return a_[i * (k_ + 1) + j].eval(r, sigma);
}

double CompiledPair::b_entry(std::size_t i, std::size_t j, double r, double sigma) const {
    return b_[i * (k_ + 1) + j].eval(r, sigma);
}

double CompiledPair::a_bottom_derivative(std::size_t j, double r, double sigma) const {
    return da_bottom_[j].eval(r, sigma);
}

double CompiledPair::b_bottom_derivative(std::size_t j, double r, double sigma) const {
    return db_bottom_[j].eval(r, sigma);
}

void CompiledPair::eval_path(const std::vector<double>& end1, const std::vector<double>& end0,
                             double r, std::vector<double>& gamma) const {
    const std::size_t n = static_cast<std::size_t>(k_) + 1;
    const double sigma = end1[0] - end0[0];
    gamma.resize(n + 1);
    gamma[0] = end0[0] + sigma * r * r;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += a_[i * n + j].eval(r, sigma) * end1[j + 1] +
                   b_[i * n + j].eval(r, sigma) * end0[j + 1];
        gamma[i + 1] = acc;
    }
    return;
}

}  // namespace kintraj
