#include "kintraj/probe.hpp"

#include "kintraj/quadrature.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace kintraj {

namespace {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// Fixed batch size so totals do not depend on the worker count.
constexpr long long kBatch = 1 << 16;

std::mt19937_64 batch_rng(unsigned long long seed, long long batch) {
    // splitmix-style scramble of (seed, batch)
    unsigned long long z = seed + 0x9e3779b97f4a7c15ull * (batch + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return std::mt19937_64(z ^ (z >> 31));
}

}  // namespace

ProbeNorms compute_norms(const Subsolution& spec, const CylinderGeometry& geometry,
                         int resolution) {
    if (!spec.certified) throw std::logic_error("compute_norms: spec is not certified");
    ProbeNorms n;
    n.past_mean = box_mean([&](const std::vector<double>& p) { return spec.u(p); },
                           geometry.q1_minus, resolution);
    n.lhs = box_integral(
        [&](const std::vector<double>& p) { return positive_part(spec.u(p) - n.past_mean); },
        geometry.q1, resolution);
    n.grad_norm = box_integral(
        [&](const std::vector<double>& p) { return std::abs(spec.grad_v(p)); },
        geometry.q_tilde, resolution);
    n.u_norm = box_integral([&](const std::vector<double>& p) { return spec.u(p); },
                            geometry.q1, resolution);
    return n;
}

namespace {

ProbeRow row_from_norms(const Subsolution& spec, const ProbeNorms& n, double eps, int k) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("poincare_ratio: eps outside (0,1)");
    const double error_power = static_cast<double>(k + 1);  // d = 1
    const double denom = n.grad_norm / eps + std::pow(eps, error_power) * n.u_norm;
    if (denom == 0.0 && n.lhs > 1e-12)
        throw std::logic_error("poincare_ratio: deviation positive with vanishing norms");
    ProbeRow row;
    row.spec = spec.name;
    row.eps = eps;
    row.lhs = n.lhs;
    row.grad_norm = n.grad_norm;
    row.u_norm = n.u_norm;
    row.ratio = denom == 0.0 ? 0.0 : n.lhs / denom;
    return row;
}

}  // namespace

ProbeRow poincare_ratio(const Subsolution& spec, double eps, const CylinderGeometry& geometry,
                        int resolution) {
    return row_from_norms(spec, compute_norms(spec, geometry, resolution), eps, geometry.k);
}

ProbeResult probe_sweep(const std::vector<Subsolution>& specs, const std::vector<double>& eps_grid,
                        const CylinderGeometry& geometry, int resolution, double required_r0) {
    if (specs.empty() || eps_grid.empty())
        throw std::invalid_argument("probe_sweep: empty spec family or eps grid");
    ProbeResult out;
    out.k = geometry.k;
    out.kappa = geometry.kappa;
    out.r0 = geometry.r0;
    out.resolution = resolution;

    if (required_r0 > 0.0) {
        for (int block = 0; block <= geometry.k; ++block) {
            const double need = CylinderGeometry::tilde_radius(
                geometry.k, block, geometry.kappa, required_r0, geometry.k > 1);
            const double have = geometry.q_tilde.axes[block + 1].second;
            if (have < need - 1e-9) out.geometry_ok = false;
        }
    }

    double c_fine = 0.0;
    for (const auto& spec : specs) {
        const ProbeNorms coarse = compute_norms(spec, geometry, resolution);
        const ProbeNorms fine = compute_norms(spec, geometry, 2 * resolution);
        for (double eps : eps_grid) {
            const ProbeRow row = row_from_norms(spec, coarse, eps, geometry.k);
            out.rows.push_back(row);
            out.empirical_constant = std::max(out.empirical_constant, row.ratio);
            c_fine = std::max(c_fine, row_from_norms(spec, fine, eps, geometry.k).ratio);
        }
    }
    out.refined_constant = c_fine;
    out.refinement_delta = std::abs(out.empirical_constant - c_fine) /
                           std::max({out.empirical_constant, c_fine, 1e-300});
    return out;
}

Json ProbeResult::to_json() const {
    Json doc;
    doc["format"] = "kintraj-probe";
    doc["version"] = 1;
    doc["k"] = k;
    doc["kappa"] = kappa;
    doc["r0"] = r0;
    doc["resolution"] = resolution;
    doc["geometry_ok"] = geometry_ok;
    Json rows_json = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["spec"] = r.spec;
        j["eps"] = r.eps;
        j["lhs"] = r.lhs;
        j["grad_norm"] = r.grad_norm;
        j["u_norm"] = r.u_norm;
        j["ratio"] = r.ratio;
        rows_json.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows_json);
    doc["empirical_constant"] = empirical_constant;
    doc["refined_constant"] = refined_constant;
    doc["refinement_delta"] = refinement_delta;
    return doc;
}

std::string ProbeResult::to_plot_data() const {
    std::ostringstream os;
    os << "spec\teps\tlhs\tgrad_norm\tu_norm\tratio\n";
    os.precision(17);
    for (const auto& r : rows)
        os << r.spec << "\t" << r.eps << "\t" << r.lhs << "\t" << r.grad_norm << "\t" << r.u_norm
           << "\t" << r.ratio << "\n";
    return os.str();
}

ChangeOfVariablesAudit change_of_variables_audit(const TrajectoryPair& pair, double r,
                                                 double sigma, double x, double v,
                                                 long long samples, unsigned long long seed,
                                                 const Integrand2D& integrand) {
    if (pair.k != 1)
        throw std::invalid_argument("change_of_variables_audit: single-step pairs only");
    if (r <= 0.0 || r > 1.0)
        throw std::invalid_argument("change_of_variables_audit: r must lie in (0, 1]");

    // Evaluated map: Phi(y, w) = M (y, w)^T + shift.
    const double m00 = pair.a.at(0, 0).eval(r, sigma);
    const double m01 = pair.a.at(0, 1).eval(r, sigma);
    const double m10 = pair.a.at(1, 0).eval(r, sigma);
    const double m11 = pair.a.at(1, 1).eval(r, sigma);
    const double s0 = pair.b.at(0, 0).eval(r, sigma) * x + pair.b.at(0, 1).eval(r, sigma) * v;
    const double s1 = pair.b.at(1, 0).eval(r, sigma) * x + pair.b.at(1, 1).eval(r, sigma) * v;
    const double det = m00 * m11 - m01 * m10;

    ChangeOfVariablesAudit out;
    out.det_value = det;
    if (std::abs(det) < 1e-12) {
        out.conditioning_warning = true;
        return out;
    }
    const double inv00 = m11 / det, inv01 = -m01 / det, inv10 = -m10 / det, inv11 = m00 / det;

    // Fixed smooth integrand on the image side unless the caller supplies one.
    const Integrand2D g = integrand ? integrand : Integrand2D([](double a, double b) {
        return 1.0 + 0.5 * std::sin(a) * std::cos(0.7 * b);
    });

    // Side 1: sample (y, w) uniformly on B = [-1,1]^2.
    const double box_area = 4.0;
    const long long batches = (samples + kBatch - 1) / kBatch;
    double lhs_sum = 0.0;
    long long lhs_count = 0;
    for (long long bi = 0; bi < batches; ++bi) {
        auto rng = batch_rng(seed, bi);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        const long long count = std::min<long long>(kBatch, samples - bi * kBatch);
        double acc = 0.0;
        for (long long i = 0; i < count; ++i) {
            const double y = unit(rng);
            const double w = unit(rng);
            acc += g(m00 * y + m01 * w + s0, m10 * y + m11 * w + s1);
        }
        lhs_sum += acc;
        lhs_count += count;
    }
    out.lhs = box_area * lhs_sum / double(lhs_count);

    // Side 2: rejection-sample the image parallelogram from its bounding
    // box; membership via the numerically inverted map.
    const double half_a = std::abs(m00) + std::abs(m01);
    const double half_b = std::abs(m10) + std::abs(m11);
    const double bbox_area = 4.0 * half_a * half_b;
    double rhs_sum = 0.0;
    long long rhs_count = 0, accepted = 0;
    for (long long bi = 0; bi < batches; ++bi) {
        auto rng = batch_rng(seed * 31 + 7, bi);
        std::uniform_real_distribution<double> ua(-half_a, half_a), ub(-half_b, half_b);
        const long long count = std::min<long long>(kBatch, samples - bi * kBatch);
        double acc = 0.0;
        long long acc_n = 0;
        for (long long i = 0; i < count; ++i) {
            const double za = ua(rng) + s0;
            const double zb = ub(rng) + s1;
            const double y = inv00 * (za - s0) + inv01 * (zb - s1);
            const double w = inv10 * (za - s0) + inv11 * (zb - s1);
            if (std::abs(y) <= 1.0 && std::abs(w) <= 1.0) {
                acc += g(za, zb);
                ++acc_n;
            }
        }
        rhs_sum += acc;
        accepted += acc_n;
        rhs_count += count;
    }
    out.acceptance_rate = double(accepted) / double(rhs_count);
    out.rhs = bbox_area * (rhs_sum / double(rhs_count)) / std::abs(det);
    out.relative_error =
        std::abs(out.lhs - out.rhs) / std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
    out.conditioning_warning = std::abs(det) < 1e-6 || out.acceptance_rate < 1e-3;
    return out;
}

GradientAudit trajectory_gradient_audit(const TrajectoryPair& pair, const Subsolution& spec,
                                        double r_exponent, const CylinderGeometry& geometry,
                                        long long samples, int grad_resolution,
                                        unsigned long long seed) {
    if (!spec.certified)
        throw std::logic_error("trajectory_gradient_audit: spec is not certified");
    if (r_exponent != 0.0 && r_exponent != -0.5)
        throw std::invalid_argument("trajectory_gradient_audit: r exponent must be 0 or -1/2");
    if (geometry.k != pair.k)
        throw std::invalid_argument("trajectory_gradient_audit: geometry/pair step mismatch");

    const CompiledPair compiled(pair);
    const std::size_t n_coords = static_cast<std::size_t>(pair.k) + 2;
    const bool singular = r_exponent == -0.5;

    struct Tally {
        double sum = 0.0;
        long long inside = 0;
        long long total = 0;
        long long violations = 0;
        Json witness;
    };

    const long long batches = (samples + kBatch - 1) / kBatch;
    Tally tally;
    std::vector<double> end0(n_coords), end1(n_coords), gamma;
    for (long long bi = 0; bi < batches; ++bi) {
        auto rng = batch_rng(seed, bi);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const long long count = std::min<long long>(kBatch, samples - bi * kBatch);
        for (long long i = 0; i < count; ++i) {
            for (std::size_t c = 0; c < n_coords; ++c) {
                const auto [lo0, hi0] = geometry.q1.axes[c];
                end0[c] = lo0 + (hi0 - lo0) * unit(rng);
                const auto [lo1, hi1] = geometry.q1_minus.axes[c];
                end1[c] = lo1 + (hi1 - lo1) * unit(rng);
            }
            const double u01 = unit(rng);
            // Importance sampling: for the singular weight draw r = u^2, so
            // the density is proportional to r^(-1/2) and the integrand
            // weight becomes the constant 2.
            const double r = singular ? u01 * u01 : u01;
            const double weight = singular ? 2.0 : 1.0;
            compiled.eval_path(end1, end0, r, gamma);
            ++tally.total;
            if (!geometry.q_tilde.contains(gamma, 1e-9)) {
                ++tally.violations;
                if (tally.witness.empty())
                    tally.witness = {{"r", r}, {"gamma", gamma}, {"end0", end0}, {"end1", end1}};
                continue;
            }
            ++tally.inside;
            tally.sum += weight * std::abs(spec.grad_v(gamma));
        }
    }

    GradientAudit out;
    const double vol = geometry.q1.volume() * geometry.q1_minus.volume();
    out.j_estimate = vol * tally.sum / double(tally.total);
    out.containment_fraction = double(tally.inside) / double(tally.total);
    out.violations = tally.violations;
    out.witness = tally.witness;
    out.grad_norm = box_integral(
        [&](const std::vector<double>& p) { return std::abs(spec.grad_v(p)); },
        geometry.q_tilde, grad_resolution);
    out.ratio = out.grad_norm > 0.0 ? out.j_estimate / out.grad_norm : 0.0;

    // Coarse re-estimate on the first quarter of the batches.
    {
        Tally coarse;
        const long long coarse_batches = std::max<long long>(1, batches / 4);
        for (long long bi = 0; bi < coarse_batches; ++bi) {
            auto rng = batch_rng(seed, bi);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const long long count = std::min<long long>(kBatch, samples - bi * kBatch);
            for (long long i = 0; i < count; ++i) {
                for (std::size_t c = 0; c < n_coords; ++c) {
                    const auto [lo0, hi0] = geometry.q1.axes[c];
                    end0[c] = lo0 + (hi0 - lo0) * unit(rng);
                    const auto [lo1, hi1] = geometry.q1_minus.axes[c];
                    end1[c] = lo1 + (hi1 - lo1) * unit(rng);
                }
                const double u01 = unit(rng);
                const double r = singular ? u01 * u01 : u01;
                const double weight = singular ? 2.0 : 1.0;
                compiled.eval_path(end1, end0, r, gamma);
                ++coarse.total;
                if (!geometry.q_tilde.contains(gamma, 1e-9)) continue;
                coarse.sum += weight * std::abs(spec.grad_v(gamma));
            }
        }
        const double j_coarse = vol * coarse.sum / double(coarse.total);
        out.coarse_ratio = out.grad_norm > 0.0 ? j_coarse / out.grad_norm : 0.0;
        out.refinement_delta =
            std::abs(out.ratio - out.coarse_ratio) / std::max({out.ratio, 1e-300});
    }
    return out;
}

}  // namespace kintraj
