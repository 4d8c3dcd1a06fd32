#include "kintraj/probe.hpp"

#include "kintraj/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace kintraj;

namespace {

struct ProbeFixture {
    TrajectoryPair pair = build_pair(1);
    double r0;
    CylinderGeometry geom;

    ProbeFixture() {
        SupGrid grid;
        grid.r_points = 96;
        grid.sigma_points = 24;
        r0 = compute_r0(pair, GapGeometry{1.0}, grid).r0;
        geom = CylinderGeometry::make(1, 1.0, r0);
    }

    Subsolution affine(double offset = 0.0, double slope = 1.0) const {
        const double off = offset > 0.0 ? offset : geom.q_tilde.axes.back().second + 1.0;
        return make_subsolution(SubsolutionKind::affine_v,
                                {{"offset", off}, {"slope", slope}}, geom);
    }
};

}  // namespace

TEST_CASE("constant subsolution: zero deviation, zero ratio") {
    const ProbeFixture fx;
    const Subsolution c = make_subsolution(SubsolutionKind::constant, {{"level", 3.0}}, fx.geom);
    const ProbeRow row = poincare_ratio(c, 0.5, fx.geom, 32);
    CHECK(std::abs(row.lhs) < 1e-12);
    CHECK(row.grad_norm == doctest::Approx(0.0));
    CHECK(row.u_norm == doctest::Approx(3.0 * 4.0).epsilon(1e-12));
    CHECK(row.ratio == doctest::Approx(0.0));
}

TEST_CASE("affine subsolution matches the hand-computed ratio") {
    const ProbeFixture fx;
    const double offset = fx.geom.q_tilde.axes.back().second + 1.0;
    const double slope = 0.75;
    const Subsolution a = fx.affine(offset, slope);
    const double eps = 0.4;
    const ProbeRow row = poincare_ratio(a, eps, fx.geom, 64);

    // past mean = offset, so the deviation integrand is (slope*v)_+ and
    //   lhs = 1 * 2 * slope/2 = slope,
    //   grad = slope * |Qtilde|, u = 4 * offset.
    const double lhs_exact = slope;
    const double grad_exact = slope * fx.geom.q_tilde.volume();
    const double u_exact = 4.0 * offset;
    const double ratio_exact = lhs_exact / (grad_exact / eps + eps * eps * u_exact);
    CHECK(row.lhs == doctest::Approx(lhs_exact).epsilon(0.01));
    CHECK(row.grad_norm == doctest::Approx(grad_exact).epsilon(1e-12));
    CHECK(row.u_norm == doctest::Approx(u_exact).epsilon(1e-12));
    CHECK(row.ratio == doctest::Approx(ratio_exact).epsilon(0.01));
}

TEST_CASE("adding a constant leaves the deviation unchanged") {
    const ProbeFixture fx;
    const double offset = fx.geom.q_tilde.axes.back().second + 1.0;
    const ProbeRow base = poincare_ratio(fx.affine(offset), 0.5, fx.geom, 32);
    const ProbeRow shifted = poincare_ratio(fx.affine(offset + 5.0), 0.5, fx.geom, 32);
    CHECK(shifted.lhs == doctest::Approx(base.lhs).epsilon(1e-10));
    CHECK(shifted.grad_norm == doctest::Approx(base.grad_norm).epsilon(1e-12));
}

TEST_CASE("scaling the subsolution leaves the ratio invariant") {
    const ProbeFixture fx;
    const double offset = fx.geom.q_tilde.axes.back().second + 1.0;
    const double lambda = 3.5;
    const ProbeRow base = poincare_ratio(fx.affine(offset, 1.0), 0.3, fx.geom, 32);
    const ProbeRow scaled =
        poincare_ratio(fx.affine(lambda * offset, lambda), 0.3, fx.geom, 32);
    CHECK(scaled.lhs == doctest::Approx(lambda * base.lhs).epsilon(1e-10));
    CHECK(scaled.ratio == doctest::Approx(base.ratio).epsilon(1e-10));
}

TEST_CASE("v_heat ratio is stable under resolution doubling") {
    const ProbeFixture fx;
    // centered off the origin so the kernel grows in time on the unit ball
    // and the positive-part deviation is nontrivial
    const Subsolution s = make_subsolution(SubsolutionKind::v_heat, {{"center", 3.0}}, fx.geom);
    const ProbeRow coarse = poincare_ratio(s, 0.5, fx.geom, 64);
    const ProbeRow fine = poincare_ratio(s, 0.5, fx.geom, 128);
    CHECK(std::isfinite(coarse.ratio));
    CHECK(fine.ratio > 0.0);
    CHECK(std::abs(coarse.ratio - fine.ratio) / fine.ratio < 0.02);

    // the origin-centered kernel decays in time: deviation identically zero
    const Subsolution centered = make_subsolution(SubsolutionKind::v_heat, {}, fx.geom);
    const ProbeRow zero = poincare_ratio(centered, 0.5, fx.geom, 64);
    CHECK(zero.lhs == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("sweep over a family") {
    const ProbeFixture fx;
    const std::vector<double> eps = {0.2, 0.5, 0.8};

    // constants alone give an identically zero empirical constant
    const std::vector<Subsolution> constants = {
        make_subsolution(SubsolutionKind::constant, {{"level", 2.0}}, fx.geom)};
    const ProbeResult zero = probe_sweep(constants, eps, fx.geom, 32, fx.r0);
    CHECK(zero.empirical_constant == doctest::Approx(0.0));
    CHECK(zero.geometry_ok);

    const std::vector<Subsolution> family = {
        constants[0], fx.affine(), make_subsolution(SubsolutionKind::v_heat, {}, fx.geom)};
    const ProbeResult res = probe_sweep(family, eps, fx.geom, 32, fx.r0);
    CHECK(res.geometry_ok);
    CHECK(res.empirical_constant > 0.0);
    for (const auto& row : res.rows) CHECK(std::isfinite(row.ratio));
    CHECK(res.refinement_delta < 0.05);

    // deliberately shrunken enlarged cylinder is flagged
    const CylinderGeometry small = CylinderGeometry::make(1, 1.0, 0.4);
    const std::vector<Subsolution> on_small = {
        make_subsolution(SubsolutionKind::constant, {{"level", 2.0}}, small)};
    const ProbeResult flagged = probe_sweep(on_small, eps, small, 32, fx.r0);
    CHECK_FALSE(flagged.geometry_ok);

    CHECK_THROWS_AS(probe_sweep({}, eps, fx.geom, 32), std::invalid_argument);
}

TEST_CASE("change of variables: measure preservation for g = 1") {
    const ProbeFixture fx;
    const auto audit = change_of_variables_audit(fx.pair, 0.5, -2.0, 0.3, -0.2, 400000, 17,
                                                 [](double, double) { return 1.0; });
    CHECK(audit.lhs == doctest::Approx(4.0));  // |B| exactly
    CHECK(audit.relative_error < 0.01);
    CHECK_FALSE(audit.conditioning_warning);
}

TEST_CASE("change of variables: affine integrand within two percent") {
    const ProbeFixture fx;
    const auto audit = change_of_variables_audit(
        fx.pair, 0.25, -2.0, 0.3, -0.2, 1000000, 17,
        [](double a, double b) { return 1.0 + 0.3 * a - 0.2 * b; });
    CHECK(audit.relative_error < 0.02);
}

TEST_CASE("change of variables: Monte Carlo error shrinks with samples") {
    const ProbeFixture fx;
    const auto coarse = change_of_variables_audit(fx.pair, 0.5, -2.0, 0.3, -0.2, 10000, 99);
    const auto fine = change_of_variables_audit(fx.pair, 0.5, -2.0, 0.3, -0.2, 1000000, 99);
    CHECK(fine.relative_error < 0.02);
    CHECK(fine.relative_error <= coarse.relative_error + 1e-4);
}

TEST_CASE("change of variables: vanishing determinant raises the conditioning flag") {
    const ProbeFixture fx;
    const auto audit = change_of_variables_audit(fx.pair, 1e-3, -2.0, 0.3, -0.2, 1000);
    CHECK(audit.conditioning_warning);
}

TEST_CASE("gradient audit: zero gradient gives zero integral") {
    const ProbeFixture fx;
    const Subsolution c = make_subsolution(SubsolutionKind::constant, {{"level", 1.0}}, fx.geom);
    const GradientAudit audit = trajectory_gradient_audit(fx.pair, c, 0.0, fx.geom, 20000);
    CHECK(audit.j_estimate == doctest::Approx(0.0));
    CHECK(audit.containment_fraction == doctest::Approx(1.0));
    CHECK(audit.violations == 0);
}

TEST_CASE("gradient audit: v_heat with both weights") {
    const ProbeFixture fx;
    const Subsolution s = make_subsolution(SubsolutionKind::v_heat, {}, fx.geom);
    for (double k_exp : {0.0, -0.5}) {
        const GradientAudit audit =
            trajectory_gradient_audit(fx.pair, s, k_exp, fx.geom, 200000);
        INFO("k_exp=" << k_exp);
        CHECK(audit.containment_fraction == doctest::Approx(1.0));
        CHECK(audit.violations == 0);
        CHECK(std::isfinite(audit.j_estimate));
        CHECK(audit.j_estimate > 0.0);
        CHECK(audit.refinement_delta < 0.05);
    }
}

TEST_CASE("gradient audit: shrunken cylinder reports violations with a witness") {
    const ProbeFixture fx;
    const CylinderGeometry small = CylinderGeometry::make(1, 1.0, 0.5);
    const Subsolution c = make_subsolution(SubsolutionKind::constant, {{"level", 1.0}}, small);
    const GradientAudit audit = trajectory_gradient_audit(fx.pair, c, 0.0, small, 20000);
    CHECK(audit.violations > 0);
    CHECK(audit.containment_fraction < 1.0);
    CHECK_FALSE(audit.witness.empty());
}

TEST_CASE("probe result serialization") {
    const ProbeFixture fx;
    const std::vector<Subsolution> family = {
        make_subsolution(SubsolutionKind::constant, {{"level", 2.0}}, fx.geom)};
    const ProbeResult res = probe_sweep(family, {0.5}, fx.geom, 32, fx.r0);
    const Json doc = res.to_json();
    CHECK(doc.at("format") == "kintraj-probe");
    CHECK(doc.at("rows").size() == 1);
    const std::string plot = res.to_plot_data();
    CHECK(plot.find("spec\teps") == 0);
}
