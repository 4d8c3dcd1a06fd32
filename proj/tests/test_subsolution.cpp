#include "kintraj/subsolution.hpp"

#include <doctest.h>

#include <cmath>

using namespace kintraj;

namespace {

CylinderGeometry geom_k1() { return CylinderGeometry::make(1, 1.0, 2.0); }

}  // namespace

TEST_CASE("constant and affine specs certify") {
    const CylinderGeometry g = geom_k1();
    const Subsolution c = make_subsolution(SubsolutionKind::constant, {{"level", 1.0}}, g);
    CHECK(c.certified);
    CHECK(c.residual_bound == 0.0);

    const double v_radius = g.q_tilde.axes.back().second;
    const Subsolution a = make_subsolution(SubsolutionKind::affine_v,
                                           {{"offset", v_radius + 1.0}, {"slope", 1.0}}, g);
    CHECK(a.certified);
    CHECK(a.min_value >= 0.0);
}

TEST_CASE("affine spec with insufficient offset is rejected") {
    // offset below the velocity radius leaves u negative somewhere
    CHECK_THROWS_AS(make_subsolution(SubsolutionKind::affine_v,
                                     {{"offset", 1.0}, {"slope", 1.0}}, geom_k1()),
                    certification_error);
}

TEST_CASE("v_heat satisfies its residual certificate") {
    const Subsolution s = make_subsolution(SubsolutionKind::v_heat, {}, geom_k1());
    CHECK(s.certified);
    CHECK(std::abs(s.residual_bound) < 1e-10);
    // also valid for the two-step operator (x-independent)
    const CylinderGeometry g2 = CylinderGeometry::make(2, 1.0, 2.0);
    CHECK(make_subsolution(SubsolutionKind::v_heat, {}, g2).certified);
}

TEST_CASE("drifted gaussian certifies for the single-step operator only") {
    const Subsolution s = make_subsolution(SubsolutionKind::kolmogorov_gaussian, {}, geom_k1());
    CHECK(s.certified);
    CHECK(std::abs(s.residual_bound) < 1e-8);
    CHECK_THROWS_AS(make_subsolution(SubsolutionKind::kolmogorov_gaussian, {},
                                     CylinderGeometry::make(2, 1.0, 2.0)),
                    std::invalid_argument);
}

TEST_CASE("smoothed positive part is a strict subsolution") {
    const Subsolution s = make_subsolution(SubsolutionKind::shifted_positive_part_smoothed,
                                           {{"shift", 0.5}, {"smoothing", 0.3}}, geom_k1());
    CHECK(s.certified);
    CHECK(s.residual_bound <= 0.0);
    CHECK(s.min_value >= 0.0);
}

TEST_CASE("a wrong gradient evaluator fails the finite-difference cross-check") {
    const CylinderGeometry g = geom_k1();
    Subsolution bad;
    bad.name = "bad";
    bad.k = 1;
    bad.lambda = 1.0;
    bad.u = [](const std::vector<double>& p) { return 2.0 + p[2] * p[2]; };
    bad.grad_v = [](const std::vector<double>&) { return 0.0; };  // should be 2v
    bad.residual = [](const std::vector<double>&) { return -2.0; };
    CHECK_THROWS_AS(certify(bad, g), certification_error);
}

TEST_CASE("a positive residual is rejected") {
    const CylinderGeometry g = geom_k1();
    Subsolution bad;
    bad.name = "anti";
    bad.k = 1;
    bad.lambda = 1.0;
    // u = exp(t): du/dt = u > 0, so the operator residual is positive
    bad.u = [](const std::vector<double>& p) { return std::exp(p[0]); };
    bad.grad_v = [](const std::vector<double>&) { return 0.0; };
    bad.residual = [](const std::vector<double>& p) { return std::exp(p[0]); };
    CHECK_THROWS_AS(certify(bad, g), certification_error);
}

TEST_CASE("kind parsing") {
    CHECK(subsolution_kind_from_string("affine") == SubsolutionKind::affine_v);
    CHECK(subsolution_kind_from_string("v_heat") == SubsolutionKind::v_heat);
    CHECK_THROWS_AS(subsolution_kind_from_string("unknown"), std::invalid_argument);
}
