#include "kintraj/verify.hpp"

#include "kintraj/baselines.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace kintraj;

namespace {

// Faster grids for unit tests; acceptance runs the declared defaults.
SupGrid test_grid() {
    SupGrid g;
    g.r_points = 96;
    g.sigma_points = 24;
    return g;
}

}  // namespace

TEST_CASE("structural checks pass for small step counts") {
    for (int k : {1, 2, 3}) {
        for (const auto& record : verify_structural(build_pair(k))) {
            INFO(record.name << " k=" << k);
            CHECK(record.pass);
        }
    }
}

TEST_CASE("an injected coefficient fault is caught with a witness") {
    TrajectoryPair pair = build_pair(1);
    pair.a.set(0, 0, pair.a.at(0, 0) + PuiseuxPoly::constant(1));
    const auto records = verify_structural(pair);
    bool boundary_failed = false;
    for (const auto& record : records)
        if (record.name == "structural.boundary" && !record.pass) {
            boundary_failed = true;
            CHECK(record.witness.at("row") == 1);
            CHECK(record.witness.at("col") == 1);
        }
    CHECK(boundary_failed);
}

TEST_CASE("determinant of the first matrix is the conjectured monomial") {
    CHECK(determinant_exponent(1) == Rational(BigInt(9), BigInt(2)));
    CHECK(determinant_exponent(2) == Rational(BigInt(59), BigInt(6)));
    CHECK(determinant_exponent(3) == Rational(BigInt(205), BigInt(12)));
    for (int k : {1, 2, 3}) {
        const DetCheck det = verify_det_a(build_pair(k));
        CHECK(det.record.pass);
        CHECK(det.det ==
              PuiseuxPoly::monomial(1, determinant_exponent(k), 0));
    }
}

TEST_CASE("inverse tail column matches baselines and decays") {
    for (int k : {1, 2, 3}) {
        const InverseTail tail = inverse_last_column(build_pair(k));
        CHECK(tail.record.pass);
        const auto want = k == 1   ? baseline_inverse_tail_k1()
                          : k == 2 ? baseline_inverse_tail_k2()
                                   : baseline_inverse_tail_k3();
        REQUIRE(tail.column.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(tail.column[i] == want[i]);
    }
}

TEST_CASE("matrix times computed inverse column gives det times the last unit vector") {
    for (int k = 1; k <= 6; ++k) {
        const TrajectoryPair pair = build_pair(k);
        const InverseTail tail = inverse_last_column(pair);
        REQUIRE(tail.record.pass);
        const auto prod = pair.a.mul_vector(tail.column);
        for (int i = 0; i <= k; ++i) {
            if (i == k)
                CHECK(prod[i] == PuiseuxPoly::constant(1));
            else
                CHECK(prod[i].is_zero());
        }
    }
}

TEST_CASE("det B: closed form, boundary values, positivity") {
    const TrajectoryPair pair = build_pair(1);
    const PuiseuxPoly det = pair.b.determinant();
    CHECK(det == baseline_det_b_k1());
    CHECK(det.eval(0.0, 1.0) == doctest::Approx(1.0));   // B(0) = Id
    CHECK(det.eval(1.0, 1.0) == doctest::Approx(0.0).scale(1.0));  // (sqrt(r)-1)^4 factor

    const DetBResult res = verify_det_b_positive(pair);
    for (const auto& record : res.records) {
        INFO(record.name);
        CHECK(record.pass);
    }
    CHECK(res.min_value > 0.0);

    // denser-grid oracle agrees with the refined minimum
    const CompiledPoly cdet(det);
    double brute = 1e300;
    for (int i = 0; i <= 100000; ++i)
        brute = std::min(brute, cdet.eval(0.5 * i / 100000.0, 1.0));
    CHECK(res.min_value == doctest::Approx(brute).epsilon(1e-6));
}

TEST_CASE("det B positivity for two and three steps") {
    for (int k : {2, 3}) {
        const DetBResult res = verify_det_b_positive(build_pair(k));
        INFO("k=" << k);
        CHECK(res.min_value > 0.0);
        for (const auto& record : res.records)
            if (record.name == "det_b.positive_min" || record.name == "det_b.sigma_free")
                CHECK(record.pass);
    }
}

TEST_CASE("c0 estimate: finite, stable, homogeneous") {
    const TrajectoryPair pair = build_pair(1);
    const GapGeometry gap{1.0};
    const ConstantEstimate c0 = estimate_c0(pair, gap, test_grid());
    CHECK(std::isfinite(c0.value));
    CHECK(c0.value > 0.0);
    CHECK(c0.refinement_delta < 0.01);

    // scaling the column by 2 doubles the estimate
    const InverseTail tail = inverse_last_column(pair);
    std::vector<PuiseuxPoly> doubled;
    for (const auto& e : tail.column) doubled.push_back(Rational(2) * e);
    const ConstantEstimate c0x2 = estimate_c0_from_column(doubled, gap, test_grid());
    CHECK(c0x2.value == doctest::Approx(2.0 * c0.value).epsilon(1e-9));

    // the r = 1 boundary value of the weighted column never exceeds the sup
    // (at r = 1 the column is the last unit vector, weight 1/(1+|sigma|))
    CHECK(c0.value >= 1.0 / (1.0 + 1.0) - 1e-12);
}

TEST_CASE("c1 estimate: finite and stable under range doubling") {
    const TrajectoryPair pair = build_pair(1);
    const ConstantEstimate c1 = estimate_c1(pair, GapGeometry{1.0}, test_grid());
    CHECK(std::isfinite(c1.value));
    CHECK(c1.value > 0.0);
    CHECK(c1.refinement_delta < 0.01);
    // single-step bottom row: the first-column derivative dominates at r=0
    // with |sigma| |d/dr a_21| = 21/2
    CHECK(c1.value == doctest::Approx(10.5).epsilon(1e-6));

    GapGeometry wide{1.0};
    wide.kappa = 1.0;
    const ConstantEstimate c1_wide =
        estimate_c1(pair, GapGeometry{2.0}, test_grid());  // doubles |sigma| range
    CHECK(std::isfinite(c1_wide.value));
}

TEST_CASE("containment radius at unit gap") {
    const TrajectoryPair pair = build_pair(1);
    const RadiusReport rr = compute_r0(pair, GapGeometry{1.0}, test_grid());
    CHECK(rr.r0 >= 1.0);
    CHECK(rr.r0 <= 7.0);
    CHECK(rr.refinement_delta < 1e-4);
    // at r = 0 the second matrix is the identity: the x-block ratio stays <= 1
    CHECK(rr.theorem_ratio[0] <= rr.r0 + 1e-12);
    REQUIRE(rr.block_sup.size() == 2);
    // x-block sup ratio at the theorem normalizer (1 + kappa)
    CHECK(rr.theorem_ratio[0] == doctest::Approx(rr.block_sup[0] / 2.0));
}

TEST_CASE("v-block ratio is non-increasing in the gap parameter") {
    const TrajectoryPair pair = build_pair(1);
    double prev = 1e300;
    for (double kappa : {0.5, 1.0, 2.0}) {
        const RadiusReport rr = compute_r0(pair, GapGeometry{kappa}, test_grid());
        const double v_ratio = rr.conjecture_ratio.back();
        CHECK(v_ratio <= prev + 1e-9);
        prev = v_ratio;
    }
}

TEST_CASE("two-step radii are finite under the k-step normalizers") {
    const RadiusReport rr = compute_r0(build_pair(2), GapGeometry{1.0}, test_grid());
    REQUIRE(rr.conjecture_ratio.size() == 3);
    for (double v : rr.conjecture_ratio) {
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }
}

TEST_CASE("baseline comparison passes for built pairs") {
    for (int k : {1, 2, 3}) CHECK(verify_against_baselines(build_pair(k)).pass);
}

TEST_CASE("full report: determinism and check selection") {
    VerifyOptions opts = VerifyOptions::from_checks("structural,det,inverse,baseline");
    const VerificationReport r1 = verify_pair(build_pair(2), opts);
    const VerificationReport r2 = verify_pair(build_pair(2), opts);
    CHECK(r1.all_pass());
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    // selected checks only
    for (const auto& c : r1.checks) {
        const bool known = c.name.rfind("structural.", 0) == 0 ||
                           c.name.rfind("det_a.", 0) == 0 ||
                           c.name.rfind("inverse_tail.", 0) == 0 || c.name == "baseline.match";
        CHECK(known);
    }
    CHECK_THROWS_AS(VerifyOptions::from_checks("nonsense"), std::invalid_argument);
}
