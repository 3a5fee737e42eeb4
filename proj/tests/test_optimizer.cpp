#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "biquad/errors.hpp"
#include "biquad/optimizer.hpp"
#include "biquad/oracle.hpp"
#include "biquad/tilted.hpp"
#include "support/rng.hpp"

using namespace biquad;
using testsupport::Rng;

namespace {

const OptimizerConfig kFast{51, 6, 1e-8};

BiasPolynomial chsh() { return build_polynomial(TiltedParams{1.0, 0.0}); }

} // namespace

TEST_SUITE("optimizer") {

TEST_CASE("surface grid is row-major with s on the slow axis") {
    const auto grid = evaluate_surface(chsh(), 3);
    REQUIRE(grid.size() == 9);
    const double r2 = 2.0 * std::sqrt(2.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const SurfaceSample& smp = grid[static_cast<std::size_t>(i * 3 + j)];
            CHECK(smp.point.s_alice == doctest::Approx(-1.0 + i));
            CHECK(smp.point.t_bob == doctest::Approx(-1.0 + j));
            // ||CHSH|| is 2 on the boundary of the square and 2sqrt2 at (0,0).
            const double want = (i == 1 && j == 1) ? r2 : 2.0;
            CHECK(smp.norm == doctest::Approx(want).epsilon(1e-13));
        }
    CHECK_THROWS_AS(evaluate_surface(chsh(), 1), ConfigError);
    CHECK_THROWS_AS(evaluate_surface(chsh(), -5), ConfigError);
}

TEST_CASE("zero and constant polynomials give flat surfaces") {
    const OptimizationResult zero = optimize(BiasPolynomial{}, kFast);
    CHECK(zero.value == 0.0);
    CHECK_FALSE(zero.best_points.empty());
    CHECK_FALSE(zero.value_trace.empty());

    BiasPolynomial c;
    c.terms = {Term{-2.5, Word(""), Word("")}};
    const OptimizationResult flat = optimize(c, kFast);
    CHECK(flat.value == doctest::Approx(2.5).epsilon(1e-15));
    // Every coarse sample attains the value, so the best set spans the square.
    CHECK(flat.best_points.size() >= 10);
    CHECK_FALSE(flat.best_intervals.empty());
}

TEST_CASE("CHSH maximum sits at the origin with value 2sqrt2") {
    const OptimizationResult res = optimize(chsh(), kFast);
    CHECK(res.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(res.best_points.size() == 1);
    CHECK(std::abs(res.best_points[0].s_alice) <= 1e-6);
    CHECK(std::abs(res.best_points[0].t_bob) <= 1e-6);
    CHECK(res.best_intervals.empty());
    CHECK(res.refinement_depth == kFast.refine_iters);
    CHECK(res.tolerance == kFast.tol);
    CHECK(res.grid.size() == 51u * 51u);
}

TEST_CASE("tilted interior optimum lands on (0, t_star)") {
    const TiltedParams p{1.0, 0.5};
    const OptimizationResult res = optimize(build_polynomial(p), kFast);
    CHECK(res.value == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
    REQUIRE(res.best_points.size() == 1);
    CHECK(std::abs(res.best_points[0].s_alice - 0.0) <= 1e-6);
    CHECK(std::abs(res.best_points[0].t_bob - t_star(p)) <= 1e-6);
}

TEST_CASE("corner-dominated parameters produce the two corner maximizers") {
    const OptimizationResult res = optimize(build_polynomial(TiltedParams{0.2, 1.0}), kFast);
    CHECK(res.value == doctest::Approx(4.0).epsilon(1e-12));
    REQUIRE(res.best_points.size() == 2);
    for (const auto& pt : res.best_points) {
        CHECK(std::abs(std::abs(pt.s_alice) - 1.0) <= 1e-6);
        CHECK(std::abs(pt.t_bob + 1.0) <= 1e-6);
    }
    CHECK(res.best_intervals.empty());
}

TEST_CASE("edge-dominated parameters report a best interval") {
    const OptimizationResult res = optimize(build_polynomial(TiltedParams{1.5, 0.8}), kFast);
    CHECK(res.value == doctest::Approx(4.6).epsilon(1e-12));
    CHECK(res.best_points.size() >= 10);
    for (const auto& pt : res.best_points) CHECK(std::abs(pt.t_bob - 1.0) <= 1e-6);
    REQUIRE(res.best_intervals.size() == 1);
    const BestInterval& iv = res.best_intervals[0];
    CHECK(iv.varying == 's');
    CHECK(iv.fixed_value == doctest::Approx(1.0));
    CHECK(iv.lo == doctest::Approx(-1.0));
    CHECK(iv.hi == doctest::Approx(1.0));
}

TEST_CASE("value trace is monotone and ends at the reported value") {
    const OptimizationResult res = optimize(build_polynomial(TiltedParams{1.2, 0.3}), kFast);
    REQUIRE_FALSE(res.value_trace.empty());
    for (std::size_t i = 1; i < res.value_trace.size(); ++i)
        CHECK(res.value_trace[i] >= res.value_trace[i - 1]);
    CHECK(res.value_trace.back() == doctest::Approx(res.value));
    // The coarse-grid stage can only be improved by refinement.
    double coarse = 0.0;
    for (const auto& smp : res.grid) coarse = std::max(coarse, smp.norm);
    CHECK(res.value >= coarse);
    CHECK(res.value_trace.front() == doctest::Approx(coarse));
}

TEST_CASE("refinement disabled returns the best grid ties") {
    const OptimizationResult res = optimize(chsh(), OptimizerConfig{41, 0, 1e-8});
    // 41-point grid contains (0,0) exactly, the unique maximizer.
    CHECK(res.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(res.best_points.size() == 1);
    CHECK(res.best_points[0].s_alice == doctest::Approx(0.0));
    CHECK(res.best_points[0].t_bob == doctest::Approx(0.0));
    CHECK(res.refinement_depth == 0);
}

TEST_CASE("optimize is deterministic") {
    const BiasPolynomial p = Rng(401).polynomial(5, 3, 1.5);
    const OptimizationResult a = optimize(p, kFast);
    const OptimizationResult b = optimize(p, kFast);
    CHECK(a.value == b.value); // bitwise
    REQUIRE(a.best_points.size() == b.best_points.size());
    for (std::size_t i = 0; i < a.best_points.size(); ++i) {
        CHECK(a.best_points[i].s_alice == b.best_points[i].s_alice);
        CHECK(a.best_points[i].t_bob == b.best_points[i].t_bob);
    }
    CHECK(a.value_trace == b.value_trace);
}

TEST_CASE("optimizer value dominates sampled strategies") {
    Rng rng(402);
    for (int trial = 0; trial < 5; ++trial) {
        const BiasPolynomial p = rng.polynomial(4, 3, 1.0);
        const OptimizationResult res = optimize(p, kFast);
        const SampledStrategy best = brute_force_value(p, 2000, 7);
        CHECK(best.achieved <= res.value + 1e-6);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(optimize(chsh(), OptimizerConfig{1, 6, 1e-8}), ConfigError);
    CHECK_THROWS_AS(optimize(chsh(), OptimizerConfig{101, -1, 1e-8}), ConfigError);
    CHECK_THROWS_AS(optimize(chsh(), OptimizerConfig{101, 6, -1.0}), ConfigError);
}

TEST_CASE("surface CSV has a header and one row per sample") {
    const auto grid = evaluate_surface(chsh(), 4);
    const std::string csv = surface_to_csv(grid);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "s,t,norm");
    int rows = 0;
    double first_s = 99, first_t = 99, first_norm = 0;
    while (std::getline(in, line)) {
        if (rows == 0) {
            std::istringstream row(line);
            char comma;
            row >> first_s >> comma >> first_t >> comma >> first_norm;
        }
        ++rows;
    }
    CHECK(rows == 16);
    CHECK(first_s == doctest::Approx(-1.0));
    CHECK(first_t == doctest::Approx(-1.0));
    CHECK(first_norm == doctest::Approx(2.0).epsilon(1e-13));
}

}
