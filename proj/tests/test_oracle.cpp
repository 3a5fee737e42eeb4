#include <doctest.h>

#include <cmath>

#include "biquad/errors.hpp"
#include "biquad/oracle.hpp"
#include "biquad/tilted.hpp"
#include "support/rng.hpp"

using namespace biquad;
using testsupport::Rng;

namespace {

BiasPolynomial chsh() { return build_polynomial(TiltedParams{1.0, 0.0}); }

constexpr double kPi = 3.14159265358979323846;

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("hand-picked optimal CHSH strategy achieves 2sqrt2") {
    // Alice measures Z and X, Bob the diagonal pair (Z+-X)/sqrt2.
    const double got = evaluate_strategy(chsh(), {0.0, kPi / 2, kPi / 4, -kPi / 4});
    CHECK(got == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
    // A deliberately bad strategy stays well below.
    CHECK(evaluate_strategy(chsh(), {0.0, 0.0, 0.0, 0.0}) < 2.1);
}

TEST_CASE("strategy value only depends on relative angles within each side") {
    Rng rng(801);
    const BiasPolynomial p = rng.polynomial(5, 3, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::array<double, 4> base = {rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi),
                                            rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
        const double phi_a = rng.uniform(0, 2 * kPi), phi_b = rng.uniform(0, 2 * kPi);
        const double v0 = evaluate_strategy(p, base);
        const double v1 = evaluate_strategy(
            p, {base[0] + phi_a, base[1] + phi_a, base[2] + phi_b, base[3] + phi_b});
        CHECK(v1 == doctest::Approx(v0).epsilon(1e-10));
    }
}

TEST_CASE("sampling approaches the CHSH optimum from below") {
    const SampledStrategy best = brute_force_value(chsh(), 10000, 42);
    const double r2 = 2 * std::sqrt(2.0);
    CHECK(best.achieved >= r2 - 1e-3);
    CHECK(best.achieved <= r2 + 1e-9);
    for (double a : best.alice_angles) {
        CHECK(a >= 0.0);
        CHECK(a < 2 * kPi);
    }
    for (double a : best.bob_angles) {
        CHECK(a >= 0.0);
        CHECK(a < 2 * kPi);
    }
    // The reported angles reproduce the reported value.
    const double replay = evaluate_strategy(
        chsh(), {best.alice_angles[0], best.alice_angles[1], best.bob_angles[0],
                 best.bob_angles[1]});
    CHECK(replay == doctest::Approx(best.achieved).epsilon(1e-12));
}

TEST_CASE("trivial polynomials") {
    CHECK(brute_force_value(BiasPolynomial{}, 100, 1).achieved == doctest::Approx(0.0));
    BiasPolynomial id;
    id.terms = {Term{1.0, Word(""), Word("")}};
    CHECK(brute_force_value(id, 100, 1).achieved == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("doubling the sample count never decreases the value") {
    Rng rng(802);
    for (int trial = 0; trial < 3; ++trial) {
        const BiasPolynomial p = rng.polynomial(4, 3, 1.0);
        const unsigned long seed = 1000 + static_cast<unsigned long>(trial);
        const double v1 = brute_force_value(p, 500, seed).achieved;
        const double v2 = brute_force_value(p, 1000, seed).achieved;
        const double v4 = brute_force_value(p, 2000, seed).achieved;
        CHECK(v1 <= v2);
        CHECK(v2 <= v4);
    }
}

TEST_CASE("sampling is deterministic in (samples, seed)") {
    const BiasPolynomial p = build_polynomial(TiltedParams{1.0, 0.5});
    const SampledStrategy a = brute_force_value(p, 3000, 9);
    const SampledStrategy b = brute_force_value(p, 3000, 9);
    CHECK(a.achieved == b.achieved); // bitwise
    CHECK(a.alice_angles == b.alice_angles);
    CHECK(a.bob_angles == b.bob_angles);
}

TEST_CASE("tilted family lower bounds respect the closed-form values") {
    const TiltedParams p{1.0, 0.5};
    const double value = classify(p).value(); // sqrt(10)
    const double got = brute_force_value(build_polynomial(p), 20000, 42).achieved;
    CHECK(got <= value + 1e-9);
    CHECK(got >= value - 1e-2);
}

TEST_CASE("sample count must be positive") {
    CHECK_THROWS_AS(brute_force_value(chsh(), 0, 42), ConfigError);
    CHECK_THROWS_AS(brute_force_value(chsh(), -5, 42), ConfigError);
}

}
