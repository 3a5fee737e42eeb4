#pragma once

// Brute-force lower-bound oracle, independent of the reduce/assemble/Jacobi
// pipeline it is used to cross-check.
//
// Strategies are sampled as qubit observable pairs
//     g(theta) = cos(theta) Z + sin(theta) X
// for four angles (Alice u, Alice v, Bob u, Bob v) drawn from a Halton
// sequence on [0, 2pi)^4 with a seed-derived rotation.  Each sample's value
// is the top eigenvalue of the Hermitian part of the directly-evaluated
// polynomial, obtained by power iteration with a Rayleigh-quotient estimate -
// always a certified lower bound on the operator norm at the sample's
// effective anticommutation point, hence on the global optimizer value.

#include <array>

#include "biquad/word.hpp"

namespace biquad {

struct SampledStrategy {
    std::array<double, 2> alice_angles{}; // theta_u, theta_v
    std::array<double, 2> bob_angles{};
    double achieved = 0.0;
};

// Value of one explicit strategy; angles ordered (alice_u, alice_v, bob_u,
// bob_v).  Exposed so tests can probe hand-picked strategies.
double evaluate_strategy(const BiasPolynomial& p, const std::array<double, 4>& angles);

// Best of `samples` Halton samples.  Deterministic for fixed (samples, seed),
// and extending the sample count keeps the earlier prefix, so doubling never
// decreases the result.  Throws ConfigError for samples < 1.
SampledStrategy brute_force_value(const BiasPolynomial& p, long samples, unsigned long seed);

} // namespace biquad
