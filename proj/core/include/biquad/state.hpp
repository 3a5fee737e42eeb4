#pragma once

// Optimal-state extraction and two-point correlations.
//
// At a fixed point of the anticommutation square the assembled matrix is a
// 4x4 Hermitian operator; its top eigenvector is the optimal (pure) state at
// that point.  The Schmidt split across the Alice/Bob tensor factors and the
// correlations <w_A (x) w_B> against realized words are what the closed-form
// results predict, so they are the observable output of this module.

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "biquad/matrix.hpp"
#include "biquad/reduce.hpp"
#include "biquad/word.hpp"

namespace biquad {

// Schmidt decomposition vector = a * e1 (x) f1 + d * e2 (x) f2 with
// orthonormal pairs and a >= d >= 0.
struct SchmidtData {
    double a = 0.0;
    double d = 0.0;
    Vec2 alice1{}, alice2{};
    Vec2 bob1{}, bob2{};
};

struct OptimalState {
    Vec4 vector{};          // unit top eigenvector, largest entry real positive
    double eigenvalue = 0.0;
    bool degenerate = false; // top eigenvalue within 1e-9 of the next one
    AnticommPoint point;
    SchmidtData schmidt;
};

// Reduces and assembles p at pt, checks Hermiticity (ContractError if the
// assembly is not Hermitian), and extracts the top eigenvector with a
// deterministic phase convention.
OptimalState extract_state(const BiasPolynomial& p, const AnticommPoint& pt);

// <state| w_A (x) w_B |state> with words realized at state.point (standard
// realization, letter-by-letter product, no reduction).
std::complex<double> moment(const OptimalState& state, const Word& alice, const Word& bob);

// All pairs of words of length <= max_len per side, keyed by letter strings.
struct MomentTable {
    std::map<std::pair<std::string, std::string>, std::complex<double>> entries;
};

MomentTable moment_table(const OptimalState& state, int max_len);

} // namespace biquad
