#pragma once

// Numeric reduction of {u,v}-words to the canonical basis (1, u, v, uv).
//
// The generators satisfy u^2 = v^2 = 1 and uv + vu = 2s for a real parameter
// s in [-1, 1], one independent parameter per tensor factor.  Every word then
// reduces to a real combination of the four basis words; the coefficients are
// polynomials in s which we evaluate numerically at the requested point
// rather than symbolically.

#include <array>

#include "biquad/errors.hpp"
#include "biquad/word.hpp"

namespace biquad {

// Basis order is fixed everywhere in the library: 1, u, v, uv.
enum BasisWord : int { kOne = 0, kU = 1, kV = 2, kUV = 3 };

inline constexpr std::array<const char*, 4> kBasisNames = {"", "u", "v", "uv"};

// One point of the two-sided anticommutation square [-1,1]^2.
struct AnticommPoint {
    double s_alice = 0.0;
    double t_bob = 0.0;

    // Throws DomainError unless both coordinates are finite and in [-1, 1].
    void validate() const;
};

using BasisCoeffs = std::array<double, 4>;

// Coefficients of w in the basis (1, u, v, uv) at anticommutator value 2s.
// Reduction folds the word left to right through the right-multiplication
// table of the basis, applying uu -> 1, vv -> 1 and vu -> -uv + 2s as they
// appear; each step keeps at most four live coefficients, so the fold is the
// rewrite system run to its (confluent) normal form.
// Throws DomainError for |s| > 1, InputError for letters outside {u, v}.
BasisCoeffs reduce_word(const Word& w, double s);

// A polynomial reduced at a fixed point: 16 real coefficients lambda(a, b)
// against the product basis, Alice index slow.
struct ReducedForm {
    std::array<double, 16> lambda{};
    double s_alice = 0.0;
    double t_bob = 0.0;

    double& at(BasisWord a, BasisWord b) { return lambda[static_cast<std::size_t>(a) * 4 + b]; }
    const double& at(BasisWord a, BasisWord b) const {
        return lambda[static_cast<std::size_t>(a) * 4 + b];
    }
};

// Reduces every term at the given point and accumulates; linear in the input.
ReducedForm reduce_polynomial(const BiasPolynomial& p, const AnticommPoint& pt);

} // namespace biquad
