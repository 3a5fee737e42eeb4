#pragma once

// Bias-to-game conversion: shifting a bias polynomial by the sum of the
// absolute values of its non-identity coefficients makes the assembled matrix
// positive semidefinite at every point of the square (each non-identity
// tensor word realizes as a unitary, so its norm is exactly 1).  The shifted
// object is the "game" normal form with spectrum sigma(bias) + shift.

#include "biquad/word.hpp"

namespace biquad {

struct GamePolynomial {
    BiasPolynomial base; // canonicalized bias, unshifted
    double shift = 0.0;  // sum of |coeff| over non-identity terms
};

// Throws InputError for non-finite coefficients.  Verifies positivity of
// base + shift*I on a 21x21 grid (min eigenvalue >= -1e-10) and throws
// ContractError when the check fails - which can only happen when the
// identity coefficient is negative, since that term is excluded from the
// shift by convention.
GamePolynomial to_game(const BiasPolynomial& bias);

} // namespace biquad
