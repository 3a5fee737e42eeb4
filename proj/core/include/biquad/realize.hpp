#pragma once

// Concrete 2x2 representations of the generator pair and assembly of reduced
// polynomials into 4x4 matrices.
//
// The standard choice at anticommutator value 2s is
//     U = diag(1, -1),   V = s*U + sqrt(1 - s^2) * X,
// both real symmetric involutions with UV + VU = 2s*I.  Any other pair with
// the same anticommutator is an orthogonal/unitary conjugate of this one, so
// assembled operator norms do not depend on the choice; `assemble` accepts an
// explicit realization to make that checkable.

#include "biquad/matrix.hpp"
#include "biquad/reduce.hpp"
#include "biquad/word.hpp"

namespace biquad {

// One player's realized generator pair.
struct Realization {
    Mat2 u;
    Mat2 v;
};

// Standard pair at anticommutator value 2s; throws DomainError for |s| > 1.
Realization realize_generators(double s);

// Both players' pairs.
struct PairRealization {
    Realization alice;
    Realization bob;
};

PairRealization standard_realization(const AnticommPoint& pt);

// W g W^* for both generators; W is expected unitary (not checked).
Realization conjugate_realization(const Realization& r, const Mat2& w);

// Matrix of a basis word (1, u, v, uv) in the given realization.
Mat2 basis_matrix(const Realization& r, BasisWord b);

// Letter-by-letter product of a word, no algebraic reduction.  This is the
// "direct" evaluation path used to cross-check the reducer.
Mat2 word_matrix(const Realization& r, const Word& w);

// A reduced polynomial contracted with realized basis matrices.
struct GameMatrix {
    Mat4 entries;
    AnticommPoint point;
};

GameMatrix assemble(const ReducedForm& form);
GameMatrix assemble(const ReducedForm& form, const PairRealization& real);

// Direct evaluation of a polynomial: sum of coeff * word_matrix (x)
// word_matrix, bypassing the reducer entirely.
Mat4 evaluate_direct(const BiasPolynomial& p, const PairRealization& real);

} // namespace biquad
