#pragma once

// Tiny dense Hermitian eigensolver (cyclic Jacobi) plus the operator-norm
// helpers built on it.  Self-contained and deterministic: fixed sweep order,
// fixed convergence threshold, no randomized pivoting.

#include <array>

#include "biquad/matrix.hpp"

namespace biquad {

template <int N>
struct EigResult {
    std::array<double, N> values{}; // ascending
    SmallMatrix<N> vectors;         // column k is the eigenvector of values[k]
};

// Cyclic Jacobi for a Hermitian matrix: sweeps over (p, q) pairs in row-major
// order until the off-diagonal Frobenius norm is <= 1e-13 (at most 100
// sweeps).  The Hermitian part of the input is what gets diagonalized; public
// callers are expected to pre-check Hermiticity.
template <int N>
EigResult<N> jacobi_hermitian(SmallMatrix<N> a);

extern template EigResult<2> jacobi_hermitian<2>(SmallMatrix<2>);
extern template EigResult<4> jacobi_hermitian<4>(SmallMatrix<4>);

struct SpectralResult {
    std::array<double, 4> eigenvalues{}; // ascending
    double min_eig = 0.0;
    double max_eig = 0.0;
    Vec4 max_vec{};    // unit eigenvector of max_eig, largest entry made real positive
    double norm = 0.0; // max(|min_eig|, |max_eig|)
};

// Full spectral data of a Hermitian 4x4.  Throws ContractError when the input
// deviates from Hermitian by more than 1e-10 in Frobenius norm.
SpectralResult hermitian_spectrum(const Mat4& m);

// Operator (spectral) norm of an arbitrary matrix via sqrt(lambda_max(M^* M)).
double operator_norm(const Mat2& m);
double operator_norm(const Mat4& m);

// True when the spectrum of the Hermitian input is symmetric about zero:
// sorted eigenvalues satisfy l[k] ~ -l[n-1-k] within tol.
bool spectrum_is_symmetric(const Mat4& m, double tol);

} // namespace biquad
