#include "biquad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "biquad/errors.hpp"

namespace biquad {

namespace {

constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;

template <int N>
double off_diagonal_norm(const SmallMatrix<N>& a) {
    double s = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Deterministic phase convention: the entry of largest magnitude is made real
// positive.  Applied column-wise to eigenvector matrices.
template <int N>
void fix_column_phase(SmallMatrix<N>& v, int col) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < N; ++i) {
        const double m = std::abs(v(i, col));
        if (m > best) {
            best = m;
            arg = i;
        }
    }
    if (best <= 0.0) return;
    const cplx phase = std::conj(v(arg, col)) / best;
    for (int i = 0; i < N; ++i) v(i, col) *= phase;
}

} // namespace

template <int N>
EigResult<N> jacobi_hermitian(SmallMatrix<N> a) {
    // Work on the Hermitian part so rounding asymmetry cannot leak in.
    SmallMatrix<N> h;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    SmallMatrix<N> v = SmallMatrix<N>::identity();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(h) <= kOffDiagTarget) break;
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const cplx apq = h(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const cplx phase = apq / r; // e^{i phi}
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;

                // A <- G* A G with G the phase-carrying plane rotation:
                // G(p,p)=c, G(p,q)=sn, G(q,p)=-sn e^{-i phi}, G(q,q)=c e^{-i phi}.
                for (int j = 0; j < N; ++j) { // rows p, q
                    const cplx hp = h(p, j), hq = h(q, j);
                    h(p, j) = c * hp - sn * phase * hq;
                    h(q, j) = sn * hp + c * phase * hq;
                }
                for (int i = 0; i < N; ++i) { // columns p, q
                    const cplx hp = h(i, p), hq = h(i, q);
                    h(i, p) = c * hp - sn * std::conj(phase) * hq;
                    h(i, q) = sn * hp + c * std::conj(phase) * hq;
                }
                h(p, q) = 0.0; // rotation zeroes this pivot exactly
                h(q, p) = 0.0;
                for (int i = 0; i < N; ++i) { // V <- V G
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - sn * std::conj(phase) * vq;
                    v(i, q) = sn * vp + c * std::conj(phase) * vq;
                }
            }
        }
    }

    std::array<int, N> order{};
    std::iota(order.begin(), order.end(), 0);
    std::array<double, N> diag{};
    for (int i = 0; i < N; ++i) diag[static_cast<std::size_t>(i)] = h(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[static_cast<std::size_t>(x)] < diag[static_cast<std::size_t>(y)]; });

    EigResult<N> res;
    for (int k = 0; k < N; ++k) {
        res.values[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        for (int i = 0; i < N; ++i) res.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
        fix_column_phase(res.vectors, k);
    }
    return res;
}

template EigResult<2> jacobi_hermitian<2>(SmallMatrix<2>);
template EigResult<4> jacobi_hermitian<4>(SmallMatrix<4>);

SpectralResult hermitian_spectrum(const Mat4& m) {
    if (m.hermiticity_defect() > 1e-10) {
        throw ContractError("hermitian_spectrum: input is not Hermitian");
    }
    const EigResult<4> eig = jacobi_hermitian<4>(m);
    SpectralResult r;
    r.eigenvalues = eig.values;
    r.min_eig = eig.values[0];
    r.max_eig = eig.values[3];
    for (int i = 0; i < 4; ++i) r.max_vec[static_cast<std::size_t>(i)] = eig.vectors(i, 3);
    r.norm = std::max(std::abs(r.min_eig), std::abs(r.max_eig));
    return r;
}

namespace {

template <int N>
double cstar_norm(const SmallMatrix<N>& m) {
    const EigResult<N> eig = jacobi_hermitian<N>(m.adjoint() * m);
    return std::sqrt(std::max(0.0, eig.values[N - 1]));
}

} // namespace

double operator_norm(const Mat2& m) { return cstar_norm(m); }
double operator_norm(const Mat4& m) { return cstar_norm(m); }

bool spectrum_is_symmetric(const Mat4& m, double tol) {
    if (m.hermiticity_defect() > 1e-10) {
        throw ContractError("spectrum_is_symmetric: input is not Hermitian");
    }
    const EigResult<4> eig = jacobi_hermitian<4>(m);
    for (int k = 0; k < 4; ++k) {
        if (std::abs(eig.values[static_cast<std::size_t>(k)] + eig.values[static_cast<std::size_t>(3 - k)]) > tol) return false;
    }
    return true;
}

} // namespace biquad
