#pragma once

// Fixed-size complex matrices (2x2 and 4x4) on the stack.  Everything the
// solver touches lives in dimension <= 4, so a tiny dependency-free kernel
// beats a general linear algebra library: no heap traffic, trivially
// deterministic, easy to audit.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace biquad {

using cplx = std::complex<double>;

template <int N>
struct SmallMatrix {
    std::array<cplx, static_cast<std::size_t>(N) * N> e{};

    static constexpr int size = N;

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * N + c]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * N + c]; }

    static SmallMatrix identity() {
        SmallMatrix m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    SmallMatrix& operator+=(const SmallMatrix& o) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
        return *this;
    }
    SmallMatrix& operator-=(const SmallMatrix& o) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
        return *this;
    }
    SmallMatrix& operator*=(cplx c) {
        for (auto& x : e) x *= c;
        return *this;
    }

    friend SmallMatrix operator+(SmallMatrix a, const SmallMatrix& b) { return a += b; }
    friend SmallMatrix operator-(SmallMatrix a, const SmallMatrix& b) { return a -= b; }
    friend SmallMatrix operator*(cplx c, SmallMatrix m) { return m *= c; }
    friend SmallMatrix operator*(SmallMatrix m, cplx c) { return m *= c; }

    friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
        SmallMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    SmallMatrix adjoint() const {
        SmallMatrix r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : e) s += std::norm(x);
        return std::sqrt(s);
    }

    // Max |M - M*| deviation in Frobenius norm; 0 for exactly Hermitian input.
    double hermiticity_defect() const {
        double s = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
        return std::sqrt(s);
    }

    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }
};

using Mat2 = SmallMatrix<2>;
using Mat4 = SmallMatrix<4>;

// Kronecker product with the first (Alice) factor on the slow index:
// (A (x) B)(2a1+b1, 2a2+b2) = A(a1,a2) * B(b1,b2).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
            const cplx f = a(a1, a2);
            if (f == cplx{}) continue;
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2)
                    r(2 * a1 + b1, 2 * a2 + b2) += f * b(b1, b2);
        }
    return r;
}

using Vec2 = std::array<cplx, 2>;
using Vec4 = std::array<cplx, 4>;

template <int N>
std::array<cplx, static_cast<std::size_t>(N)> matvec(
    const SmallMatrix<N>& m, const std::array<cplx, static_cast<std::size_t>(N)>& v) {
    std::array<cplx, static_cast<std::size_t>(N)> r{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

// <x|y>, conjugate-linear in the first argument.
template <std::size_t N>
cplx inner(const std::array<cplx, N>& x, const std::array<cplx, N>& y) {
    cplx s{};
    for (std::size_t i = 0; i < N; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

template <std::size_t N>
double vec_norm(const std::array<cplx, N>& x) {
    return std::sqrt(inner(x, x).real());
}

} // namespace biquad
