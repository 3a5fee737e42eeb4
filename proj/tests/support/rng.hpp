#pragma once

// Deterministic random helpers for tests.  Every test owns its generator with
// a fixed seed so failures reproduce exactly.

#include <random>
#include <string>

#include "biquad/matrix.hpp"
#include "biquad/word.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }

    biquad::cplx complex(double scale = 1.0) {
        return {uniform(-scale, scale), uniform(-scale, scale)};
    }

    std::string word(int max_len) {
        const int len = uniform_int(0, max_len);
        std::string w;
        for (int i = 0; i < len; ++i) w += (uniform_int(0, 1) ? 'v' : 'u');
        return w;
    }

    biquad::BiasPolynomial polynomial(int max_terms, int max_len, double coeff_scale = 1.0) {
        biquad::BiasPolynomial p;
        const int n = uniform_int(1, max_terms);
        for (int i = 0; i < n; ++i) {
            p.terms.push_back(biquad::Term{uniform(-coeff_scale, coeff_scale),
                                           biquad::Word(word(max_len)),
                                           biquad::Word(word(max_len))});
        }
        return p;
    }

    template <int N>
    biquad::SmallMatrix<N> hermitian(double scale = 1.0) {
        biquad::SmallMatrix<N> m;
        for (int i = 0; i < N; ++i) {
            m(i, i) = uniform(-scale, scale);
            for (int j = i + 1; j < N; ++j) {
                m(i, j) = complex(scale);
                m(j, i) = std::conj(m(i, j));
            }
        }
        return m;
    }

    template <int N>
    biquad::SmallMatrix<N> complex_matrix(double scale = 1.0) {
        biquad::SmallMatrix<N> m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = complex(scale);
        return m;
    }

    // Random unitary via Gram-Schmidt on random complex columns.
    template <int N>
    biquad::SmallMatrix<N> unitary() {
        biquad::SmallMatrix<N> m = complex_matrix<N>();
        for (int c = 0; c < N; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                biquad::cplx proj{};
                for (int r = 0; r < N; ++r) proj += std::conj(m(r, prev)) * m(r, c);
                for (int r = 0; r < N; ++r) m(r, c) -= proj * m(r, prev);
            }
            double nrm = 0.0;
            for (int r = 0; r < N; ++r) nrm += std::norm(m(r, c));
            nrm = std::sqrt(nrm);
            for (int r = 0; r < N; ++r) m(r, c) /= nrm;
        }
        return m;
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace testsupport
