#include "biquad/state.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "biquad/errors.hpp"
#include "biquad/realize.hpp"
#include "biquad/spectral.hpp"

namespace biquad {

namespace {

// Schmidt split of a unit vector on C^2 (x) C^2 via the 2x2 reshape
// C(a, b) = vector[2a + b]:  vector = a * e1 (x) f1 + d * e2 (x) f2 where
// (a^2, d^2) are the eigenvalues of C C^* and f_i = C^T conj(e_i) / sigma_i.
SchmidtData schmidt_split(const Vec4& vec) {
    Mat2 c;
    c(0, 0) = vec[0];
    c(0, 1) = vec[1];
    c(1, 0) = vec[2];
    c(1, 1) = vec[3];

    const Mat2 ha = c * c.adjoint();
    const EigResult<2> eig = jacobi_hermitian<2>(ha);

    SchmidtData sd;
    sd.a = std::sqrt(std::max(0.0, eig.values[1]));
    sd.d = std::sqrt(std::max(0.0, eig.values[0]));
    for (int i = 0; i < 2; ++i) {
        sd.alice1[static_cast<std::size_t>(i)] = eig.vectors(i, 1);
        sd.alice2[static_cast<std::size_t>(i)] = eig.vectors(i, 0);
    }

    const auto bob_of = [&](const Vec2& e, double sigma) {
        Vec2 f{};
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2; ++a) f[static_cast<std::size_t>(b)] += c(a, b) * std::conj(e[static_cast<std::size_t>(a)]);
        for (auto& x : f) x /= sigma;
        return f;
    };

    sd.bob1 = bob_of(sd.alice1, sd.a > 0.0 ? sd.a : 1.0);
    if (sd.d > 1e-12) {
        sd.bob2 = bob_of(sd.alice2, sd.d);
    } else {
        // Rank-one vector: complete bob1 to an orthonormal basis.
        sd.d = std::max(sd.d, 0.0);
        sd.bob2 = Vec2{-std::conj(sd.bob1[1]), std::conj(sd.bob1[0])};
    }
    return sd;
}

} // namespace

OptimalState extract_state(const BiasPolynomial& p, const AnticommPoint& pt) {
    pt.validate();
    const ReducedForm form = reduce_polynomial(p, pt);
    const GameMatrix gm = assemble(form);
    const SpectralResult spectrum = hermitian_spectrum(gm.entries);

    OptimalState st;
    st.vector = spectrum.max_vec;
    st.eigenvalue = spectrum.max_eig;
    st.degenerate = (spectrum.max_eig - spectrum.eigenvalues[2]) <= 1e-9;
    st.point = pt;
    st.schmidt = schmidt_split(st.vector);
    return st;
}

std::complex<double> moment(const OptimalState& state, const Word& alice, const Word& bob) {
    const PairRealization real = standard_realization(state.point);
    const Mat4 k = kron(word_matrix(real.alice, alice), word_matrix(real.bob, bob));
    return inner(state.vector, matvec(k, state.vector));
}

MomentTable moment_table(const OptimalState& state, int max_len) {
    if (max_len < 0 || max_len > 8) {
        throw ConfigError("moment_table: max_len must lie in [0, 8]");
    }
    std::vector<std::string> words = {""};
    std::vector<std::string> frontier = {""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        next.reserve(frontier.size() * 2);
        for (const auto& w : frontier) {
            next.push_back(w + "u");
            next.push_back(w + "v");
        }
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    MomentTable table;
    for (const auto& wa : words)
        for (const auto& wb : words)
            table.entries[{wa, wb}] = moment(state, Word(wa), Word(wb));
    return table;
}

} // namespace biquad
