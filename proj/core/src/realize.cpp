#include "biquad/realize.hpp"

#include <cmath>
#include <string>

namespace biquad {

Realization realize_generators(double s) {
    if (!std::isfinite(s) || s < -1.0 || s > 1.0) {
        throw DomainError("anticommutation parameter must lie in [-1, 1], got " +
                          std::to_string(s));
    }
    Realization r;
    r.u(0, 0) = 1.0;
    r.u(1, 1) = -1.0;
    const double c = std::sqrt(1.0 - s * s);
    r.v(0, 0) = s;
    r.v(0, 1) = c;
    r.v(1, 0) = c;
    r.v(1, 1) = -s;
    return r;
}

PairRealization standard_realization(const AnticommPoint& pt) {
    pt.validate();
    return PairRealization{realize_generators(pt.s_alice), realize_generators(pt.t_bob)};
}

Realization conjugate_realization(const Realization& r, const Mat2& w) {
    const Mat2 wadj = w.adjoint();
    return Realization{w * r.u * wadj, w * r.v * wadj};
}

Mat2 basis_matrix(const Realization& r, BasisWord b) {
    switch (b) {
        case kOne: return Mat2::identity();
        case kU: return r.u;
        case kV: return r.v;
        case kUV: return r.u * r.v;
    }
    throw ContractError("invalid basis word index");
}

Mat2 word_matrix(const Realization& r, const Word& w) {
    w.validate();
    Mat2 m = Mat2::identity();
    for (char letter : w.letters) m = m * (letter == 'u' ? r.u : r.v);
    return m;
}

GameMatrix assemble(const ReducedForm& form) {
    return assemble(form, standard_realization(AnticommPoint{form.s_alice, form.t_bob}));
}

GameMatrix assemble(const ReducedForm& form, const PairRealization& real) {
    GameMatrix gm;
    gm.point = AnticommPoint{form.s_alice, form.t_bob};
    std::array<Mat2, 4> am, bm;
    for (int i = 0; i < 4; ++i) {
        am[i] = basis_matrix(real.alice, static_cast<BasisWord>(i));
        bm[i] = basis_matrix(real.bob, static_cast<BasisWord>(i));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double l = form.lambda[static_cast<std::size_t>(i) * 4 + j];
            if (l == 0.0) continue;
            gm.entries += l * kron(am[i], bm[j]);
        }
    return gm;
}

Mat4 evaluate_direct(const BiasPolynomial& p, const PairRealization& real) {
    Mat4 m;
    for (const Term& t : p.terms) {
        m += t.coeff * kron(word_matrix(real.alice, t.alice), word_matrix(real.bob, t.bob));
    }
    return m;
}

} // namespace biquad
