#include "biquad/reduce.hpp"

#include <cmath>
#include <string>

namespace biquad {

namespace {

void check_param(double s, const char* name) {
    if (!std::isfinite(s) || s < -1.0 || s > 1.0) {
        throw DomainError(std::string(name) + " must lie in [-1, 1], got " + std::to_string(s));
    }
}

} // namespace

void AnticommPoint::validate() const {
    check_param(s_alice, "s_alice");
    check_param(t_bob, "t_bob");
}

BasisCoeffs reduce_word(const Word& w, double s) {
    w.validate();
    check_param(s, "s");

    // Right-multiplication table at anticommutator 2s:
    //   1*u = u        1*v = v
    //   u*u = 1        u*v = uv
    //   v*u = -uv+2s   v*v = 1
    //   uv*u = 2s u - v   (u(vu) = u(-uv+2s) = -v + 2s u)
    //   uv*v = u
    BasisCoeffs c{1.0, 0.0, 0.0, 0.0};
    for (char letter : w.letters) {
        BasisCoeffs n{};
        if (letter == 'u') {
            n[kOne] = c[kU] + 2.0 * s * c[kV];
            n[kU] = c[kOne] + 2.0 * s * c[kUV];
            n[kV] = -c[kUV];
            n[kUV] = -c[kV];
        } else { // 'v'
            n[kOne] = c[kV];
            n[kU] = c[kUV];
            n[kV] = c[kOne];
            n[kUV] = c[kU];
        }
        c = n;
    }
    return c;
}

ReducedForm reduce_polynomial(const BiasPolynomial& p, const AnticommPoint& pt) {
    pt.validate();
    ReducedForm form;
    form.s_alice = pt.s_alice;
    form.t_bob = pt.t_bob;
    for (const Term& term : p.terms) {
        if (!std::isfinite(term.coeff)) {
            throw InputError("non-finite coefficient in polynomial");
        }
        const BasisCoeffs a = reduce_word(term.alice, pt.s_alice);
        const BasisCoeffs b = reduce_word(term.bob, pt.t_bob);
        for (int i = 0; i < 4; ++i) {
            if (a[i] == 0.0) continue;
            const double fa = term.coeff * a[i];
            for (int j = 0; j < 4; ++j) form.lambda[static_cast<std::size_t>(i) * 4 + j] += fa * b[j];
        }
    }
    return form;
}

} // namespace biquad
