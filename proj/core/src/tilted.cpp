#include "biquad/tilted.hpp"

#include <cmath>
#include <string>

namespace biquad {

namespace {

constexpr double kBoundaryTol = 1e-12;

void check_finite(const TiltedParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
        throw DomainError("tilted parameters must be finite");
    }
}

} // namespace

const char* to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::Quantum: return "Quantum";
        case RegionLabel::LocalL1: return "LocalL1";
        case RegionLabel::LocalLa: return "LocalLa";
        case RegionLabel::BoundaryQ_L1: return "BoundaryQ_L1";
        case RegionLabel::BoundaryQ_La: return "BoundaryQ_La";
    }
    return "?";
}

double RegionClass::value() const {
    switch (label) {
        case RegionLabel::Quantum: return std::sqrt(q_value_sq);
        case RegionLabel::LocalL1:
        case RegionLabel::BoundaryQ_L1: return std::sqrt(l1_value_sq);
        case RegionLabel::LocalLa:
        case RegionLabel::BoundaryQ_La: return std::sqrt(la_value_sq);
    }
    return 0.0;
}

BiasPolynomial build_polynomial(const TiltedParams& p) {
    check_finite(p);
    BiasPolynomial poly;
    poly.terms = {
        Term{p.alpha, Word("u"), Word("u")},
        Term{p.alpha, Word("u"), Word("v")},
        Term{1.0, Word("v"), Word("u")},
        Term{-1.0, Word("v"), Word("v")},
        Term{2.0 * p.beta, Word("u"), Word("")},
    };
    return canonicalize(poly);
}

RegionClass classify(const TiltedParams& p) {
    check_finite(p);
    const double a = std::abs(p.alpha), b = std::abs(p.beta);

    RegionClass rc;
    rc.q_value_sq = 4.0 * (1.0 + a * a) * (1.0 + b * b);
    rc.l1_value_sq = 4.0 * (1.0 + b) * (1.0 + b);
    rc.la_value_sq = 4.0 * (a + b) * (a + b);

    // p1 < 0: the corner strategy beats every interior candidate.
    // p2 > 0: the interior optimum leaves the square; the edge wins.
    const double p1 = a * a * (1.0 + b * b) - 2.0 * b;
    const double p2 = a * a * b * b - 1.0;

    if (std::abs(p1) <= kBoundaryTol) {
        rc.label = RegionLabel::BoundaryQ_L1;
    } else if (std::abs(p2) <= kBoundaryTol && p1 > 0.0) {
        rc.label = RegionLabel::BoundaryQ_La;
    } else if (p1 < 0.0) {
        rc.label = RegionLabel::LocalL1;
    } else if (p2 > 0.0) {
        rc.label = RegionLabel::LocalLa;
    } else {
        rc.label = RegionLabel::Quantum;
    }
    return rc;
}

double t_star(const TiltedParams& p) {
    check_finite(p);
    const double a2 = p.alpha * p.alpha, b2 = p.beta * p.beta;
    if (a2 * b2 - 1.0 > kBoundaryTol) {
        throw RegionError("t_star undefined for |alpha*beta| > 1");
    }
    const double t = (a2 - 1.0) / (a2 + 1.0) * (b2 + 1.0) + b2;
    return std::min(1.0, std::max(-1.0, t));
}

ClosedFormState closed_form_state(const TiltedParams& p) {
    check_finite(p);
    // The value is even in both parameters; the state data below is stated
    // for the nonnegative representative.
    const double al = std::abs(p.alpha), be = std::abs(p.beta);
    if (al <= kBoundaryTol) {
        throw RegionError("closed-form state: alpha = 0 degenerates the interior critical "
                          "point (top eigenvector is not unique)");
    }
    if (al * be >= 1.0 - kBoundaryTol) {
        throw RegionError("closed-form state requires |alpha*beta| < 1 (the interior critical "
                          "point leaves the square otherwise)");
    }
    const double ra = std::sqrt(1.0 + al * al); // sqrt(1 + alpha^2)
    const double rb = std::sqrt(1.0 + be * be); // sqrt(1 + beta^2)

    ClosedFormState st;
    st.a = std::sqrt((rb + be * ra) / (2.0 * rb));
    st.d = std::sqrt(std::max(0.0, (rb - be * ra) / (2.0 * rb)));
    st.w_plus_norm = 2.0 * al * rb / ra;
    st.w_minus_norm = 2.0 * std::sqrt(std::max(0.0, 1.0 - al * al * be * be)) / ra;
    st.t_star = t_star(p);

    const double delta = st.a * st.a - st.d * st.d; // a^2 - d^2 = beta*sqrt(1+alpha^2)/sqrt(1+beta^2)
    const double ad = st.a * st.d;
    const double wp = st.w_plus_norm, wm = st.w_minus_norm, ts = st.t_star;

    // Rows 1, u, v, uv against scaled columns 1, 2u, 2v, 4uv.
    st.moments = {{
        {{1.0, delta * wp, delta * wp, 4.0 * ts}},
        {{delta, wp, wp, 4.0 * delta * ts}},
        {{0.0, 2.0 * ad * wm, -2.0 * ad * wm, 0.0}},
        {{0.0, 0.0, 0.0, -4.0 * ad * wp * wm}},
    }};
    return st;
}

double ClosedFormState::basis_moment(BasisWord row, BasisWord col) const {
    static constexpr std::array<double, 4> scale = {1.0, 2.0, 2.0, 4.0};
    return moments[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
           scale[static_cast<std::size_t>(col)];
}

} // namespace biquad
