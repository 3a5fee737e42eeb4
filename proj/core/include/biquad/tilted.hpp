#pragma once

// The tilted CHSH family
//
//     p(alpha, beta) = alpha * u(x)(u + v) + v(x)(u - v) + 2*beta * u(x)1
//
// admits closed forms for everything this library otherwise computes
// numerically: the supremum of the norm surface, where it is attained, and
// the optimal state with its two-point correlations.  That makes the family
// the main self-test vehicle; the formulas here are the reference the
// numeric path is compared against.
//
// Value landscape (squared norms):
//   quantum   q  = 4 (1 + alpha^2)(1 + beta^2)   attained at s = 0, t = t*
//   corner    l1 = 4 (1 + beta)^2                attained at s = +-1, t = -1
//   edge      la = 4 (alpha + beta)^2            attained on t = +1, any s
// with t* = ((alpha^2 - 1)/(alpha^2 + 1)) (beta^2 + 1) + beta^2, defined for
// |alpha*beta| <= 1.  The interior point wins strictly inside the region
//   alpha^2 > 2 beta / (1 + beta^2)  and  |alpha*beta| < 1,
// the corner wins below the first curve, the edge wins beyond the second.

#include <array>

#include "biquad/reduce.hpp"
#include "biquad/word.hpp"

namespace biquad {

struct TiltedParams {
    double alpha = 0.0;
    double beta = 0.0;
};

enum class RegionLabel {
    Quantum,      // interior maximum strictly dominates
    LocalL1,      // corner value 2(1+|beta|) dominates
    LocalLa,      // edge value 2(|alpha|+|beta|) dominates
    BoundaryQ_L1, // on alpha^2 = 2 beta / (1+beta^2): interior meets corner
    BoundaryQ_La, // on |alpha*beta| = 1: interior meets edge
};

const char* to_string(RegionLabel label);

struct RegionClass {
    RegionLabel label = RegionLabel::Quantum;
    double q_value_sq = 0.0;
    double l1_value_sq = 0.0;
    double la_value_sq = 0.0;

    // Norm of the polynomial: sqrt of the candidate selected by label.
    double value() const;
};

// The five terms above, canonicalized (zero-coefficient terms drop out).
BiasPolynomial build_polynomial(const TiltedParams& p);

// Classifies (alpha, beta) by which candidate attains the supremum.  Signs of
// alpha and beta do not affect the value, so classification uses |alpha|,
// |beta|; boundary detection tolerance is 1e-12.
RegionClass classify(const TiltedParams& p);

// Interior-optimal t coordinate; throws RegionError when |alpha*beta| > 1
// (the formula leaves [-1, 1]).  t* = -1 iff alpha = 0, +1 iff |alpha*beta| = 1.
double t_star(const TiltedParams& p);

// Closed-form data of the interior critical point (s = 0, t = t*): the top
// eigenvector of the assembled matrix there, its Schmidt coefficients, and
// its correlation table.  The interior point is the global optimum exactly in
// the quantum region; outside it the data still describes that point, merely
// not the supremum.
struct ClosedFormState {
    double a = 0.0; // Schmidt coefficients, a >= d > 0 inside the region
    double d = 0.0;
    double w_plus_norm = 0.0;  // |w+| = 2 |alpha| sqrt((1+beta^2)/(1+alpha^2))
    double w_minus_norm = 0.0; // |w-| = 2 sqrt((1-alpha^2 beta^2)/(1+alpha^2))
    double t_star = 0.0;

    // Two-point correlation table of the optimal state, rows indexed by the
    // Alice basis word (1, u, v, uv) and columns by the scaled Bob words
    // (1, 2u, 2v, 4uv).
    std::array<std::array<double, 4>, 4> moments{};

    // Unscaled correlation <row (x) col> (divides the column scaling out).
    double basis_moment(BasisWord row, BasisWord col) const;
};

// Throws RegionError when alpha = 0 (degenerate top eigenvector) or
// |alpha*beta| >= 1 (no interior critical point).
ClosedFormState closed_form_state(const TiltedParams& p);

} // namespace biquad
