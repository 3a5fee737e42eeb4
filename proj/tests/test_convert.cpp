#include <doctest.h>

#include <cmath>
#include <limits>

#include "biquad/convert.hpp"
#include "biquad/errors.hpp"
#include "biquad/realize.hpp"
#include "biquad/reduce.hpp"
#include "biquad/spectral.hpp"
#include "biquad/tilted.hpp"
#include "support/rng.hpp"

using namespace biquad;
using testsupport::Rng;

namespace {

BiasPolynomial with_shift(const BiasPolynomial& base, double shift) {
    BiasPolynomial p = base;
    p.terms.push_back(Term{shift, Word(""), Word("")});
    return p;
}

} // namespace

TEST_SUITE("convert") {

TEST_CASE("shift sums absolute non-identity coefficients") {
    BiasPolynomial p;
    p.terms = {Term{0.5, Word("u"), Word("u")}, Term{-std::sqrt(2.0), Word("u"), Word("")}};
    const GamePolynomial g = to_game(p);
    CHECK(g.shift == doctest::Approx(0.5 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(g.base.terms.size() == 2);

    // The identity term is excluded from the shift by convention.
    BiasPolynomial with_id;
    with_id.terms = {Term{3.0, Word(""), Word("")}, Term{1.0, Word("v"), Word("v")}};
    CHECK(to_game(with_id).shift == doctest::Approx(1.0));

    // Identity-like words (uu, vv) are not the identity term textually.
    BiasPolynomial uu;
    uu.terms = {Term{-2.0, Word("uu"), Word("")}};
    CHECK(to_game(uu).shift == doctest::Approx(2.0));

    CHECK(to_game(BiasPolynomial{}).shift == 0.0);
}

TEST_CASE("cancelling terms do not inflate the shift") {
    BiasPolynomial p;
    p.terms = {Term{1.0, Word("u"), Word("u")}, Term{-1.0, Word("u"), Word("u")},
               Term{0.25, Word("v"), Word("")}};
    const GamePolynomial g = to_game(p);
    CHECK(g.shift == doctest::Approx(0.25));
    CHECK(g.base.terms.size() == 1);
}

TEST_CASE("CHSH game shift and minimum eigenvalue") {
    const GamePolynomial g = to_game(build_polynomial(TiltedParams{1.0, 0.0}));
    CHECK(g.shift == doctest::Approx(4.0));
    const GameMatrix gm =
        assemble(reduce_polynomial(with_shift(g.base, g.shift), AnticommPoint{0, 0}));
    const SpectralResult sr = hermitian_spectrum(gm.entries);
    CHECK(sr.min_eig == doctest::Approx(4.0 - 2 * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(sr.max_eig == doctest::Approx(4.0 + 2 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("shifting translates the whole spectrum") {
    Rng rng(701);
    for (int trial = 0; trial < 20; ++trial) {
        // Self-adjoint bias: mirror each term so the assembly is Hermitian.
        BiasPolynomial p;
        const int n = rng.uniform_int(1, 4);
        for (int k = 0; k < n; ++k) {
            const double c = rng.uniform(-1.5, 1.5);
            // Nonempty Alice words keep the identity coefficient at zero, so
            // the shifted game is guaranteed positive.
            std::string wa = (rng.uniform_int(0, 1) ? "u" : "v") + rng.word(2);
            std::string wb = rng.word(3);
            p.terms.push_back(Term{c, Word(wa), Word(wb)});
            std::string ra(wa.rbegin(), wa.rend()), rb(wb.rbegin(), wb.rend());
            p.terms.push_back(Term{c, Word(ra), Word(rb)});
        }
        const GamePolynomial g = to_game(p);
        const AnticommPoint pt{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const SpectralResult bias =
            hermitian_spectrum(assemble(reduce_polynomial(g.base, pt)).entries);
        const SpectralResult game = hermitian_spectrum(
            assemble(reduce_polynomial(with_shift(g.base, g.shift), pt)).entries);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(game.eigenvalues[i] ==
                  doctest::Approx(bias.eigenvalues[i] + g.shift).epsilon(1e-12));
        CHECK(game.min_eig >= -1e-10); // the certified positivity
    }
}

TEST_CASE("negative identity coefficient breaks positivity") {
    BiasPolynomial p;
    p.terms = {Term{-5.0, Word(""), Word("")}, Term{1.0, Word("u"), Word("u")}};
    CHECK_THROWS_AS(to_game(p), ContractError);
}

TEST_CASE("non-finite input is rejected") {
    BiasPolynomial p;
    p.terms = {Term{std::numeric_limits<double>::quiet_NaN(), Word("u"), Word("u")}};
    CHECK_THROWS_AS(to_game(p), InputError);
}

}
