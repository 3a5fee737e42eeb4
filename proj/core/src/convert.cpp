#include "biquad/convert.hpp"

#include <cmath>
#include <string>

#include "biquad/realize.hpp"
#include "biquad/spectral.hpp"

namespace biquad {

GamePolynomial to_game(const BiasPolynomial& bias) {
    GamePolynomial g;
    g.base = canonicalize(bias); // rejects non-finite coefficients and bad letters

    for (const Term& t : g.base.terms) {
        if (t.alice.empty() && t.bob.empty()) continue; // identity sets the floor, not the shift
        g.shift += std::abs(t.coeff);
    }

    // Positivity audit: each non-identity word realizes as a unitary, so the
    // assembled bias is bounded below by -shift at every point.  Sample a
    // 21x21 grid; only a negative identity coefficient can break this.
    for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j) {
            const AnticommPoint pt{-1.0 + 0.1 * i, -1.0 + 0.1 * j};
            Mat4 m = assemble(reduce_polynomial(g.base, pt)).entries;
            // Hermitian part carries the relevant lower bound for
            // non-self-adjoint inputs as well.
            Mat4 h;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
            for (int d = 0; d < 4; ++d) h(d, d) += g.shift;
            const EigResult<4> eig = jacobi_hermitian<4>(h);
            if (eig.values[0] < -1e-10) {
                throw ContractError(
                    "to_game: shifted polynomial is not positive semidefinite at s=" +
                    std::to_string(pt.s_alice) + ", t=" + std::to_string(pt.t_bob) +
                    " (negative identity coefficient?)");
            }
        }
    }
    return g;
}

} // namespace biquad
