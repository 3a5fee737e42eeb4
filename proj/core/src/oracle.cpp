#include "biquad/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "biquad/errors.hpp"
#include "biquad/matrix.hpp"
#include "biquad/parallel.hpp"
#include "biquad/realize.hpp"

namespace biquad {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double halton(long index, int base) {
    double f = 1.0, r = 0.0;
    for (long i = index; i > 0; i /= base) {
        f /= base;
        r += f * static_cast<double>(i % base);
    }
    return r;
}

Mat2 observable(double theta) { // cos(theta) Z + sin(theta) X, a reflection
    Mat2 m;
    const double c = std::cos(theta), s = std::sin(theta);
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -c;
    return m;
}

// Certified lower bound on the top eigenvalue of a Hermitian matrix: power
// iteration on h + sigma*I with a final Rayleigh quotient.  The Rayleigh
// quotient of a unit vector never exceeds the top eigenvalue, so early exits
// only cost sharpness, never soundness.
double top_eig_lower_bound(const Mat4& h) {
    const double sigma = h.frobenius_norm() + 1.0;
    Mat4 shifted = h;
    for (int i = 0; i < 4; ++i) shifted(i, i) += sigma;

    Vec4 v{cplx(0.9501), cplx(0.2311), cplx(0.6068), cplx(0.4860)};
    double nrm = vec_norm(v);
    for (auto& x : v) x /= nrm;

    double rho = 0.0, prev = -1.0;
    for (int it = 0; it < 300; ++it) {
        Vec4 w = matvec(shifted, v);
        rho = inner(v, w).real();
        if (std::abs(rho - prev) <= 1e-13 * std::max(1.0, std::abs(rho))) {
            v = w;
            nrm = vec_norm(v);
            if (nrm == 0.0) break;
            for (auto& x : v) x /= nrm;
            break;
        }
        prev = rho;
        nrm = vec_norm(w);
        if (nrm == 0.0) return -sigma; // h = -sigma*I cannot occur for finite input
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / nrm;
    }
    return inner(v, matvec(h, v)).real();
}

double eval_canonical(const BiasPolynomial& canon, const std::array<double, 4>& angles) {
    const PairRealization real{Realization{observable(angles[0]), observable(angles[1])},
                               Realization{observable(angles[2]), observable(angles[3])}};
    const Mat4 m = evaluate_direct(canon, real);
    Mat4 h;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return top_eig_lower_bound(h);
}

} // namespace

double evaluate_strategy(const BiasPolynomial& p, const std::array<double, 4>& angles) {
    return eval_canonical(canonicalize(p), angles);
}

SampledStrategy brute_force_value(const BiasPolynomial& p, long samples, unsigned long seed) {
    if (samples < 1) throw ConfigError("brute_force_value: need at least one sample");
    const BiasPolynomial canon = canonicalize(p);

    // Seed-derived rotation of the Halton sequence; the sequence itself (and
    // therefore the sample prefix) does not depend on the sample count.
    std::uint64_t state = static_cast<std::uint64_t>(seed);
    std::array<double, 4> offset{};
    for (auto& o : offset) o = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;

    static constexpr std::array<int, 4> bases = {2, 3, 5, 7};
    const auto angles_of = [&](long k) {
        std::array<double, 4> a{};
        for (int j = 0; j < 4; ++j) {
            const double x = halton(k + 1, bases[static_cast<std::size_t>(j)]) + offset[static_cast<std::size_t>(j)];
            a[static_cast<std::size_t>(j)] = kTwoPi * (x - std::floor(x));
        }
        return a;
    };

    std::vector<double> values(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            values[k] = eval_canonical(canon, angles_of(static_cast<long>(k)));
        }
    });

    std::size_t arg = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] > values[arg]) arg = k;
    }

    SampledStrategy best;
    const auto a = angles_of(static_cast<long>(arg));
    best.alice_angles = {a[0], a[1]};
    best.bob_angles = {a[2], a[3]};
    best.achieved = values[arg];
    return best;
}

} // namespace biquad
