#include "biquad/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "biquad/errors.hpp"
#include "biquad/parallel.hpp"
#include "biquad/realize.hpp"
#include "biquad/spectral.hpp"

namespace biquad {

namespace {

double norm_at(const BiasPolynomial& p, double s, double t) {
    const ReducedForm form = reduce_polynomial(p, AnticommPoint{s, t});
    return operator_norm(assemble(form).entries);
}

// Refinement grid: 21 points per axis keeps the argmax localization error
// (half a refinement-grid step) strictly inside the next, 10x smaller window.
constexpr int kRefineGrid = 21;
// Plateau ties prefer the candidate nearest the window center, so refinement
// does not wander along flat directions.
constexpr double kTieEps = 1e-12;
// Degenerate-seed cap for pathological plateaus; seeds are kept in descending
// norm order so the global maximum cell always survives.
constexpr std::size_t kMaxSeeds = 1024;

struct SeedResult {
    double s = 0.0, t = 0.0;
    double norm = 0.0;
    std::vector<double> trace; // running best after each iteration
};

SeedResult refine_seed(const BiasPolynomial& p, double s0, double t0, double n0,
                       double window, int iters) {
    SeedResult best{s0, t0, n0, {}};
    best.trace.reserve(static_cast<std::size_t>(iters));
    double cs = s0, ct = t0, w = window;
    for (int it = 0; it < iters; ++it) {
        const double slo = std::max(-1.0, cs - w), shi = std::min(1.0, cs + w);
        const double tlo = std::max(-1.0, ct - w), thi = std::min(1.0, ct + w);
        // The current center is a known candidate at distance zero.
        double cand_s = cs, cand_t = ct, cand_norm = best.norm, cand_d2 = 0.0;
        for (int i = 0; i < kRefineGrid; ++i) {
            const double x = slo + (shi - slo) * i / (kRefineGrid - 1);
            for (int j = 0; j < kRefineGrid; ++j) {
                const double y = tlo + (thi - tlo) * j / (kRefineGrid - 1);
                const double n = norm_at(p, x, y);
                const double d2 = (x - cs) * (x - cs) + (y - ct) * (y - ct);
                const double eps = kTieEps * std::max(1.0, std::abs(cand_norm));
                if (n > cand_norm + eps || (n > cand_norm - eps && d2 < cand_d2)) {
                    cand_s = x;
                    cand_t = y;
                    cand_norm = n;
                    cand_d2 = d2;
                }
            }
        }
        cs = cand_s;
        ct = cand_t;
        if (cand_norm > best.norm) {
            best.norm = cand_norm;
            best.s = cand_s;
            best.t = cand_t;
        } else {
            // Ties move the representative point, never the value.
            best.s = cand_s;
            best.t = cand_t;
        }
        best.trace.push_back(best.norm);
        w *= 0.1;
    }
    return best;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::vector<SurfaceSample> evaluate_surface(const BiasPolynomial& p, int grid_n) {
    if (grid_n < 2) {
        throw ConfigError("surface grid needs at least 2 points per axis");
    }
    const BiasPolynomial canon = canonicalize(p); // validates words and coefficients
    const std::size_t n = static_cast<std::size_t>(grid_n);
    std::vector<SurfaceSample> out(n * n);
    parallel_for(n * n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::size_t i = idx / n, j = idx % n;
            const double s = -1.0 + 2.0 * static_cast<double>(i) / (grid_n - 1);
            const double t = -1.0 + 2.0 * static_cast<double>(j) / (grid_n - 1);
            out[idx] = SurfaceSample{AnticommPoint{s, t}, norm_at(canon, s, t)};
        }
    });
    return out;
}

OptimizationResult optimize(const BiasPolynomial& p, const OptimizerConfig& cfg) {
    if (cfg.grid_n < 2) throw ConfigError("optimize: grid_n must be >= 2");
    if (cfg.refine_iters < 0) throw ConfigError("optimize: refine_iters must be >= 0");
    if (!(cfg.tol > 0.0)) throw ConfigError("optimize: tol must be positive");

    const BiasPolynomial canon = canonicalize(p);

    OptimizationResult res;
    res.tolerance = cfg.tol;
    res.grid = evaluate_surface(canon, cfg.grid_n);

    const std::size_t n = static_cast<std::size_t>(cfg.grid_n);
    double gmax = res.grid[0].norm, gmin = res.grid[0].norm;
    for (const auto& smp : res.grid) {
        gmax = std::max(gmax, smp.norm);
        gmin = std::min(gmin, smp.norm);
    }
    res.value = gmax;
    res.value_trace.push_back(gmax);

    // A surface that is flat to within tol has nothing to refine; every grid
    // point already attains the value.
    const bool flat = (gmax - gmin) <= cfg.tol;

    std::vector<std::size_t> seeds;
    if (!flat && cfg.refine_iters > 0) {
        // Seeds: strict-or-tied local maxima of the coarse grid (so plateau
        // edges count) plus every global tie within tol.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double here = res.grid[i * n + j].norm;
                bool is_local_max = true;
                for (int di = -1; di <= 1 && is_local_max; ++di) {
                    for (int dj = -1; dj <= 1; ++dj) {
                        if (di == 0 && dj == 0) continue;
                        const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(i) + di;
                        const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(j) + dj;
                        if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(n) ||
                            nj >= static_cast<std::ptrdiff_t>(n))
                            continue;
                        if (res.grid[static_cast<std::size_t>(ni) * n + static_cast<std::size_t>(nj)].norm >
                            here) {
                            is_local_max = false;
                            break;
                        }
                    }
                }
                if (is_local_max || here >= gmax - cfg.tol) seeds.push_back(i * n + j);
            }
        }
        if (seeds.size() > kMaxSeeds) {
            std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) {
                return res.grid[a].norm > res.grid[b].norm;
            });
            seeds.resize(kMaxSeeds);
            std::sort(seeds.begin(), seeds.end());
        }
    }

    std::vector<SeedResult> refined(seeds.size());
    const double h = 2.0 / (cfg.grid_n - 1);
    parallel_for(seeds.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const SurfaceSample& seed = res.grid[seeds[k]];
            refined[k] = refine_seed(canon, seed.point.s_alice, seed.point.t_bob, seed.norm, h,
                                     cfg.refine_iters);
        }
    });

    const int iters_done = (!seeds.empty()) ? cfg.refine_iters : 0;
    res.refinement_depth = iters_done;
    for (int it = 0; it < iters_done; ++it) {
        double v = res.value_trace.back();
        for (const auto& r : refined) v = std::max(v, r.trace[static_cast<std::size_t>(it)]);
        res.value_trace.push_back(v);
    }
    res.value = res.value_trace.back();

    // Best set: refined candidates within tol of the value; with no
    // refinement (flat surface or refine_iters = 0) the grid ties qualify.
    std::vector<AnticommPoint> candidates;
    if (refined.empty()) {
        for (const auto& smp : res.grid) {
            if (smp.norm >= res.value - cfg.tol) candidates.push_back(smp.point);
        }
    } else {
        for (const auto& r : refined) {
            if (r.norm >= res.value - cfg.tol) candidates.push_back(AnticommPoint{r.s, r.t});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const AnticommPoint& a, const AnticommPoint& b) {
        return a.s_alice != b.s_alice ? a.s_alice < b.s_alice : a.t_bob < b.t_bob;
    });
    const double dedup = std::sqrt(cfg.tol);
    for (const auto& c : candidates) {
        bool dup = false;
        for (const auto& kept : res.best_points) {
            if (std::abs(kept.s_alice - c.s_alice) <= dedup && std::abs(kept.t_bob - c.t_bob) <= dedup) {
                dup = true;
                break;
            }
        }
        if (!dup) res.best_points.push_back(c);
    }

    // Interval annotation: >= 10 best points strung along one axis (shared
    // other coordinate) are reported as a segment of the best set.
    auto detect = [&](bool fixed_is_t) {
        std::vector<AnticommPoint> pts = res.best_points;
        std::sort(pts.begin(), pts.end(), [&](const AnticommPoint& a, const AnticommPoint& b) {
            const double af = fixed_is_t ? a.t_bob : a.s_alice;
            const double bf = fixed_is_t ? b.t_bob : b.s_alice;
            const double av = fixed_is_t ? a.s_alice : a.t_bob;
            const double bv = fixed_is_t ? b.s_alice : b.t_bob;
            return af != bf ? af < bf : av < bv;
        });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= pts.size(); ++i) {
            const auto fixed_of = [&](std::size_t k) {
                return fixed_is_t ? pts[k].t_bob : pts[k].s_alice;
            };
            if (i == pts.size() || std::abs(fixed_of(i) - fixed_of(start)) > dedup) {
                if (i - start >= 10) {
                    double lo = 1.0, hi = -1.0;
                    for (std::size_t k = start; k < i; ++k) {
                        const double v = fixed_is_t ? pts[k].s_alice : pts[k].t_bob;
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                    res.best_intervals.push_back(
                        BestInterval{fixed_is_t ? 's' : 't', fixed_of(start), lo, hi});
                }
                start = i;
            }
        }
    };
    detect(true);
    detect(false);

    return res;
}

std::string surface_to_csv(const std::vector<SurfaceSample>& samples) {
    std::string out = "s,t,norm\n";
    for (const auto& smp : samples) {
        out += fmt17(smp.point.s_alice);
        out += ',';
        out += fmt17(smp.point.t_bob);
        out += ',';
        out += fmt17(smp.norm);
        out += '\n';
    }
    return out;
}

} // namespace biquad
