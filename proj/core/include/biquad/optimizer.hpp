#pragma once

// Norm maximization over the anticommutation square.
//
// ||p|| = sup over (s, t) in [-1,1]^2 of the operator norm of the assembled
// 4x4 matrix; every evaluation goes reduce -> assemble -> operator_norm.  A
// uniform coarse grid localizes the maximizing set, then each candidate cell
// is refined by a shrinking local grid.  Values only ever increase, so the
// reported value is a certified lower bound that also matches the true
// supremum to refinement accuracy.

#include <string>
#include <vector>

#include "biquad/reduce.hpp"
#include "biquad/word.hpp"

namespace biquad {

struct SurfaceSample {
    AnticommPoint point;
    double norm = 0.0;
};

struct OptimizerConfig {
    int grid_n = 101;      // coarse grid points per axis (>= 2)
    int refine_iters = 6;  // local refinement iterations per seed
    double tol = 1e-8;     // absolute tie tolerance for the best set
};

// A maximal segment of best points sharing one frozen coordinate; reported
// when the best set looks one-dimensional (>= 10 collinear members).
struct BestInterval {
    char varying = 's';       // coordinate that sweeps the interval: 's' or 't'
    double fixed_value = 0.0; // value of the other coordinate
    double lo = 0.0;
    double hi = 0.0;
};

struct OptimizationResult {
    double value = 0.0;
    std::vector<AnticommPoint> best_points; // deduplicated at resolution sqrt(tol)
    std::vector<BestInterval> best_intervals;
    std::vector<SurfaceSample> grid; // the coarse grid, row-major (s slow)
    std::vector<double> value_trace; // running max after each refinement pass
    int refinement_depth = 0;
    double tolerance = 0.0;
};

// Norms on a uniform grid_n x grid_n grid over [-1,1]^2, row-major with s on
// the slow axis.  Throws ConfigError for grid_n < 2.
std::vector<SurfaceSample> evaluate_surface(const BiasPolynomial& p, int grid_n);

// Coarse grid + multi-start shrinking refinement around every running-max
// cell.  Deterministic for a fixed config; parallel evaluation is reduced in
// a fixed sequential order so thread count never changes the result.
OptimizationResult optimize(const BiasPolynomial& p, const OptimizerConfig& cfg = {});

// CSV export of a surface: header "s,t,norm", one row per sample, numbers at
// 17 significant digits.
std::string surface_to_csv(const std::vector<SurfaceSample>& samples);

} // namespace biquad
