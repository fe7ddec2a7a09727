#pragma once

#include <cstdint>

#include "boundarylab/domains.hpp"

namespace bdlab {

/// Entry statistics for iterating F on random pairs until they land in a
/// target region. Histograms hold counts by entry time; all aggregates are
/// integer/max reductions, so results are independent of the worker count.
struct EntryStats {
    std::uint64_t samples = 0;
    std::uint64_t entered = 0;
    int max_entry_time = 0;
    std::vector<std::uint64_t> histogram;
    std::uint64_t violations = 0;     // post-entry forward-invariance failures
    std::uint64_t never_entered = 0;
    double max_nonentrant_exceptional_dist = 0.0;
};

/// Iterate each sample until it lands in Psi_A (or max_steps), then verify
/// forward invariance for 100 further steps. Samples are uniform pairs with
/// circular separation >= delta_min, per-sample derived RNG streams.
EntryStats trapping_experiment(const SurfaceGeometry& geom, const Partition& part,
                               const RectangularDomain& psi,
                               std::uint64_t n_samples, int max_steps,
                               std::uint64_t seed, double delta_min = 1e-3,
                               int threads = 0);

/// Entry times into Omega_A. Non-entrants are reported with the smallest
/// distance any of their iterates comes to the exceptional horizontal set
/// U_i [P_{i-1},P_i] x {Q_i}.
EntryStats attraction_experiment(const SurfaceGeometry& geom, const Partition& part,
                                 const RectangularDomain& omega,
                                 std::uint64_t n_samples, int max_steps,
                                 std::uint64_t seed, double delta_min = 1e-3,
                                 int threads = 0);

/// Forward iteration of the rectangles D by corner mapping: the residual
/// F^n(D) \ Omega_A is a union of rectangles [P_{k-1}, s_k] x [Q_k, B_k]
/// whose widths at least halve every step.
struct ResidualWidths {
    std::vector<double> max_width;  // index n-1 holds iterate n, n = 1..
    std::vector<double> max_ratio;  // max over strips of width_{n+1}/width_n
};

ResidualWidths symbolic_D_iteration(const SurfaceGeometry& geom, const Partition& part,
                                    int n_iters);

/// Distance from (x, y) to the exceptional set U_i [P_{i-1},P_i] x {Q_i}
/// (Chebyshev metric on the torus).
double exceptional_set_distance(const SurfaceGeometry& geom, CirclePoint x, CirclePoint y);

} // namespace bdlab
