#pragma once

#include <utility>
#include <vector>

#include "boundarylab/geometry.hpp"

namespace bdlab {

enum class PartitionMode { general, bowen_series, dual, midpoint, explicit_ };

/// The jump set A_1 < ... < A_N with A_i in the window (P_i, Q_i)
/// (A_i = P_i in bowen_series mode, A_i = Q_i in dual mode). Stores the
/// geometry identity (g, N) it was built against.
struct Partition {
    int g = 0;
    int N = 0;
    PartitionMode mode = PartitionMode::general;
    std::vector<CirclePoint> A; // 1-based, size N+1

    CirclePoint a(int i) const {
        int r = (i - 1) % N;
        if (r < 0) r += N;
        return A[r + 1];
    }
};

Partition partition_bowen_series(const SurfaceGeometry& geom);
Partition partition_dual(const SurfaceGeometry& geom);
Partition partition_midpoint(const SurfaceGeometry& geom);
/// angles[1..N] must lie strictly inside the windows (P_i, Q_i).
Partition partition_explicit(const SurfaceGeometry& geom,
                             const std::vector<CirclePoint>& angles);

/// Throws domain_error if part does not match geom or violates its mode's
/// window invariants.
void validate_partition(const SurfaceGeometry& geom, const Partition& part);

/// The unique i with x in [A_i, A_{i+1}) counterclockwise.
int interval_index(const Partition& part, CirclePoint x);

/// f(x) = T_i(x) with i = interval_index(part, x); returns (image, i).
std::pair<CirclePoint, int> f_apply(const SurfaceGeometry& geom,
                                    const Partition& part, CirclePoint x);

/// T_i(x) regardless of which interval contains x; realizes the upper/lower
/// convention at discontinuity points.
CirclePoint f_apply_side(const SurfaceGeometry& geom, CirclePoint x, int i);

/// Natural extension step: i is selected by y, T_i applied to both
/// coordinates. Throws singular_error for pairs within 1e-12 of the diagonal.
std::pair<std::pair<CirclePoint, CirclePoint>, int>
F_apply(const SurfaceGeometry& geom, const Partition& part,
        CirclePoint x, CirclePoint y);

struct OrbitTrace {
    std::vector<CirclePoint> points;
    std::vector<int> sides; // sides[k] maps points[k] to points[k+1]
};

OrbitTrace orbit(const SurfaceGeometry& geom, const Partition& part,
                 CirclePoint x, int n);

/// f^{-1}(I) as the finite union of T_sigma(i)(I) ∩ [A_i, A_{i+1}),
/// clipped half-open to match the forward partition.
std::vector<CircleArc> f_preimage_interval(const SurfaceGeometry& geom,
                                           const Partition& part,
                                           const CircleArc& I);

} // namespace bdlab
