#include "boundarylab/boundary_map.hpp"

#include <algorithm>
#include <cmath>

namespace bdlab {

namespace {

Partition make_partition(const SurfaceGeometry& geom, PartitionMode mode,
                         std::vector<CirclePoint> A) {
    Partition part;
    part.g = geom.g;
    part.N = geom.N;
    part.mode = mode;
    part.A = std::move(A);
    validate_partition(geom, part);
    return part;
}

} // namespace

Partition partition_bowen_series(const SurfaceGeometry& geom) {
    return make_partition(geom, PartitionMode::bowen_series, geom.P);
}

Partition partition_dual(const SurfaceGeometry& geom) {
    return make_partition(geom, PartitionMode::dual, geom.Q);
}

Partition partition_midpoint(const SurfaceGeometry& geom) {
    std::vector<CirclePoint> A(geom.N + 1);
    for (int i = 1; i <= geom.N; ++i)
        A[i] = arc_midpoint(CircleArc{geom.p(i), geom.q(i), EdgePolicy::closed_closed});
    return make_partition(geom, PartitionMode::midpoint, std::move(A));
}

Partition partition_explicit(const SurfaceGeometry& geom,
                             const std::vector<CirclePoint>& angles) {
    std::vector<CirclePoint> A(geom.N + 1);
    if (angles.size() == static_cast<std::size_t>(geom.N))
        std::copy(angles.begin(), angles.end(), A.begin() + 1);
    else if (angles.size() == static_cast<std::size_t>(geom.N) + 1)
        A = angles;
    else
        throw domain_error("partition_explicit: expected N angles");
    return make_partition(geom, PartitionMode::explicit_, std::move(A));
}

void validate_partition(const SurfaceGeometry& geom, const Partition& part) {
    if (part.g != geom.g || part.N != geom.N ||
        part.A.size() != static_cast<std::size_t>(geom.N) + 1)
        throw domain_error("partition: geometry mismatch");
    for (int i = 1; i <= geom.N; ++i) {
        switch (part.mode) {
            case PartitionMode::bowen_series:
                if (part.A[i].theta != geom.P[i].theta)
                    throw domain_error("partition: bowen_series requires A_i = P_i");
                break;
            case PartitionMode::dual:
                if (part.A[i].theta != geom.Q[i].theta)
                    throw domain_error("partition: dual requires A_i = Q_i");
                break;
            default: {
                const double off = ccw_delta(geom.p(i), part.A[i]);
                if (!(off > 0.0 && off < ccw_delta(geom.p(i), geom.q(i))))
                    throw domain_error("partition: A_i must lie strictly in (P_i, Q_i)");
            }
        }
    }
}

int interval_index(const Partition& part, CirclePoint x) {
    // the windows (P_i, Q_i) are increasing within [0, 2*pi), so A is sorted
    const auto begin = part.A.begin() + 1;
    const auto it = std::upper_bound(begin, part.A.end(), x.theta,
                                     [](double v, CirclePoint p) { return v < p.theta; });
    const int k = static_cast<int>(it - begin);
    return k == 0 ? part.N : k;
}

std::pair<CirclePoint, int> f_apply(const SurfaceGeometry& geom,
                                    const Partition& part, CirclePoint x) {
    const int i = interval_index(part, x);
    return {geom.gen(i).apply(x), i};
}

CirclePoint f_apply_side(const SurfaceGeometry& geom, CirclePoint x, int i) {
    return geom.gen(i).apply(x);
}

std::pair<std::pair<CirclePoint, CirclePoint>, int>
F_apply(const SurfaceGeometry& geom, const Partition& part,
        CirclePoint x, CirclePoint y) {
    if (circ_dist(x, y) <= 1e-12)
        throw singular_error("F_apply: pair on the diagonal");
    const int i = interval_index(part, y);
    return {{geom.gen(i).apply(x), geom.gen(i).apply(y)}, i};
}

OrbitTrace orbit(const SurfaceGeometry& geom, const Partition& part,
                 CirclePoint x, int n) {
    if (n < 0) throw domain_error("orbit: n must be >= 0");
    OrbitTrace tr;
    tr.points.reserve(n + 1);
    tr.sides.reserve(n);
    tr.points.push_back(x);
    for (int k = 0; k < n; ++k) {
        auto [img, side] = f_apply(geom, part, tr.points.back());
        tr.points.push_back(img);
        tr.sides.push_back(side);
    }
    return tr;
}

std::vector<CircleArc> f_preimage_interval(const SurfaceGeometry& geom,
                                           const Partition& part,
                                           const CircleArc& I) {
    if (!(arc_length(I) > 0.0))
        throw domain_error("f_preimage_interval: empty arc");
    std::vector<CircleArc> out;
    if (I.full_circle()) {
        out.push_back(I);
        return out;
    }
    for (int i = 1; i <= part.N; ++i) {
        const MobiusMap inv = geom.gen(i).inverse();
        const CircleArc pull = CircleArc{inv.apply(I.start), inv.apply(I.end),
                                         EdgePolicy::closed_open};
        const CircleArc branch{part.a(i), part.a(i + 1), EdgePolicy::closed_open};
        for (const CircleArc& piece : arc_intersect(pull, branch))
            out.push_back(piece);
    }
    return out;
}

} // namespace bdlab
