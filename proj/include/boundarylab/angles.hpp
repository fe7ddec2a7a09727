#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "boundarylab/errors.hpp"

namespace bdlab {

inline constexpr double kTau = 2.0 * std::numbers::pi;

// Default tolerance for circular point equality. Geometric constructions
// target ~1e-12 internal accuracy, so comparisons at 1e-9 have headroom.
inline constexpr double kTolEqual = 1e-9;

/// A point of the unit circle, stored as its angle in [0, 2*pi).
struct CirclePoint {
    double theta = 0.0;
};

/// Canonical representative of an angle in [0, 2*pi). Idempotent.
CirclePoint normalize_angle(double theta);

/// Counterclockwise offset from `from` to `to`, in [0, 2*pi).
double ccw_delta(CirclePoint from, CirclePoint to);

/// Circular distance, in [0, pi].
double circ_dist(CirclePoint a, CirclePoint b);

inline bool tol_equal(CirclePoint a, CirclePoint b, double tol = kTolEqual) {
    return circ_dist(a, b) <= tol;
}

enum class EdgePolicy { closed_open, closed_closed, open_open, open_closed };

/// Counterclockwise arc from `start` to `end`. `start` numerically greater
/// than `end` is legal (wraparound). Equal endpoints with closed_closed
/// denote the full circle; with any other policy the arc is empty.
struct CircleArc {
    CirclePoint start;
    CirclePoint end;
    EdgePolicy edges = EdgePolicy::closed_open;

    bool full_circle() const {
        return start.theta == end.theta && edges == EdgePolicy::closed_closed;
    }
    bool start_closed() const {
        return edges == EdgePolicy::closed_open || edges == EdgePolicy::closed_closed;
    }
    bool end_closed() const {
        return edges == EdgePolicy::open_closed || edges == EdgePolicy::closed_closed;
    }
};

inline CircleArc arc(double start, double end, EdgePolicy e = EdgePolicy::closed_open) {
    return CircleArc{normalize_angle(start), normalize_angle(end), e};
}

double arc_length(const CircleArc& a);
bool arc_contains(const CircleArc& a, CirclePoint p);
CirclePoint arc_midpoint(const CircleArc& a);

/// Intersection of two counterclockwise arcs, as 0, 1 or 2 arcs carrying
/// `policy`. Endpoint bookkeeping is by position only; slivers shorter than
/// 1e-15 are dropped.
std::vector<CircleArc> arc_intersect(const CircleArc& a, const CircleArc& b,
                                     EdgePolicy policy = EdgePolicy::closed_open);

/// True if the open interiors of the two arcs are disjoint.
bool arc_interiors_disjoint(const CircleArc& a, const CircleArc& b);

} // namespace bdlab
