#include "boundarylab/angles.hpp"

#include <algorithm>

namespace bdlab {

CirclePoint normalize_angle(double theta) {
    if (!std::isfinite(theta))
        throw domain_error("normalize_angle: non-finite angle");
    double r = std::fmod(theta, kTau);
    if (r < 0.0) r += kTau;
    if (r >= kTau) r = 0.0; // fmod/+ rounding can land exactly on 2*pi
    return CirclePoint{r};
}

double ccw_delta(CirclePoint from, CirclePoint to) {
    double d = to.theta - from.theta;
    if (d < 0.0) d += kTau;
    if (d >= kTau) d = 0.0;
    return d;
}

double circ_dist(CirclePoint a, CirclePoint b) {
    double d = std::fabs(a.theta - b.theta);
    return std::min(d, kTau - d);
}

double arc_length(const CircleArc& a) {
    if (a.start.theta == a.end.theta)
        return a.full_circle() ? kTau : 0.0;
    return ccw_delta(a.start, a.end);
}

bool arc_contains(const CircleArc& a, CirclePoint p) {
    if (a.full_circle()) return true;
    const double len = arc_length(a);
    const double off = ccw_delta(a.start, p);
    if (off == 0.0) return a.start_closed();
    if (off == len) return a.end_closed();
    return off < len;
}

CirclePoint arc_midpoint(const CircleArc& a) {
    return normalize_angle(a.start.theta + 0.5 * arc_length(a));
}

std::vector<CircleArc> arc_intersect(const CircleArc& a, const CircleArc& b,
                                     EdgePolicy policy) {
    std::vector<CircleArc> out;
    if (a.full_circle()) { out.push_back(b); return out; }
    if (b.full_circle()) { out.push_back(a); return out; }
    const double blen = arc_length(b);
    const double alen = arc_length(a);
    const double off = ccw_delta(b.start, a.start);
    // in coordinates where b = [0, blen), a = [off, off+alen), possibly split at 2*pi
    const auto emit = [&](double lo, double hi) {
        const double s = std::max(lo, 0.0);
        const double e = std::min(hi, blen);
        if (e - s > 1e-15)
            out.push_back(CircleArc{normalize_angle(b.start.theta + s),
                                    normalize_angle(b.start.theta + e), policy});
    };
    if (off + alen <= kTau) {
        emit(off, off + alen);
    } else {
        emit(off, kTau);
        emit(0.0, off + alen - kTau);
    }
    return out;
}

bool arc_interiors_disjoint(const CircleArc& a, const CircleArc& b) {
    if (arc_length(a) == 0.0 || arc_length(b) == 0.0) return true;
    if (a.full_circle() || b.full_circle()) return false;
    auto strictly_inside = [](const CircleArc& arc_, CirclePoint p) {
        const double off = ccw_delta(arc_.start, p);
        return off > 0.0 && off < arc_length(arc_);
    };
    if (strictly_inside(a, b.start) || strictly_inside(a, b.end)) return false;
    if (strictly_inside(b, a.start) || strictly_inside(b, a.end)) return false;
    // identical arcs (all endpoints on edges) still overlap
    if (a.start.theta == b.start.theta && a.end.theta == b.end.theta) return false;
    return true;
}

} // namespace bdlab
