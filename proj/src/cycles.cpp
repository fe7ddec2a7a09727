#include "boundarylab/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "boundarylab/rng.hpp"

namespace bdlab {

namespace {

constexpr double kSampleMargin = 1e-9;

bool in_open_arc(CirclePoint x, CirclePoint lo, CirclePoint hi) {
    const double off = ccw_delta(lo, x);
    return off > 0.0 && off < ccw_delta(lo, hi);
}

bool in_closed_open_arc(CirclePoint x, CirclePoint lo, CirclePoint hi) {
    return ccw_delta(lo, x) < ccw_delta(lo, hi);
}

// Bucketed lookup of earlier orbit points at tolerance tol.
class PointIndex {
  public:
    explicit PointIndex(double tol) : tol_(tol) {}

    void insert(CirclePoint p, int idx) {
        map_.emplace(key(p.theta), Entry{p, idx});
    }

    // all stored indices within tol of p, ascending
    std::vector<int> find(CirclePoint p) const {
        std::vector<int> out;
        const std::int64_t k0 = key(p.theta);
        for (std::int64_t k : {k0 - 1, k0, k0 + 1}) {
            auto [lo, hi] = map_.equal_range(wrap_key(k));
            for (auto it = lo; it != hi; ++it)
                if (circ_dist(it->second.p, p) <= tol_) out.push_back(it->second.idx);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    struct Entry {
        CirclePoint p;
        int idx;
    };
    std::int64_t key(double theta) const {
        return static_cast<std::int64_t>(std::floor(theta / tol_));
    }
    std::int64_t wrap_key(std::int64_t k) const {
        const std::int64_t n = static_cast<std::int64_t>(std::floor(kTau / tol_));
        if (k < 0) return k + n + 1;
        if (k > n) return k - n - 1;
        return k;
    }
    double tol_;
    std::unordered_multimap<std::int64_t, Entry> map_;
};

} // namespace

std::pair<CirclePoint, int> f_step_convention(const SurfaceGeometry& geom,
                                              const Partition& part,
                                              CirclePoint x, bool upper,
                                              int* hits, double hit_tol) {
    const int i = interval_index(part, x);
    // a hit can sit on either side of A_i or A_{i+1} numerically
    for (int j : {i, part.N == i ? 1 : i + 1}) {
        if (circ_dist(x, part.a(j)) <= hit_tol) {
            if (hits) ++*hits;
            const int side = upper ? j : geom.wrap(j - 1);
            return {geom.gen(side).apply(x), side};
        }
    }
    return {geom.gen(i).apply(x), i};
}

CycleReport cycle_detect(const SurfaceGeometry& geom, const Partition& part,
                         int i, int max_iter, double tol) {
    if (max_iter < 1) throw domain_error("cycle_detect: max_iter must be >= 1");
    i = geom.wrap(i);
    CycleReport rep;
    rep.i = i;
    rep.upper.points.push_back(geom.gen(i).apply(part.a(i)));
    rep.lower.points.push_back(geom.gen(i - 1).apply(part.a(i)));

    PointIndex upper_ix(tol), lower_ix(tol);
    upper_ix.insert(rep.upper.points[0], 0);
    lower_ix.insert(rep.lower.points[0], 0);

    int best_m = -1, best_k = -1;
    const auto consider = [&](int m, int k) {
        if (best_m < 0 || std::make_pair(m + k, m) < std::make_pair(best_m + best_k, best_m)) {
            best_m = m;
            best_k = k;
        }
    };
    for (int k : lower_ix.find(rep.upper.points[0])) consider(0, k);

    for (int r = 1; r <= max_iter; ++r) {
        auto [ux, us] = f_step_convention(geom, part, rep.upper.points.back(), true,
                                             &rep.discontinuity_hits);
        rep.upper.points.push_back(ux);
        rep.upper.sides.push_back(us);
        auto [lx, ls] = f_step_convention(geom, part, rep.lower.points.back(), false,
                                             &rep.discontinuity_hits);
        rep.lower.points.push_back(lx);
        rep.lower.sides.push_back(ls);
        upper_ix.insert(ux, r);
        lower_ix.insert(lx, r);

        for (int k : lower_ix.find(ux)) consider(r, k);
        for (int m : upper_ix.find(lx)) consider(m, r);
        // all pairs with max index <= r are checked; a later pair has sum > r
        if (best_m >= 0 && best_m + best_k <= r) break;
    }
    if (best_m < 0) return rep; // closed = false

    // Forward consistency: a genuine closure is one algebraic point, so both
    // continuations must take the same branch and stay together. Hits on the
    // jump set are resolved at the matching tolerance here: the cycle end can
    // sit exactly on some A_j (midpoint partitions do this), leaving the two
    // numerical representatives on opposite sides of it.
    CirclePoint u = rep.upper.points[best_m];
    CirclePoint l = rep.lower.points[best_k];
    for (int s = 0; s < 3; ++s) {
        const auto [un, uside] = f_step_convention(geom, part, u, true, nullptr, tol);
        const auto [ln, lside] = f_step_convention(geom, part, l, true, nullptr, tol);
        if (uside != lside) return rep; // straddles a discontinuity: not a closure
        u = un;
        l = ln;
        if (circ_dist(u, l) > 1e-6) return rep; // near-collision, not a closure
    }

    rep.closed = true;
    rep.m = best_m;
    rep.k = best_k;
    rep.end = rep.upper.points[best_m];
    rep.is_short = (best_m == 1 && best_k == 1);
    rep.upper.points.resize(best_m + 1);
    rep.upper.sides.resize(best_m);
    rep.lower.points.resize(best_k + 1);
    rep.lower.sides.resize(best_k);
    return rep;
}

bool is_short_cycle(const SurfaceGeometry& geom, const Partition& part, int i) {
    i = geom.wrap(i);
    const CirclePoint up = geom.gen(i).apply(part.a(i));
    const CirclePoint low = geom.gen(i - 1).apply(part.a(i));
    const int r = geom.rho(i);
    const int th = geom.theta(i - 1);
    return in_open_arc(up, geom.q(r), part.a(r + 1)) &&
           in_open_arc(low, part.a(th), geom.p(th + 1));
}

bool is_short_cycle_all(const SurfaceGeometry& geom, const Partition& part) {
    for (int i = 1; i <= geom.N; ++i)
        if (!is_short_cycle(geom, part, i)) return false;
    return true;
}

namespace {

Partition sample_in_windows(const SurfaceGeometry& geom, std::uint64_t seed,
                            const std::vector<CirclePoint>& lo,
                            const std::vector<CirclePoint>& hi,
                            PartitionMode mode) {
    std::vector<CirclePoint> A(geom.N + 1);
    for (int i = 1; i <= geom.N; ++i) {
        SplitMix64 rng = derived_rng(seed, static_cast<std::uint64_t>(i));
        const double width = ccw_delta(lo[i], hi[i]) - 2.0 * kSampleMargin;
        if (width <= 0.0)
            throw construction_error("sample partition: window narrower than margins");
        A[i] = normalize_angle(lo[i].theta + kSampleMargin + rng.u01() * width);
    }
    Partition part;
    part.g = geom.g;
    part.N = geom.N;
    part.mode = mode;
    part.A = std::move(A);
    validate_partition(geom, part);
    return part;
}

} // namespace

Partition sample_short_cycle_partition(const SurfaceGeometry& geom, std::uint64_t seed) {
    const CriticalPoints cp = critical_points(geom);
    return sample_in_windows(geom, seed, cp.b, cp.a, PartitionMode::general);
}

Partition sample_general_partition(const SurfaceGeometry& geom, std::uint64_t seed) {
    return sample_in_windows(geom, seed, geom.P, geom.Q, PartitionMode::general);
}

int psi_iterate(const SidePairing& pairing, int i, int n) {
    int j = pairing.wrap(i);
    for (int s = 0; s < n; ++s) j = pairing.theta[pairing.rho[j]];
    return j;
}

namespace {

// first (preperiod, period) recurrence in an orbit generated by `step`
template <typename Step>
std::tuple<OrbitTrace, int, int> detect_recurrence(CirclePoint seed, Step step,
                                                   int max_iter, double tol) {
    OrbitTrace tr;
    tr.points.push_back(seed);
    for (int n = 1; n <= max_iter; ++n) {
        auto [x, side] = step(tr.points.back());
        tr.points.push_back(x);
        tr.sides.push_back(side);
        for (int k = 0; k < n; ++k) {
            if (circ_dist(tr.points[k], x) <= tol)
                return {tr, k, n - k};
        }
    }
    return {tr, -1, -1};
}

} // namespace

PeriodicOrbitReport periodic_orbit_report(const SurfaceGeometry& geom,
                                          const Partition& part, int i,
                                          int max_iter, double tol) {
    i = geom.wrap(i);
    PeriodicOrbitReport rep;
    rep.i = i;
    const auto upper_step = [&](CirclePoint x) {
        return f_step_convention(geom, part, x, true, nullptr);
    };
    const auto lower_step = [&](CirclePoint x) {
        return f_step_convention(geom, part, x, false, nullptr);
    };
    std::tie(rep.upper, rep.upper_preperiod, rep.upper_period) =
        detect_recurrence(geom.gen(i).apply(part.a(i)), upper_step, max_iter, tol);
    std::tie(rep.lower, rep.lower_preperiod, rep.lower_period) =
        detect_recurrence(geom.gen(i - 1).apply(part.a(i)), lower_step, max_iter, tol);
    return rep;
}

VerifyReport verify_fixed_point_lemma(const SurfaceGeometry& geom,
                                      const Partition& part, double tol) {
    const int g = geom.g;
    CheckResult p2{"f^2(P_i) = P_i (lower convention)", 0.0, tol, false};
    CheckResult q2{"f^2(Q_i) = Q_i", 0.0, tol, false};
    CheckResult pfix{"f(P_i) = P_i exactly on {1, 2g, 4g-1, 6g-2}", 0.0, tol, false};
    CheckResult qfix{"f(Q_i) = Q_i exactly on {2, 2g+1, 4g, 6g-1}", 0.0, tol, false};
    const auto in_set = [&](int i, std::initializer_list<int> set) {
        for (int v : set)
            if (geom.wrap(v) == i) return true;
        return false;
    };
    for (int i = 1; i <= geom.N; ++i) {
        const CirclePoint p1 = f_step_convention(geom, part, geom.p(i), false, nullptr).first;
        const CirclePoint p2p = f_step_convention(geom, part, p1, false, nullptr).first;
        p2.max_residual = std::max(p2.max_residual, circ_dist(p2p, geom.p(i)));
        const bool p_fixed = circ_dist(p1, geom.p(i)) <= tol;
        if (p_fixed != in_set(i, {1, 2 * g, 4 * g - 1, 6 * g - 2}))
            pfix.max_residual = 1.0;

        const CirclePoint q1 = f_step_convention(geom, part, geom.q(i), true, nullptr).first;
        const CirclePoint q2p = f_step_convention(geom, part, q1, true, nullptr).first;
        q2.max_residual = std::max(q2.max_residual, circ_dist(q2p, geom.q(i)));
        const bool q_fixed = circ_dist(q1, geom.q(i)) <= tol;
        if (q_fixed != in_set(i, {2, 2 * g + 1, 4 * g, 6 * g - 1}))
            qfix.max_residual = 1.0;
    }
    VerifyReport rep;
    for (CheckResult* c : {&p2, &q2, &pfix, &qfix}) {
        c->pass = c->max_residual < ((c == &pfix || c == &qfix) ? 1.0 : tol);
        rep.checks.push_back(*c);
    }
    return rep;
}

VerifyReport verify_key_identity(const SurfaceGeometry& geom, double tol) {
    CheckResult id{"T_{sigma(i)+1} T_i = T_{sigma(i-1)-1} T_{i-1}", 0.0, tol, false};
    for (int i = 1; i <= geom.N; ++i) {
        const MobiusMap lhs = compose(geom.gen(geom.sigma(i) + 1), geom.gen(i));
        const MobiusMap rhs = compose(geom.gen(geom.sigma(i - 1) - 1), geom.gen(i - 1));
        id.max_residual = std::max(id.max_residual, mobius_distance(lhs, rhs));
    }
    id.pass = id.max_residual < tol;
    VerifyReport rep;
    rep.checks.push_back(id);
    return rep;
}

CycleStructureReport validate_cycle_structure(const SurfaceGeometry& geom,
                                              const Partition& part,
                                              const CycleReport& report) {
    CycleStructureReport out;
    if (!report.closed) return out;
    const int i = report.i;
    const int g = geom.g;

    // applicable only to the long upper branch: T_i A_i in [A_{rho(i)+1}, Q_{rho(i)+1})
    const CirclePoint u0 = report.upper.points[0];
    if (!in_closed_open_arc(u0, part.a(geom.rho(i) + 1), geom.q(geom.rho(i) + 1)))
        return out;
    out.applicable = true;
    out.sides_ok = true;
    out.containment_ok = true;

    const auto cls = [&](int j) {
        const int m4 = geom.wrap(j);
        return m4 == geom.wrap(2) || m4 == geom.wrap(2 * g + 1) ||
               m4 == geom.wrap(4 * g) || m4 == geom.wrap(6 * g - 1);
    };
    const auto upper_side = [&](int step) -> int {
        return step < static_cast<int>(report.upper.sides.size()) ? report.upper.sides[step] : -1;
    };
    const auto lower_side = [&](int step) -> int {
        return step < static_cast<int>(report.lower.sides.size()) ? report.lower.sides[step] : -1;
    };

    // While the hypotheses hold: u_{2n} in [A_{rho(psi_n)+1}, Q_{rho(psi_n)+1}),
    // sides  u:2n -> rho(psi_n)+1, u:2n+1 -> psi_n - 1,
    //        l:2n -> theta(psi_n - 1), l:2n+1 -> psi_{n+1} - 1,
    // and l_{2n+1} in (P_{psi_{n+1}}, A_{psi_{n+1}}].
    for (int n = 0;; ++n) {
        const int psi = psi_iterate(geom.pairing, i, n);
        const int psi1 = psi_iterate(geom.pairing, i, n + 1);
        if (2 * n >= report.m) { // pattern outlived the recorded orbit
            out.exit = CycleExit::pattern_exhausted;
            out.terminating_step = report.m;
            out.terminating_psi = psi;
            out.in_congruence_class = cls(psi);
            break;
        }
        const CirclePoint u2n = report.upper.points[2 * n];
        if (!in_closed_open_arc(u2n, part.a(geom.rho(psi) + 1), geom.q(geom.rho(psi) + 1))) {
            // upper orbit fell into the short branch: closure at (2n+1, 2n+1)
            out.exit = CycleExit::upper_exit;
            out.terminating_step = 2 * n + 1;
            out.terminating_psi = psi;
            out.in_congruence_class = cls(psi);
            out.closure_consistent = (report.m == 2 * n + 1 && report.k == 2 * n + 1);
            break;
        }
        if (upper_side(2 * n) != geom.wrap(geom.rho(psi) + 1) ||
            lower_side(2 * n) != geom.theta(psi - 1))
            out.sides_ok = false;
        if (2 * n + 1 >= report.m) {
            out.exit = CycleExit::pattern_exhausted;
            out.terminating_step = report.m;
            out.terminating_psi = psi;
            out.in_congruence_class = cls(psi);
            break;
        }
        const CirclePoint l2n1 = report.lower.points[2 * n + 1];
        const double off = ccw_delta(geom.p(psi1), l2n1);
        const bool lower_in = off > 0.0 && off <= ccw_delta(geom.p(psi1), part.a(psi1));
        if (!lower_in) {
            // lower orbit crossed A_{psi_{n+1}}: closure at (2n+2, 2n+2)
            out.exit = CycleExit::lower_exit;
            out.terminating_step = 2 * n + 2;
            out.terminating_psi = psi1;
            out.in_congruence_class = cls(psi1);
            out.closure_consistent = (report.m == 2 * n + 2 && report.k == 2 * n + 2);
            break;
        }
        if (upper_side(2 * n + 1) != geom.wrap(psi - 1) ||
            lower_side(2 * n + 1) != geom.wrap(psi1 - 1))
            out.sides_ok = false;
        out.stages_verified = n + 1;
    }
    return out;
}

} // namespace bdlab
