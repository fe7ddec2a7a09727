#include "boundarylab/geometry.hpp"

#include <cmath>

namespace bdlab {

SidePairing pairing_build(int g) {
    if (g < 2) throw domain_error("pairing_build: genus must be >= 2");
    SidePairing sp;
    sp.N = 8 * g - 4;
    sp.sigma.assign(sp.N + 1, 0);
    sp.rho.assign(sp.N + 1, 0);
    sp.theta.assign(sp.N + 1, 0);
    for (int i = 1; i <= sp.N; ++i)
        sp.sigma[i] = (i % 2 == 1) ? sp.wrap(4 * g - i) : sp.wrap(2 - i);
    for (int i = 1; i <= sp.N; ++i) {
        sp.rho[i] = sp.wrap(sp.sigma[i] + 1);
        sp.theta[i] = sp.wrap(sp.sigma[i] - 1);
    }
    for (int i = 1; i <= sp.N; ++i) {
        if (sp.sigma[sp.sigma[i]] != i)
            throw construction_error("pairing_build: sigma is not an involution");
        if (sp.theta[sp.wrap(sp.theta[sp.wrap(i - 1)] - 1)] != i)
            throw construction_error("pairing_build: theta identity failed");
        if (sp.wrap(sp.rho[sp.wrap(sp.rho[i] + 1)] + 1) != i)
            throw construction_error("pairing_build: rho identity failed");
        if (sp.theta[sp.rho[i]] != sp.wrap(4 * g - 4 + i))
            throw construction_error("pairing_build: theta(rho(i)) identity failed");
    }
    return sp;
}

SurfaceGeometry build_geometry(int g) {
    SurfaceGeometry geom;
    geom.pairing = pairing_build(g);
    geom.g = g;
    geom.N = geom.pairing.N;
    const int N = geom.N;
    geom.t = std::numbers::pi / N;
    geom.phi = std::asin(std::sqrt(2.0) * std::sin(geom.t));
    geom.d = 1.0 / std::sqrt(std::cos(2.0 * geom.t));
    geom.r_euc = std::sqrt(2.0) * std::sin(geom.t) / std::sqrt(std::cos(2.0 * geom.t));
    geom.v = std::sqrt((std::cos(geom.t) - std::sin(geom.t)) /
                       (std::cos(geom.t) + std::sin(geom.t)));

    geom.P.assign(N + 1, CirclePoint{});
    geom.Q.assign(N + 1, CirclePoint{});
    geom.V.assign(N + 1, cplx{});
    for (int i = 1; i <= N; ++i) {
        geom.P[i] = normalize_angle(2.0 * geom.t * i - geom.phi);
        geom.Q[i] = normalize_angle(2.0 * geom.t * (i - 1) + geom.phi);
        geom.V[i] = std::polar(geom.v, geom.t * (2 * i - 1));
    }

    geom.T.reserve(N + 1);
    geom.T.push_back(MobiusMap::identity()); // index 0 unused
    for (int i = 1; i <= N; ++i) {
        const int s = geom.sigma(i);
        geom.T.push_back(MobiusMap::from_three_points(
            {geom.p(i), geom.q(i + 1), geom.q(i)},
            {geom.q(s + 1), geom.p(s), geom.q(s + 2)}));
    }

    constexpr double kBudget = 1e-10;
    if (std::fabs(geom.d * geom.d - geom.r_euc * geom.r_euc - 1.0) > 1e-12)
        throw construction_error("build_geometry: isometric circles not orthogonal");
    if (!(geom.phi > geom.t && geom.phi < 2.0 * geom.t))
        throw construction_error("build_geometry: endpoint interleaving violated");
    for (int i = 1; i <= N; ++i) {
        if (!(ccw_delta(geom.p(i), geom.q(i)) > 0.0 &&
              ccw_delta(geom.q(i), geom.p(i + 1)) > 0.0))
            throw construction_error("build_geometry: circular order P,Q not strict");
    }
    if (!verify_group_relations(geom, kBudget).pass())
        throw construction_error("build_geometry: group relations out of budget");
    if (!verify_endpoint_mapping(geom, kBudget).pass())
        throw construction_error("build_geometry: endpoint mapping out of budget");
    return geom;
}

VerifyReport verify_group_relations(const SurfaceGeometry& geom, double tol) {
    const int N = geom.N;
    CheckResult pairing{"T_sigma(i) T_i = Id", 0.0, tol, false};
    CheckResult four_term{"T_rho^3 T_rho^2 T_rho T_i = Id", 0.0, tol, false};
    CheckResult vertex{"T_i(V_i) = V_rho(i)", 0.0, tol, false};
    const MobiusMap id = MobiusMap::identity();
    for (int i = 1; i <= N; ++i) {
        const MobiusMap c2 = compose(geom.gen(geom.sigma(i)), geom.gen(i));
        pairing.max_residual = std::max(pairing.max_residual, mobius_distance(c2, id));

        const int r1 = geom.rho(i), r2 = geom.rho(r1), r3 = geom.rho(r2);
        const MobiusMap c4 = compose(geom.gen(r3),
                              compose(geom.gen(r2), compose(geom.gen(r1), geom.gen(i))));
        four_term.max_residual = std::max(four_term.max_residual, mobius_distance(c4, id));

        const cplx vi = geom.gen(i).apply_disk(geom.vert(i));
        vertex.max_residual = std::max(vertex.max_residual,
                                       std::abs(vi - geom.vert(geom.rho(i))));
    }
    VerifyReport rep;
    for (CheckResult* c : {&pairing, &four_term, &vertex}) {
        c->pass = c->max_residual < tol;
        rep.checks.push_back(*c);
    }
    return rep;
}

VerifyReport verify_endpoint_mapping(const SurfaceGeometry& geom, double tol) {
    CheckResult ep{"T_i endpoint images (P_{i-1},P_i,Q_i,P_{i+1},Q_{i+1},Q_{i+2})",
                   0.0, tol, false};
    for (int i = 1; i <= geom.N; ++i) {
        const int s = geom.sigma(i);
        const std::pair<CirclePoint, CirclePoint> pairs[6] = {
            {geom.p(i - 1), geom.p(s + 1)}, {geom.p(i), geom.q(s + 1)},
            {geom.q(i), geom.q(s + 2)},     {geom.p(i + 1), geom.p(s - 1)},
            {geom.q(i + 1), geom.p(s)},     {geom.q(i + 2), geom.q(s)}};
        for (const auto& [x, y] : pairs) {
            const double r = circ_dist(geom.gen(i).apply(x), y);
            ep.max_residual = std::max(ep.max_residual, r);
        }
    }
    ep.pass = ep.max_residual < tol;
    VerifyReport rep;
    rep.checks.push_back(ep);
    return rep;
}

AppendixAngles appendix_angles(int g) {
    if (g < 2) throw domain_error("appendix_angles: genus must be >= 2");
    AppendixAngles a{};
    a.t = std::numbers::pi / (8 * g - 4);
    a.phi = std::asin(std::sqrt(2.0) * std::sin(a.t));
    a.v = std::sqrt((std::cos(a.t) - std::sin(a.t)) / (std::cos(a.t) + std::sin(a.t)));
    a.y = std::sqrt(1.0 + a.v * a.v - 2.0 * a.v * std::cos(3.0 * a.t - a.phi));
    a.alpha = std::asin(a.v * std::sin(3.0 * a.t - a.phi) / a.y);
    a.beta = std::numbers::pi / 4.0 - a.t;
    a.gamma = std::numbers::pi - (3.0 * a.t - a.phi) - a.alpha;
    a.delta = 3.0 * std::numbers::pi / 4.0;
    a.omega = 3.0 * a.t - a.phi + 2.0 * a.alpha - std::numbers::pi / 4.0;
    return a;
}

namespace {

// x in [lo, hi] (ccw, inside one P-Q window) with map(x) = target; the
// restriction is a monotone circle homeomorphism, so plain bisection in
// offset coordinates converges.
CirclePoint bisect_preimage(const MobiusMap& map, CirclePoint lo, CirclePoint hi,
                            CirclePoint target) {
    const CirclePoint flo = map.apply(lo);
    const double goal = ccw_delta(flo, target);
    const double span = ccw_delta(lo, hi);
    if (!(goal > 0.0 && goal < ccw_delta(flo, map.apply(hi))))
        throw construction_error("bisect_preimage: target not bracketed");
    double a = 0.0, b = span;
    for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
        const double mid = 0.5 * (a + b);
        const double off = ccw_delta(flo, map.apply(normalize_angle(lo.theta + mid)));
        (off < goal ? a : b) = mid;
    }
    return normalize_angle(lo.theta + 0.5 * (a + b));
}

} // namespace

CriticalPoints critical_points(const SurfaceGeometry& geom) {
    const int N = geom.N;
    CriticalPoints cp;
    cp.a.assign(N + 1, CirclePoint{});
    cp.b.assign(N + 1, CirclePoint{});
    for (int j = 1; j <= N; ++j) {
        cp.a[j] = bisect_preimage(geom.gen(j), geom.p(j), geom.q(j),
                                  geom.p(geom.rho(j) + 1));
        cp.b[j] = bisect_preimage(geom.gen(j - 1), geom.p(j), geom.q(j),
                                  geom.q(geom.theta(j - 1)));
        if (circ_dist(geom.gen(j).apply(cp.a[j]), geom.p(geom.rho(j) + 1)) > 1e-12 ||
            circ_dist(geom.gen(j - 1).apply(cp.b[j]), geom.q(geom.theta(j - 1))) > 1e-12)
            throw construction_error("critical_points: defining equation residual too large");
        const CirclePoint mid =
            arc_midpoint(CircleArc{geom.p(j), geom.q(j), EdgePolicy::closed_closed});
        const bool a_ok = ccw_delta(mid, cp.a[j]) > 0.0 &&
                          ccw_delta(cp.a[j], geom.q(j)) > 0.0;
        const bool b_ok = ccw_delta(geom.p(j), cp.b[j]) > 0.0 &&
                          ccw_delta(cp.b[j], mid) > 0.0;
        if (!a_ok || !b_ok)
            throw construction_error("critical_points: half-arc position bound violated");
    }
    return cp;
}

ContractionReport verify_contraction(const SurfaceGeometry& geom) {
    ContractionReport rep;
    for (int k = 1; k <= geom.N; ++k) {
        const int s = geom.sigma(k);
        // T_k(Q_{k+2}) = Q_sigma(k): image arc is [T_k P_{k+2}, Q_sigma(k)]
        const double num1 = ccw_delta(geom.gen(k).apply(geom.p(k + 2)), geom.q(s));
        const double den1 = ccw_delta(geom.p(s), geom.q(s));
        // T_k(P_{k-1}) = P_{sigma(k)+1}: image arc is [P_{sigma(k)+1}, T_k Q_{k-1}]
        const double num2 = ccw_delta(geom.p(s + 1), geom.gen(k).apply(geom.q(k - 1)));
        const double den2 = ccw_delta(geom.p(s + 1), geom.q(s + 1));
        rep.max_ratio = std::max({rep.max_ratio, num1 / den1, num2 / den2});
    }
    rep.pass = rep.max_ratio < 0.5;
    return rep;
}

} // namespace bdlab
