#include "boundarylab/measures.hpp"

#include <cmath>

#include "boundarylab/parallel.hpp"
#include "boundarylab/rng.hpp"

namespace bdlab {

namespace {

double abs_sin_half(double x) { return std::fabs(std::sin(0.5 * x)); }

// y-membership for density fibers: half-open [start, end) per piece.
bool fiber_contains(const CircleArc& y_arc, double phi) {
    return ccw_delta(y_arc.start, normalize_angle(phi)) < arc_length(y_arc);
}

} // namespace

double nu_rect(double a, double b, double c, double d) {
    const CircleArc xarc = arc(a, b, EdgePolicy::closed_open);
    const CircleArc yarc = arc(c, d, EdgePolicy::closed_open);
    if (arc_length(xarc) == 0.0 || arc_length(yarc) == 0.0) return 0.0;
    if (!arc_interiors_disjoint(xarc, yarc))
        throw singular_error("nu_rect: rectangle crosses the diagonal");
    const double s_db = abs_sin_half(d - b);
    const double s_ca = abs_sin_half(c - a);
    const double s_cb = abs_sin_half(c - b);
    const double s_da = abs_sin_half(d - a);
    if (s_cb < 1e-300 || s_da < 1e-300)
        throw singular_error("nu_rect: rectangle corner on the diagonal");
    return std::log(s_db) + std::log(s_ca) - std::log(s_cb) - std::log(s_da);
}

double nu_domain(const RectangularDomain& dom) {
    double total = 0.0;
    for (const RectPiece* p : dom.all_pieces())
        total += nu_rect(p->x.start.theta, p->x.end.theta,
                         p->y.start.theta, p->y.end.theta);
    return total;
}

MeasureContext make_measure_context(const SurfaceGeometry& geom, const Partition& part) {
    MeasureContext ctx;
    ctx.g = geom.g;
    ctx.N = geom.N;
    ctx.part = part;
    ctx.omega = build_omega_A(geom, part); // rejects non-short-cycle partitions
    ctx.p.assign(geom.N + 1, 0.0);
    ctx.q.assign(geom.N + 1, 0.0);
    ctx.a.assign(geom.N + 1, 0.0);
    ctx.b.assign(geom.N + 1, 0.0);
    ctx.c.assign(geom.N + 1, 0.0);
    for (int i = 1; i <= geom.N; ++i) {
        ctx.p[i] = geom.P[i].theta;
        ctx.q[i] = geom.Q[i].theta;
        ctx.a[i] = part.A[i].theta;
        ctx.b[i] = ctx.omega.strips[i].B.theta;
        ctx.c[i] = ctx.omega.strips[i].C.theta;
    }
    ctx.K = K_A_closed_form(ctx);
    return ctx;
}

double K_A_closed_form(const MeasureContext& ctx) {
    const auto at = [&](const std::vector<double>& v, int i) {
        int r = (i - 1) % ctx.N;
        if (r < 0) r += ctx.N;
        return v[r + 1];
    };
    double total = 0.0;
    for (int i = 1; i <= ctx.N; ++i) {
        const double f1 = abs_sin_half(ctx.c[i] - at(ctx.q, i + 2));
        const double f2 = abs_sin_half(ctx.b[i] - at(ctx.p, i - 1));
        const double f3 = abs_sin_half(ctx.b[i] - ctx.p[i]);
        const double f4 = abs_sin_half(ctx.c[i] - at(ctx.q, i + 1));
        for (double f : {f1, f2, f3, f4})
            if (f < 1e-15)
                throw singular_error("K_A_closed_form: degenerate configuration");
        total += std::log(f1) + std::log(f2) - std::log(f3) - std::log(f4);
    }
    return total;
}

double mu_density(const MeasureContext& ctx, double phi) {
    const double ph = normalize_angle(phi).theta;
    double total = 0.0;
    for (const RectPiece* p : ctx.omega.all_pieces()) {
        if (!fiber_contains(p->y, ph)) continue;
        const double da = p->x.start.theta - ph;
        const double db = p->x.end.theta - ph;
        if (abs_sin_half(da) < 1e-12 || abs_sin_half(db) < 1e-12)
            throw singular_error("mu_density: pole proximity");
        total += 0.5 * (1.0 / std::tan(0.5 * da) - 1.0 / std::tan(0.5 * db));
    }
    return total / ctx.K;
}

double mu_interval(const MeasureContext& ctx, const CircleArc& I) {
    double total = 0.0;
    for (const RectPiece* p : ctx.omega.all_pieces())
        for (const CircleArc& clip : arc_intersect(I, p->y))
            total += nu_rect(p->x.start.theta, p->x.end.theta,
                             clip.start.theta, clip.end.theta);
    return total / ctx.K;
}

double monte_carlo_K(const MeasureContext& ctx, std::uint64_t n_samples,
                     std::uint64_t seed, int threads) {
    constexpr int kGrid = 64; // strata per axis; fixed so results never depend on workers
    constexpr double kBand = 1e-3;
    const int n_strata = kGrid * kGrid;
    const double w = kTau / kGrid;
    const std::uint64_t base = n_samples / n_strata;
    const std::uint64_t extra = n_samples % n_strata;

    std::vector<double> partial(n_strata, 0.0);
    parallel_chunks(n_strata, threads, [&](int s) {
        const std::uint64_t count = base + (static_cast<std::uint64_t>(s) < extra ? 1 : 0);
        if (count == 0) return;
        SplitMix64 rng = derived_rng(seed, static_cast<std::uint64_t>(s));
        const double x0 = (s % kGrid) * w;
        const double y0 = (s / kGrid) * w;
        double sum = 0.0;
        for (std::uint64_t k = 0; k < count; ++k) {
            const double theta = x0 + rng.u01() * w;
            const double phi = y0 + rng.u01() * w;
            const CirclePoint xp = normalize_angle(theta);
            const CirclePoint yp = normalize_angle(phi);
            if (circ_dist(xp, yp) < kBand) continue; // outside the sampling region
            // strip lookup, then the strip's own pieces
            const int i = interval_index(ctx.part, yp);
            for (const RectPiece& piece : ctx.omega.strips[i].pieces) {
                if (arc_contains(piece.y, yp) && arc_contains(piece.x, xp)) {
                    sum += 1.0 / (2.0 - 2.0 * std::cos(theta - phi));
                    break;
                }
            }
        }
        partial[s] = sum * (w * w) / static_cast<double>(count);
    });
    double total = 0.0;
    for (double v : partial) total += v; // fixed stratum order
    return total;
}

double mu_invariance_max_error(const SurfaceGeometry& geom, const MeasureContext& ctx,
                               int n_arcs, std::uint64_t seed) {
    double worst = 0.0;
    for (int k = 0; k < n_arcs; ++k) {
        SplitMix64 rng = derived_rng(seed, static_cast<std::uint64_t>(k));
        const double lo = rng.u01() * kTau;
        const double len = 0.05 + rng.u01() * (kTau * 0.45);
        const CircleArc I = arc(lo, lo + len);
        const double direct = mu_interval(ctx, I);
        double pulled = 0.0;
        for (const CircleArc& piece : f_preimage_interval(geom, ctx.part, I))
            pulled += mu_interval(ctx, piece);
        worst = std::max(worst, std::fabs(direct - pulled));
    }
    return worst;
}

} // namespace bdlab
