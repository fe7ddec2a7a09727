#include "boundarylab/domains.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boundarylab/measures.hpp"

namespace bdlab {

namespace {

RectPiece rect(CirclePoint x0, CirclePoint x1, CirclePoint y0, CirclePoint y1,
               PieceType type) {
    return RectPiece{CircleArc{x0, x1, EdgePolicy::closed_closed},
                     CircleArc{y0, y1, EdgePolicy::closed_closed}, type};
}

bool in_closed_arc(const CircleArc& a, CirclePoint p, double tol) {
    if (tol == 0.0) return arc_contains(a, p);
    const double len = arc_length(a);
    const double off = ccw_delta(a.start, p);
    return off <= len + tol || off >= kTau - tol;
}

// B_i and C_i of the strip over [A_i, A_{i+1}].
CirclePoint corner_B(const SurfaceGeometry& geom, const Partition& part, int i) {
    const int j = geom.sigma(i - 1);
    return geom.gen(j).apply(part.a(j));
}

CirclePoint corner_C(const SurfaceGeometry& geom, const Partition& part, int i) {
    const int j = geom.sigma(i + 1);
    return geom.gen(j).apply(part.a(j + 1));
}

} // namespace

std::vector<const RectPiece*> RectangularDomain::all_pieces() const {
    std::vector<const RectPiece*> out;
    for (const auto& s : strips)
        for (const auto& p : s.pieces) out.push_back(&p);
    return out;
}

RectangularDomain build_omega_P(const SurfaceGeometry& geom) {
    RectangularDomain dom;
    dom.kind = DomainKind::omega_P;
    dom.g = geom.g;
    dom.N = geom.N;
    dom.strips.assign(geom.N + 1, StripSpec{});
    for (int i = 1; i <= geom.N; ++i) {
        StripSpec& s = dom.strips[i];
        s.i = i;
        s.y_span = CircleArc{geom.p(i), geom.p(i + 1), EdgePolicy::closed_closed};
        s.pieces.push_back(rect(geom.q(i + 2), geom.p(i - 1), geom.p(i), geom.q(i),
                                PieceType::wide));
        s.pieces.push_back(rect(geom.q(i + 2), geom.p(i), geom.q(i), geom.p(i + 1),
                                PieceType::lower_corner));
    }
    return dom;
}

RectangularDomain build_omega_A(const SurfaceGeometry& geom, const Partition& part) {
    validate_partition(geom, part);
    for (int i = 1; i <= geom.N; ++i)
        if (!is_short_cycle(geom, part, i))
            throw precondition_error("build_omega_A: partition not short-cycle at index " +
                                     std::to_string(i));
    RectangularDomain dom;
    dom.kind = DomainKind::omega_A;
    dom.g = geom.g;
    dom.N = geom.N;
    dom.strips.assign(geom.N + 1, StripSpec{});
    for (int i = 1; i <= geom.N; ++i) {
        StripSpec& s = dom.strips[i];
        s.i = i;
        s.has_corners = true;
        s.B = corner_B(geom, part, i);
        s.C = corner_C(geom, part, i);
        // location invariants from the short cycle property
        if (!(ccw_delta(geom.q(i), s.B) >= 0.0 &&
              ccw_delta(geom.q(i), s.B) < ccw_delta(geom.q(i), part.a(i + 1))))
            throw construction_error("build_omega_A: B_i outside [Q_i, A_{i+1})");
        if (!(ccw_delta(part.a(i), s.C) >= 0.0 &&
              ccw_delta(part.a(i), s.C) < ccw_delta(part.a(i), geom.p(i + 1))))
            throw construction_error("build_omega_A: C_i outside [A_i, P_{i+1})");
        s.y_span = CircleArc{part.a(i), part.a(i + 1), EdgePolicy::closed_closed};
        s.pieces.push_back(rect(geom.q(i + 2), geom.p(i - 1), part.a(i), part.a(i + 1),
                                PieceType::wide));
        s.pieces.push_back(rect(geom.q(i + 1), geom.q(i + 2), part.a(i), s.C,
                                PieceType::lower_corner));
        s.pieces.push_back(rect(geom.p(i - 1), geom.p(i), s.B, part.a(i + 1),
                                PieceType::upper_corner));
    }
    return dom;
}

RectangularDomain build_D(const SurfaceGeometry& geom, const Partition& part) {
    RectangularDomain dom;
    dom.kind = DomainKind::D_only;
    dom.g = geom.g;
    dom.N = geom.N;
    dom.strips.assign(geom.N + 1, StripSpec{});
    for (int i = 1; i <= geom.N; ++i) {
        StripSpec& s = dom.strips[i];
        s.i = i;
        s.B = corner_B(geom, part, i);
        s.y_span = CircleArc{geom.q(i), s.B, EdgePolicy::closed_closed};
        s.pieces.push_back(rect(geom.p(i - 1), geom.p(i), geom.q(i), s.B,
                                PieceType::d_rect));
    }
    return dom;
}

RectangularDomain build_psi(const SurfaceGeometry& geom, const Partition& part) {
    RectangularDomain dom = build_omega_A(geom, part);
    dom.kind = DomainKind::psi_A;
    const RectangularDomain d = build_D(geom, part);
    for (int i = 1; i <= geom.N; ++i)
        dom.strips[i].pieces.push_back(d.strips[i].pieces[0]);
    return dom;
}

bool domain_contains(const RectangularDomain& dom, CirclePoint x, CirclePoint y,
                     double tol) {
    for (int i = 1; i <= dom.N; ++i)
        for (const RectPiece& p : dom.strips[i].pieces)
            if (in_closed_arc(p.y, y, tol) && in_closed_arc(p.x, x, tol)) return true;
    return false;
}

std::vector<CircleArc> column_span(const RectangularDomain& dom,
                                   CirclePoint x_lo, CirclePoint x_hi) {
    // collect y-arcs of pieces whose x-arc covers the whole column
    std::vector<std::pair<double, double>> segs; // (start, length)
    for (const RectPiece* p : dom.all_pieces()) {
        const double len = arc_length(p->x);
        const double off_lo = ccw_delta(p->x.start, x_lo);
        const double off_hi = ccw_delta(p->x.start, x_hi);
        if (off_lo <= len && off_hi <= len && off_lo <= off_hi)
            segs.emplace_back(p->y.start.theta, arc_length(p->y));
    }
    if (segs.empty()) return {};
    // merge linearly, then join across the 2*pi wrap if needed
    std::sort(segs.begin(), segs.end());
    std::vector<std::pair<double, double>> merged;
    for (auto [s, l] : segs) {
        if (!merged.empty() && s <= merged.back().first + merged.back().second + 1e-12) {
            double& mlen = merged.back().second;
            mlen = std::max(mlen, s + l - merged.back().first);
        } else {
            merged.emplace_back(s, l);
        }
    }
    if (merged.size() > 1) {
        auto& back = merged.back();
        const auto& front = merged.front();
        if (back.first + back.second >= front.first + kTau - 1e-12) {
            back.second = std::max(back.second,
                                   front.first + kTau + front.second - back.first);
            merged.erase(merged.begin());
        }
    }
    std::vector<CircleArc> out;
    for (const auto& [s, l] : merged) {
        if (l >= kTau - 1e-12)
            return {CircleArc{normalize_angle(s), normalize_angle(s), EdgePolicy::closed_closed}};
        out.push_back(CircleArc{normalize_angle(s), normalize_angle(s + l),
                                EdgePolicy::closed_closed});
    }
    return out;
}

namespace {

struct ImageRect {
    CircleArc x, y;
};

ImageRect map_rect(const MobiusMap& m, const RectPiece& p) {
    // a single Mobius map acts on both axes monotonically, so rectangles map
    // to rectangles and corner mapping is exact
    return ImageRect{CircleArc{m.apply(p.x.start), m.apply(p.x.end), EdgePolicy::closed_closed},
                     CircleArc{m.apply(p.y.start), m.apply(p.y.end), EdgePolicy::closed_closed}};
}

double nu_image(const ImageRect& r) {
    return nu_rect(r.x.start.theta, r.x.end.theta, r.y.start.theta, r.y.end.theta);
}

double nu_overlap(const ImageRect& a, const ImageRect& b) {
    double total = 0.0;
    for (const CircleArc& xi : arc_intersect(a.x, b.x))
        for (const CircleArc& yi : arc_intersect(a.y, b.y))
            total += nu_rect(xi.start.theta, xi.end.theta, yi.start.theta, yi.end.theta);
    return total;
}

// residual of "arcs == single arc [lo, hi]"
double span_residual(const std::vector<CircleArc>& arcs, CirclePoint lo, CirclePoint hi) {
    if (arcs.size() != 1) return kTau;
    return circ_dist(arcs[0].start, lo) + circ_dist(arcs[0].end, hi);
}

} // namespace

BijectivityReport verify_bijectivity(const SurfaceGeometry& geom,
                                     const Partition& part, double tol) {
    const RectangularDomain dom = build_omega_A(geom, part);
    BijectivityReport rep;
    const int N = geom.N;

    std::vector<ImageRect> images;
    images.reserve(3 * N);

    for (int i = 1; i <= N; ++i) {
        const StripSpec& s = dom.strips[i];
        const MobiusMap& Ti = geom.gen(i);
        const int si = geom.sigma(i);
        const ImageRect wide = map_rect(Ti, s.pieces[0]);
        const ImageRect lowc = map_rect(Ti, s.pieces[1]);
        const ImageRect upc = map_rect(Ti, s.pieces[2]);
        images.push_back(wide);
        images.push_back(lowc);
        images.push_back(upc);

        const CirclePoint B_s1 = dom.strips[geom.wrap(si + 1)].B;
        const CirclePoint C_sm1 = dom.strips[geom.wrap(si - 1)].C;
        // T_i(S~_i) = [Q_sigma, P_sigma+1] x [B_sigma+1, C_sigma-1]
        double r = circ_dist(wide.x.start, geom.q(si)) + circ_dist(wide.x.end, geom.p(si + 1)) +
                   circ_dist(wide.y.start, B_s1) + circ_dist(wide.y.end, C_sm1);
        rep.max_corner_residual = std::max(rep.max_corner_residual, r);
        // T_i(S_i^l) = [P_sigma, Q_sigma] x [B_sigma+1, T_i C_i]
        r = circ_dist(lowc.x.start, geom.p(si)) + circ_dist(lowc.x.end, geom.q(si)) +
            circ_dist(lowc.y.start, B_s1) + circ_dist(lowc.y.end, Ti.apply(s.C));
        rep.max_corner_residual = std::max(rep.max_corner_residual, r);
        // T_i(S_i^u) = [P_sigma+1, Q_sigma+1] x [T_i B_i, C_sigma-1]
        r = circ_dist(upc.x.start, geom.p(si + 1)) + circ_dist(upc.x.end, geom.q(si + 1)) +
            circ_dist(upc.y.start, Ti.apply(s.B)) + circ_dist(upc.y.end, C_sm1);
        rep.max_corner_residual = std::max(rep.max_corner_residual, r);

        // seam T_i B_i = T_j C_j with j = sigma(sigma(i-1)-1)-1
        const int j = geom.wrap(geom.sigma(geom.sigma(i - 1) - 1) - 1);
        const CirclePoint seam_u = Ti.apply(s.B);
        const CirclePoint seam_l = geom.gen(j).apply(dom.strips[j].C);
        rep.max_seam_residual = std::max(rep.max_seam_residual, circ_dist(seam_u, seam_l));

        // column tilings:
        // gap column [Q_sigma, P_sigma+1] is exactly T_i(S~_i)'s y-extent
        auto col = column_span(dom, geom.q(si), geom.p(si + 1));
        rep.max_column_residual = std::max(rep.max_column_residual,
            span_residual(col, wide.y.start, wide.y.end));
        // window column [P_{sigma+1}, Q_{sigma+1}] = T_i(S_i^u) then T_j(S_j^l)
        col = column_span(dom, geom.p(si + 1), geom.q(si + 1));
        const ImageRect img_jl = map_rect(geom.gen(j), dom.strips[j].pieces[1]);
        rep.max_column_residual = std::max(rep.max_column_residual,
            span_residual(col, img_jl.y.start, upc.y.end));
        // window column [P_sigma, Q_sigma] = T_i(S_i^l) then T_k(S_k^u), k = sigma(sigma(i)-1)
        const int kdx = geom.wrap(geom.sigma(geom.sigma(i) - 1));
        col = column_span(dom, geom.p(si), geom.q(si));
        const ImageRect img_ku = map_rect(geom.gen(kdx), dom.strips[kdx].pieces[2]);
        rep.max_column_residual = std::max(rep.max_column_residual,
            span_residual(col, lowc.y.start, img_ku.y.end));
        rep.max_seam_residual = std::max(rep.max_seam_residual,
            circ_dist(lowc.y.end, img_ku.y.start));
    }

    rep.nu_domain = nu_domain(dom);
    for (const ImageRect& r : images) rep.nu_images += nu_image(r);
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            rep.max_pair_overlap = std::max(rep.max_pair_overlap,
                                            nu_overlap(images[a], images[b]));

    rep.pass = rep.max_corner_residual < tol && rep.max_seam_residual < tol &&
               rep.max_column_residual < tol &&
               std::fabs(rep.nu_images - rep.nu_domain) < tol &&
               rep.max_pair_overlap < tol;
    return rep;
}

} // namespace bdlab
