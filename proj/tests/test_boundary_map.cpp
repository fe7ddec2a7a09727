#include <doctest.h>

#include "boundarylab/boundary_map.hpp"
#include "boundarylab/cycles.hpp"
#include "boundarylab/measures.hpp"
#include "boundarylab/rng.hpp"

using namespace bdlab;

TEST_CASE("interval lookup is closed-open") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    CHECK(interval_index(part, part.A[3]) == 3);
    CHECK(interval_index(part, normalize_angle(part.A[3].theta - 1e-12)) == 2);
    // wrap: below A_1 belongs to branch N
    CHECK(interval_index(part, normalize_angle(part.A[1].theta - 1e-6)) == geom.N);

    const Partition bs = partition_bowen_series(geom);
    CHECK(interval_index(bs, geom.Q[1]) == 1); // P_1 <= Q_1 < P_2
}

TEST_CASE("partition modes and window validation") {
    const SurfaceGeometry geom = build_geometry(2);
    CHECK(partition_bowen_series(geom).mode == PartitionMode::bowen_series);
    CHECK(partition_dual(geom).A[5].theta == geom.Q[5].theta);
    // explicit angles must sit strictly inside the windows
    std::vector<CirclePoint> bad(geom.N);
    for (int i = 0; i < geom.N; ++i) bad[i] = geom.P[i + 1];
    CHECK_THROWS_AS(partition_explicit(geom, bad), domain_error);
}

TEST_CASE("fixed point relations of P and Q points") {
    for (int g : {2, 3, 5}) {
        const SurfaceGeometry geom = build_geometry(g);
        CHECK(verify_fixed_point_lemma(geom, partition_bowen_series(geom), 1e-9).pass());
        CHECK(verify_fixed_point_lemma(geom, partition_midpoint(geom), 1e-9).pass());
    }
}

TEST_CASE("f_apply_side agrees with f_apply off the jump set") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    SplitMix64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const CirclePoint x = normalize_angle(rng.u01() * kTau);
        const auto [fx, i] = f_apply(geom, part, x);
        CHECK(circ_dist(f_apply_side(geom, x, i), fx) == 0.0);
    }
}

TEST_CASE("orbit trace invariant") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    SplitMix64 rng(4);
    const OrbitTrace tr = orbit(geom, part, normalize_angle(rng.u01() * kTau), 100);
    REQUIRE(tr.points.size() == 101);
    REQUIRE(tr.sides.size() == 100);
    for (int k = 0; k < 100; ++k)
        CHECK(circ_dist(geom.gen(tr.sides[k]).apply(tr.points[k]), tr.points[k + 1]) < 1e-10);
    CHECK(orbit(geom, part, normalize_angle(0.5), 0).points.size() == 1);
}

TEST_CASE("branch expansion on the partition intervals") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    for (int i = 1; i <= geom.N; ++i) {
        const double len = ccw_delta(part.a(i), part.a(i + 1));
        for (int s = 0; s < 100; ++s) {
            const CirclePoint x = normalize_angle(part.a(i).theta + len * (s + 0.5) / 100.0);
            CHECK(geom.gen(i).boundary_derivative(x) > 1.0);
        }
    }
}

TEST_CASE("F_apply rejects the diagonal and preserves distinctness") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    const CirclePoint x = normalize_angle(1.0);
    CHECK_THROWS_AS(F_apply(geom, part, x, normalize_angle(1.0 + 1e-13)), singular_error);

    CirclePoint a = normalize_angle(1.0), b = normalize_angle(2.0);
    for (int k = 0; k < 200; ++k) {
        auto [img, side] = F_apply(geom, part, a, b);
        (void)side;
        a = img.first;
        b = img.second;
        CHECK(circ_dist(a, b) > 1e-12);
    }
}

TEST_CASE("preimage arcs map forward onto the interval") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);

    const CircleArc I{part.A[1], part.A[2], EdgePolicy::closed_open};
    const auto pre = f_preimage_interval(geom, part, I);
    CHECK(pre.size() >= static_cast<std::size_t>(1));

    // forward-map oracle on 1000 sample points per arc (endpoints can
    // round a hair outside the half-open edge, hence the 1e-12 pad), and
    // exact accounting: the union of the f-images of the preimage arcs is I
    const CircleArc padded = arc(I.start.theta - 1e-12, I.end.theta + 1e-12);
    std::vector<std::pair<double, double>> images; // (offset from I.start, length)
    for (const CircleArc& piece : pre) {
        const int branch = interval_index(part, piece.start);
        const double plen = arc_length(piece);
        for (int s = 0; s < 1000; ++s) {
            const CirclePoint x = normalize_angle(piece.start.theta + plen * s / 1000.0);
            CHECK(arc_contains(padded, f_apply(geom, part, x).first));
        }
        const CirclePoint is = geom.gen(branch).apply(piece.start);
        const CirclePoint ie = geom.gen(branch).apply(piece.end);
        double off = ccw_delta(I.start, is);
        if (off > kTau - 1e-9) off = 0.0; // image start rounded just below I.start
        images.emplace_back(off, ccw_delta(is, ie));
    }
    std::sort(images.begin(), images.end());
    double reach = 0.0;
    for (const auto& [off, len] : images) {
        CHECK(off <= reach + 1e-9); // no gap
        reach = std::max(reach, off + len);
    }
    CHECK(reach == doctest::Approx(arc_length(I)).epsilon(1e-9));

    // full circle pulls back to the full circle
    const auto full = f_preimage_interval(
        geom, part, CircleArc{CirclePoint{0.0}, CirclePoint{0.0}, EdgePolicy::closed_closed});
    double total = 0.0;
    for (const CircleArc& piece : full) total += arc_length(piece);
    CHECK(total == doctest::Approx(kTau).epsilon(1e-12));
}

TEST_CASE("F preserves nu on one-branch rectangles") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    SplitMix64 rng(5);
    int done = 0;
    while (done < 100) {
        const int i = 1 + static_cast<int>(rng.u01() * geom.N);
        const double ylen = ccw_delta(part.a(i), part.a(i + 1));
        const double c = part.a(i).theta + rng.u01() * ylen * 0.5;
        const double d = c + 1e-4 + rng.u01() * ylen * 0.4;
        const double a = d + 0.3 + rng.u01() * 1.0;
        const double b = a + 0.05 + rng.u01() * 0.5;
        // keep the rectangle away from the diagonal
        if (ccw_delta(normalize_angle(b), normalize_angle(c)) < 0.05) continue;
        const double nu0 = nu_rect(a, b, c, d);
        const MobiusMap& t = geom.gen(i);
        const double nu1 = nu_rect(t.apply(normalize_angle(a)).theta,
                                   t.apply(normalize_angle(b)).theta,
                                   t.apply(normalize_angle(c)).theta,
                                   t.apply(normalize_angle(d)).theta);
        CHECK(std::fabs(nu0 - nu1) < 1e-10);
        ++done;
    }
}
