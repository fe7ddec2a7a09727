#include <doctest.h>

#include "boundarylab/cycles.hpp"
#include "boundarylab/rng.hpp"

using namespace bdlab;

TEST_CASE("midpoint partition has short cycles everywhere") {
    for (int g : {2, 3}) {
        const SurfaceGeometry geom = build_geometry(g);
        const Partition part = partition_midpoint(geom);
        for (int i = 1; i <= geom.N; ++i) {
            CHECK(is_short_cycle(geom, part, i));
            const CycleReport rep = cycle_detect(geom, part, i);
            CHECK(rep.closed);
            CHECK(rep.m == 1);
            CHECK(rep.k == 1);
            CHECK(rep.is_short);
        }
    }
}

TEST_CASE("sampled short-cycle partitions: determinism and m=k=1") {
    const SurfaceGeometry geom = build_geometry(2);
    for (std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
        const Partition p1 = sample_short_cycle_partition(geom, seed);
        const Partition p2 = sample_short_cycle_partition(geom, seed);
        for (int i = 1; i <= geom.N; ++i) {
            CHECK(p1.A[i].theta == p2.A[i].theta); // bit-identical
            CHECK(ccw_delta(geom.p(i), p1.A[i]) > 0.0);
            CHECK(ccw_delta(p1.A[i], geom.q(i)) > 0.0);
            CHECK(is_short_cycle(geom, p1, i));
            const CycleReport rep = cycle_detect(geom, p1, i);
            CHECK((rep.closed && rep.m == 1 && rep.k == 1));
        }
    }
}

TEST_CASE("short-cycle predicate matches the detector on random partitions") {
    for (int g : {2, 3}) {
        const SurfaceGeometry geom = build_geometry(g);
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Partition part = sample_general_partition(geom, seed);
            for (int i = 1; i <= geom.N; ++i) {
                const CycleReport rep = cycle_detect(geom, part, i);
                REQUIRE(rep.closed);
                CHECK(is_short_cycle(geom, part, i) == (rep.m == 1 && rep.k == 1));
            }
        }
    }
}

TEST_CASE("cycle ends replay under f_apply_side") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = sample_general_partition(geom, 17);
    for (int i = 1; i <= geom.N; ++i) {
        const CycleReport rep = cycle_detect(geom, part, i);
        REQUIRE(rep.closed);
        CirclePoint u = geom.gen(i).apply(part.a(i));
        for (int s = 0; s < rep.m; ++s) u = f_apply_side(geom, u, rep.upper.sides[s]);
        CirclePoint l = geom.gen(i - 1).apply(part.a(i));
        for (int s = 0; s < rep.k; ++s) l = f_apply_side(geom, l, rep.lower.sides[s]);
        CHECK(circ_dist(u, rep.end) < 1e-9);
        CHECK(circ_dist(l, rep.end) < 1e-9);
        CHECK(circ_dist(u, l) < 1e-9);
    }
}

TEST_CASE("mutual exclusion of the two long branches") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = sample_general_partition(geom, 3);
    SplitMix64 rng(99);
    for (int trial = 0; trial < 10000; ++trial) {
        const int i = 1 + static_cast<int>(rng.u01() * geom.N);
        const double w = ccw_delta(geom.p(i), geom.q(i));
        const CirclePoint x = normalize_angle(geom.p(i).theta + (1e-9 + rng.u01() * (w - 2e-9)));
        const CirclePoint up = geom.gen(i).apply(x);
        const CirclePoint low = geom.gen(i - 1).apply(x);
        const int r = geom.rho(i), th = geom.theta(i - 1);
        const bool upper_long =
            ccw_delta(part.a(r + 1), up) < ccw_delta(part.a(r + 1), geom.q(r + 1));
        const bool lower_long =
            ccw_delta(geom.p(th), low) > 0.0 &&
            ccw_delta(geom.p(th), low) <= ccw_delta(geom.p(th), part.a(th));
        CHECK_FALSE((upper_long && lower_long));
    }
}

TEST_CASE("monotone push along the lower branch") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = sample_general_partition(geom, 5);
    SplitMix64 rng(100);
    int checked = 0;
    for (int trial = 0; trial < 200000 && checked < 500; ++trial) {
        const int j = 1 + static_cast<int>(rng.u01() * geom.N);
        // x in [A_j, Q_j)
        const double w = ccw_delta(part.a(j), geom.q(j));
        const CirclePoint x = normalize_angle(part.a(j).theta + rng.u01() * w);
        const int th = geom.theta(j - 1);
        const CirclePoint tx = geom.gen(j - 1).apply(x);
        const bool hyp = ccw_delta(geom.p(th), tx) > 0.0 &&
                         ccw_delta(geom.p(th), tx) <= ccw_delta(geom.p(th), part.a(th));
        if (!hyp) continue;
        ++checked;
        const CirclePoint img = geom.gen(th - 1).apply(tx);
        CHECK(ccw_delta(x, img) > 0.0);
        CHECK(ccw_delta(img, geom.p(j + 1)) > 0.0);
    }
    CHECK(checked > 0);
}

TEST_CASE("key two-step identity as Mobius maps") {
    for (int g = 2; g <= 10; ++g) {
        const SurfaceGeometry geom = build_geometry(g);
        const VerifyReport rep = verify_key_identity(geom, 1e-10);
        CHECK(rep.pass());
    }
}

TEST_CASE("psi iteration is the affine shift i + n(4g-4)") {
    for (int g = 2; g <= 10; ++g) {
        const SidePairing sp = pairing_build(g);
        for (int i = 1; i <= sp.N; ++i)
            for (int n = 0; n <= 20; ++n)
                CHECK(psi_iterate(sp, i, n) == sp.wrap(i + n * (4 * g - 4)));
    }
}

TEST_CASE("long-branch cycle follows the psi pattern until closure") {
    const SurfaceGeometry geom = build_geometry(2);
    // push A_1 near Q_1 so that T_1 A_1 crosses A_{rho(1)+1}; keep others midpoint
    std::vector<CirclePoint> ang(geom.N);
    for (int i = 1; i <= geom.N; ++i) {
        const double w = ccw_delta(geom.p(i), geom.q(i));
        const double frac = (i == 1) ? 0.999 : 0.5;
        ang[i - 1] = normalize_angle(geom.p(i).theta + frac * w);
    }
    const Partition part = partition_explicit(geom, ang);
    const CycleReport rep = cycle_detect(geom, part, 1);
    REQUIRE(rep.closed);
    CHECK(rep.m == rep.k);
    CHECK(rep.m > 1);
    const CycleStructureReport st = validate_cycle_structure(geom, part, rep);
    CHECK(st.applicable);
    CHECK(st.sides_ok);
    CHECK(st.containment_ok);
    CHECK(st.closure_consistent);
    CHECK(st.exit != CycleExit::not_applicable);
    CHECK(st.terminating_step == rep.m);

    // short-cycle reports are vacuously outside the long-branch machinery
    const Partition mid = partition_midpoint(geom);
    const CycleReport srep = cycle_detect(geom, mid, 1);
    const CycleStructureReport sst = validate_cycle_structure(geom, mid, srep);
    CHECK_FALSE(sst.applicable);
}

TEST_CASE("bowen-series orbits of the jump points are periodic") {
    for (int g : {2, 3}) {
        const SurfaceGeometry geom = build_geometry(g);
        const Partition part = partition_bowen_series(geom);
        for (int i = 1; i <= geom.N; ++i) {
            const PeriodicOrbitReport rep = periodic_orbit_report(geom, part, i);
            REQUIRE(rep.upper_period > 0);
            REQUIRE(rep.lower_period > 0);
            CHECK(rep.upper_period <= 2);
            CHECK(rep.lower_period <= 2);
            // lower orbit values are P-points; fixed exactly on {1,2g,4g-1,6g-2}
            const bool fixed = rep.lower_period == 1 && rep.lower_preperiod == 0;
            const bool in_set = i == 1 || i == 2 * g || i == 4 * g - 1 || i == 6 * g - 2;
            CHECK(fixed == in_set);
        }
    }
}

TEST_CASE("cycle detection on a perturbed-seed family stays finite") {
    const SurfaceGeometry geom = build_geometry(3);
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const Partition part = sample_general_partition(geom, seed);
        for (int i = 1; i <= geom.N; ++i) {
            const CycleReport rep = cycle_detect(geom, part, i, 500, 1e-9);
            CHECK(rep.closed);
            CHECK(rep.m + rep.k < 500);
        }
    }
}
