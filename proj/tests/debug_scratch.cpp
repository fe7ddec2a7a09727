#include <cstdio>

#include "boundarylab/cycles.hpp"
#include "boundarylab/measures.hpp"

using namespace bdlab;

int main() {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    const int i = 1;
    const CirclePoint u0 = geom.gen(i).apply(part.a(i));
    const CirclePoint l0 = geom.gen(i - 1).apply(part.a(i));
    std::printf("u0=%.15f l0=%.15f\n", u0.theta, l0.theta);
    const auto [u1, us] = f_step_convention(geom, part, u0, true, nullptr);
    const auto [l1, ls] = f_step_convention(geom, part, l0, false, nullptr);
    std::printf("u1=%.15f (side %d) l1=%.15f (side %d) dist=%.3e\n", u1.theta, us,
                l1.theta, ls, circ_dist(u1, l1));
    std::printf("is_short=%d\n", int(is_short_cycle(geom, part, i)));
    const CycleReport rep = cycle_detect(geom, part, i);
    std::printf("closed=%d m=%d k=%d\n", int(rep.closed), rep.m, rep.k);

    // preimage debug
    const CircleArc I{part.A[1], part.A[2], EdgePolicy::closed_open};
    std::printf("I=[%.6f, %.6f) len %.6f\n", I.start.theta, I.end.theta, arc_length(I));
    const auto pre = f_preimage_interval(geom, part, I);
    double covered = 0.0;
    for (const auto& piece : pre) {
        const int branch = interval_index(part, piece.start);
        const CirclePoint fs = geom.gen(branch).apply(piece.start);
        const CirclePoint fe = geom.gen(branch).apply(piece.end);
        const double img = ccw_delta(fs, fe);
        std::printf("piece [%.6f, %.6f) len %.6f branch %d image [%.6f, %.6f) len %.6f  in_I(start)=%d in_I(end-)=%d\n",
                    piece.start.theta, piece.end.theta, arc_length(piece), branch,
                    fs.theta, fe.theta, img, int(arc_contains(I, fs)),
                    int(arc_contains(I, normalize_angle(fe.theta - 1e-9))));
        covered += img;
    }
    std::printf("covered=%.9f expected=%.9f npieces=%zu\n", covered, arc_length(I), pre.size());
    return 0;
}
