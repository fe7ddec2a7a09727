#include <cstdio>

#include "boundarylab/domains.hpp"
#include "boundarylab/experiments.hpp"

using namespace bdlab;

int main() {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    const RectangularDomain omega = build_omega_A(geom, part);

    CirclePoint x = arc_midpoint(CircleArc{geom.p(0), geom.p(1), EdgePolicy::closed_closed});
    CirclePoint y = geom.q(1);
    std::printf("P12=%.6f P1=%.6f x0=%.6f Q1=%.6f\n", geom.p(0).theta, geom.p(1).theta,
                x.theta, y.theta);
    for (int s = 0; s < 8; ++s) {
        const bool in_om = domain_contains(omega, x, y);
        const double exc = exceptional_set_distance(geom, x, y);
        std::printf("s=%d x=%.15f y=%.15f in_omega=%d exc_dist=%.3e\n", s, x.theta, y.theta,
                    int(in_om), exc);
        auto [img, side] = F_apply(geom, part, x, y);
        (void)side;
        x = img.first;
        y = img.second;
    }
    return 0;
}
