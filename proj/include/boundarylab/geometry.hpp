#pragma once

#include <string>
#include <vector>

#include "boundarylab/mobius.hpp"

namespace bdlab {

/// Side-pairing combinatorics of the (8g-4)-gon. All tables are 1-based
/// with representatives in {1..N}; index 0 is unused.
struct SidePairing {
    int N = 0;
    std::vector<int> sigma, rho, theta;

    /// Representative of i in {1..N}.
    int wrap(int i) const {
        int r = (i - 1) % N;
        if (r < 0) r += N;
        return r + 1;
    }
};

SidePairing pairing_build(int g);

/// The regular right-angled (8g-4)-gon: boundary endpoints P_i, Q_i,
/// vertices V_i, generators T_i and the closed-form constants.
///
/// Conventions: side i lies on the isometric circle centered at the
/// Euclidean point d*e^{2ti i}; its endpoints on the unit circle are
/// P_i = 2ti - phi and Q_{i+1} = 2ti + phi; vertex V_i sits at radius v in
/// direction t(2i-1).
struct SurfaceGeometry {
    int g = 0;
    int N = 0;
    double t = 0.0;     // pi / N
    double phi = 0.0;   // arc half-aperture, sin(phi) = sqrt(2) sin(t)
    double d = 0.0;     // origin -> isometric-circle centers
    double r_euc = 0.0; // isometric-circle Euclidean radius
    double v = 0.0;     // origin -> vertices
    std::vector<CirclePoint> P, Q; // 1-based, size N+1
    std::vector<cplx> V;           // 1-based disk points
    std::vector<MobiusMap> T;      // 1-based generators
    SidePairing pairing;

    int wrap(int i) const { return pairing.wrap(i); }
    CirclePoint p(int i) const { return P[wrap(i)]; }
    CirclePoint q(int i) const { return Q[wrap(i)]; }
    cplx vert(int i) const { return V[wrap(i)]; }
    const MobiusMap& gen(int i) const { return T[wrap(i)]; }
    int sigma(int i) const { return pairing.sigma[wrap(i)]; }
    int rho(int i) const { return pairing.rho[wrap(i)]; }
    int theta(int i) const { return pairing.theta[wrap(i)]; }
};

SurfaceGeometry build_geometry(int g);

/// One named identity, its worst residual over all indices, and the budget
/// it was checked against.
struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

/// Residuals of T_sigma(i) T_i = Id, the four-term relation, and
/// T_i(V_i) = V_rho(i), for every i.
VerifyReport verify_group_relations(const SurfaceGeometry& geom, double tol);

/// Residuals of the six endpoint images of each generator.
VerifyReport verify_endpoint_mapping(const SurfaceGeometry& geom, double tol);

/// Quantities of the right-triangle computation behind the angle bound
/// omega(t) > pi/4.
struct AppendixAngles {
    double t, phi, alpha, beta, gamma, delta, omega, y, v;
};

AppendixAngles appendix_angles(int g);

/// The points a_j in (midpoint, Q_j) with T_j(a_j) = P_{rho(j)+1} and
/// b_j in (P_j, midpoint) with T_{j-1}(b_j) = Q_{theta(j-1)}, found by
/// bisection of the monotone restriction of the circle map to [P_j, Q_j].
struct CriticalPoints {
    std::vector<CirclePoint> a, b; // 1-based
};

CriticalPoints critical_points(const SurfaceGeometry& geom);

/// Arc-halving: images T_k[P_{k+2},Q_{k+2}] and T_k[P_{k-1},Q_{k-1}] are
/// shorter than half their target (P,Q)-arcs.
struct ContractionReport {
    double max_ratio = 0.0;
    bool pass = false;
};

ContractionReport verify_contraction(const SurfaceGeometry& geom);

} // namespace bdlab
