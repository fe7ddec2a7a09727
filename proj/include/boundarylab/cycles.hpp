#pragma once

#include <cstdint>

#include "boundarylab/boundary_map.hpp"

namespace bdlab {

/// Upper/lower orbit traces of one discontinuity point A_i with the first
/// closure found, in lexicographic (m+k, m) order.
struct CycleReport {
    int i = 0;
    OrbitTrace upper; // points[0] = T_i A_i
    OrbitTrace lower; // points[0] = T_{i-1} A_i
    int m = -1;
    int k = -1;
    CirclePoint end;            // c_{A_i}, valid iff closed
    bool is_short = false;      // m == k == 1
    bool closed = false;
    int discontinuity_hits = 0; // orbit points that landed on some A_j (logged)
};

/// One f-step with the discontinuity convention: a point landing on some
/// A_j (within hit_tol) continues with side j on an upper orbit and side
/// j-1 on a lower orbit. Off the jump set this is plain f_apply.
std::pair<CirclePoint, int> f_step_convention(const SurfaceGeometry& geom,
                                              const Partition& part,
                                              CirclePoint x, bool upper,
                                              int* hits = nullptr,
                                              double hit_tol = 1e-12);

/// Track both orbits of A_i up to max_iter steps each, with the
/// upper/lower convention at discontinuity hits, and return the first
/// closure at matching tolerance tol. A match must also stay coincident for
/// three further steps (rejects accidental near-collisions). If no closure
/// is found the report carries closed = false.
CycleReport cycle_detect(const SurfaceGeometry& geom, const Partition& part,
                         int i, int max_iter = 500, double tol = 1e-9);

/// Direct evaluation of the two open-arc membership predicates
/// T_i A_i in (Q_rho(i), A_{rho(i)+1}) and
/// T_{i-1} A_i in (A_theta(i-1), P_{theta(i-1)+1}).
bool is_short_cycle(const SurfaceGeometry& geom, const Partition& part, int i);

bool is_short_cycle_all(const SurfaceGeometry& geom, const Partition& part);

/// A_i uniform in (b_i + margin, a_i - margin), per-index derived RNG
/// streams, deterministic in seed.
Partition sample_short_cycle_partition(const SurfaceGeometry& geom, std::uint64_t seed);

/// A_i uniform in (P_i + margin, Q_i - margin).
Partition sample_general_partition(const SurfaceGeometry& geom, std::uint64_t seed);

/// How a long-branch orbit pair left the psi_n pattern.
enum class CycleExit { not_applicable, upper_exit, lower_exit, pattern_exhausted };

/// Checks a closed report from the long-cycle branch
/// (T_i A_i in [A_{rho(i)+1}, Q_{rho(i)+1}) initially) against the orbit
/// pattern: even upper iterates in [A_{rho(psi_n)+1}, Q_{rho(psi_n)+1}),
/// recorded side indices matching the psi_n recursion, and the closure step
/// consistent with where the pattern breaks.
struct CycleStructureReport {
    bool applicable = false;
    int stages_verified = 0;   // number of n with the full hypothesis chain
    bool sides_ok = false;
    bool containment_ok = false;
    bool closure_consistent = false;
    CycleExit exit = CycleExit::not_applicable;
    int terminating_step = -1;
    int terminating_psi = 0;   // psi_n(i) at the terminating stage
    bool in_congruence_class = false; // terminating psi in {2, 2g+1, 4g, 6g-1}
};

CycleStructureReport validate_cycle_structure(const SurfaceGeometry& geom,
                                              const Partition& part,
                                              const CycleReport& report);

/// psi_n(i) = (theta o rho)^n (i); equals i + n(4g-4) mod (8g-4).
int psi_iterate(const SidePairing& pairing, int i, int n);

/// In the Bowen-Series partition the upper and lower orbits of every P_i
/// are eventually periodic with period at most 2.
struct PeriodicOrbitReport {
    int i = 0;
    OrbitTrace upper, lower;
    int upper_preperiod = -1, upper_period = -1;
    int lower_preperiod = -1, lower_period = -1;
};

PeriodicOrbitReport periodic_orbit_report(const SurfaceGeometry& geom,
                                          const Partition& part, int i,
                                          int max_iter = 64, double tol = 1e-9);

/// f^2(P_i) = P_i and f^2(Q_i) = Q_i, with f(P_i) = P_i exactly on
/// {1, 2g, 4g-1, 6g-2} and f(Q_i) = Q_i exactly on {2, 2g+1, 4g, 6g-1}.
/// P-orbits follow the lower-orbit convention (P_i is a jump point in
/// bowen_series mode), Q-orbits the upper one.
VerifyReport verify_fixed_point_lemma(const SurfaceGeometry& geom,
                                      const Partition& part, double tol);

/// T_{sigma(i)+1} T_i = T_{sigma(i-1)-1} T_{i-1} as Mobius maps, all i.
VerifyReport verify_key_identity(const SurfaceGeometry& geom, double tol);

} // namespace bdlab
