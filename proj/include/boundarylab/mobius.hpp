#pragma once

#include <array>
#include <complex>

#include "boundarylab/angles.hpp"

namespace bdlab {

using cplx = std::complex<double>;

/// Disk-preserving Mobius transformation in SU(1,1) normal form,
///   z -> (alpha z + beta) / (conj(beta) z + conj(alpha)),
/// with |alpha|^2 - |beta|^2 = 1. The normal form makes preservation of the
/// unit circle structural; (alpha, beta) and (-alpha, -beta) are the same map.
class MobiusMap {
  public:
    MobiusMap() : alpha_(1.0, 0.0), beta_(0.0, 0.0) {}
    MobiusMap(cplx alpha, cplx beta);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    static MobiusMap identity() { return MobiusMap(); }
    static MobiusMap rotation(double psi);

    /// Adopts already-normalized components verbatim (no rescaling), so that
    /// deserialized maps round-trip bit-exactly. Still rejects non-disk-
    /// preserving input.
    static MobiusMap from_components(cplx alpha, cplx beta);

    /// The unique Mobius map with x[k] -> y[k]. Both triples must be pairwise
    /// distinct and equally oriented on the circle.
    static MobiusMap from_three_points(const std::array<CirclePoint, 3>& x,
                                       const std::array<CirclePoint, 3>& y);

    /// Action on the boundary circle.
    CirclePoint apply(CirclePoint p) const;

    /// Action on a point of the open disk (used for vertices).
    cplx apply_disk(cplx z) const;

    /// |derivative| of the induced circle map at p:
    /// 1 / |conj(beta) e^{i theta} + conj(alpha)|^2.
    double boundary_derivative(CirclePoint p) const;

    MobiusMap inverse() const { return MobiusMap(std::conj(alpha_), -beta_); }

  private:
    cplx alpha_, beta_;
};

/// Composition m1 o m2 (m2 applied first), renormalized.
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

/// Distance between maps as projective SU(1,1) elements (sign-insensitive).
double mobius_distance(const MobiusMap& m1, const MobiusMap& m2);

inline bool mobius_tol_equal(const MobiusMap& m1, const MobiusMap& m2,
                             double tol = kTolEqual) {
    return mobius_distance(m1, m2) <= tol;
}

} // namespace bdlab
