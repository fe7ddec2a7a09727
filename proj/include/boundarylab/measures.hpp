#pragma once

#include <cstdint>

#include "boundarylab/domains.hpp"

namespace bdlab {

/// nu-mass of the rectangle [a,b] x [c,d] (counterclockwise arcs):
///   integral of d theta d phi / (2 - 2 cos(theta - phi))
///     = ln |sin((d-b)/2)| |sin((c-a)/2)| / (|sin((c-b)/2)| |sin((d-a)/2)|).
/// The arcs must have disjoint interiors (the density is singular on the
/// diagonal); zero-width rectangles yield exactly 0.
double nu_rect(double a, double b, double c, double d);

/// Sum of nu_rect over all pieces of the domain.
double nu_domain(const RectangularDomain& dom);

/// Everything needed to evaluate the invariant measures of one short-cycle
/// partition: the normalization constant K and the angular coordinates of
/// P_i, Q_i, A_i, B_i, C_i.
struct MeasureContext {
    int g = 0;
    int N = 0;
    double K = 0.0; // closed-form product value
    Partition part;
    RectangularDomain omega;
    std::vector<double> p, q, a, b, c; // 1-based angular coordinates
};

MeasureContext make_measure_context(const SurfaceGeometry& geom, const Partition& part);

/// K = ln prod_i |sin((c_i-q_{i+2})/2)| |sin((b_i-p_{i-1})/2)|
///              / (|sin((b_i-p_i)/2)| |sin((c_i-q_{i+1})/2)|).
double K_A_closed_form(const MeasureContext& ctx);

/// Invariant density of the factor map at phi: the nu-density integrated
/// over the x-fiber of Omega_A at height phi, normalized by K. Piecewise a
/// sum of cotangent differences; strictly positive away from the strip
/// boundaries.
double mu_density(const MeasureContext& ctx, double phi);

/// mu-mass of an arc, in closed form (each Omega piece contributes
/// nu_rect(x-arc, I ∩ y-arc) / K).
double mu_interval(const MeasureContext& ctx, const CircleArc& I);

/// Stratified Monte Carlo estimate of nu(Omega_A): uniform samples over
/// S x S minus a diagonal band of half-width 1e-3 (Omega_A keeps a larger
/// margin from the diagonal, so the band carries no nu-mass of the domain).
/// Deterministic in seed, independent of worker count.
double monte_carlo_K(const MeasureContext& ctx, std::uint64_t n_samples,
                     std::uint64_t seed, int threads = 0);

/// max |mu(f^{-1} I) - mu(I)| over n_arcs seeded random arcs, with the
/// preimages computed exactly as arcs via the branch inverses.
double mu_invariance_max_error(const SurfaceGeometry& geom, const MeasureContext& ctx,
                               int n_arcs, std::uint64_t seed);

} // namespace bdlab
