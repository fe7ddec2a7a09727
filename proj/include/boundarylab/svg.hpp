#pragma once

#include <string>

#include "boundarylab/domains.hpp"

namespace bdlab {

/// Fundamental-domain figure: the unit circle, the N geodesic sides drawn
/// on their isometric circles, vertex markers and P/Q/V labels.
/// Deterministic: fixed element order, 17-digit coordinates.
std::string plot_fundamental_domain(const SurfaceGeometry& geom);

/// Torus-square figure of a rectangular domain: [0,2pi]^2 with one styled
/// rect per piece (split at the wrap), fill class by piece type.
std::string plot_torus_domain(const RectangularDomain& dom);

} // namespace bdlab
