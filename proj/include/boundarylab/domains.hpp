#pragma once

#include "boundarylab/cycles.hpp"

namespace bdlab {

enum class DomainKind { omega_P, omega_A, psi_A, D_only };

enum class PieceType { wide, lower_corner, upper_corner, d_rect };

/// Axis-aligned rectangle on the torus S x S, stored as a pair of
/// counterclockwise arcs (closed edges).
struct RectPiece {
    CircleArc x;
    CircleArc y;
    PieceType type = PieceType::wide;
};

struct StripSpec {
    int i = 0;
    CircleArc y_span;
    std::vector<RectPiece> pieces;
    bool has_corners = false;
    CirclePoint B, C; // omega_A / psi_A strips only
};

struct RectangularDomain {
    DomainKind kind = DomainKind::omega_P;
    int g = 0;
    int N = 0;
    std::vector<StripSpec> strips; // 1-based, size N+1

    std::vector<const RectPiece*> all_pieces() const;
};

/// Bowen-Series domain Omega_P: per strip y in [P_i, P_{i+1}], pieces
/// [Q_{i+2},P_{i-1}] x [P_i,Q_i] and [Q_{i+2},P_i] x [Q_i,P_{i+1}].
RectangularDomain build_omega_P(const SurfaceGeometry& geom);

/// Omega_A for a short-cycle partition: per strip y in [A_i, A_{i+1}],
/// pieces [Q_{i+2},P_{i-1}] x [A_i,A_{i+1}], [Q_{i+1},Q_{i+2}] x [A_i,C_i],
/// [P_{i-1},P_i] x [B_i,A_{i+1}] with B_i = T_sigma(i-1) A_sigma(i-1) and
/// C_i = T_sigma(i+1) A_sigma(i+1)+1. Throws precondition_error naming the
/// first failing index if the partition is not short-cycle.
RectangularDomain build_omega_A(const SurfaceGeometry& geom, const Partition& part);

/// The added rectangles D: R_i = [P_{i-1},P_i] x [Q_i,B_i].
RectangularDomain build_D(const SurfaceGeometry& geom, const Partition& part);

/// Trapping region Psi_A = Omega_A united with D.
RectangularDomain build_psi(const SurfaceGeometry& geom, const Partition& part);

/// Closed-rectangle membership; `tol` inflates every edge (0 = exact).
bool domain_contains(const RectangularDomain& dom, CirclePoint x, CirclePoint y,
                     double tol = 0.0);

/// The y-extent of the domain over the closed x-column [x_lo, x_hi],
/// merged into counterclockwise arcs.
std::vector<CircleArc> column_span(const RectangularDomain& dom,
                                   CirclePoint x_lo, CirclePoint x_hi);

struct BijectivityReport {
    double max_corner_residual = 0.0; // image-rectangle formulas
    double max_seam_residual = 0.0;   // T_i B_i = T_j C_j and column seams
    double max_column_residual = 0.0; // image tiles vs domain column spans
    double nu_domain = 0.0;
    double nu_images = 0.0;
    double max_pair_overlap = 0.0;    // nu of pairwise image intersections
    bool pass = false;
};

/// Checks Theorem "one-to-one and onto" numerically: the three image
/// rectangles per strip match their closed forms, seam identities hold,
/// images tile complete vertical columns of Omega_A, and measure accounting
/// balances to tol.
BijectivityReport verify_bijectivity(const SurfaceGeometry& geom,
                                     const Partition& part, double tol);

} // namespace bdlab
