#include "boundarylab/mobius.hpp"

#include <cmath>

namespace bdlab {

namespace {

// Matrix [[a,b],[c,d]] sending (z1, z2, z3) to (0, 1, inf).
struct Mat2 {
    cplx a, b, c, d;
};

Mat2 to_zero_one_inf(cplx z1, cplx z2, cplx z3) {
    return Mat2{z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

Mat2 mul(const Mat2& m, const Mat2& n) {
    return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 inv(const Mat2& m) {
    const cplx det = m.a * m.d - m.b * m.c;
    return Mat2{m.d / det, -m.b / det, -m.c / det, m.a / det};
}

// True iff going counterclockwise from a the point b is met before c.
bool ccw_ordered(CirclePoint a, CirclePoint b, CirclePoint c) {
    return ccw_delta(a, b) < ccw_delta(a, c);
}

} // namespace

MobiusMap::MobiusMap(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    const double q = std::norm(alpha_) - std::norm(beta_);
    if (!(q > 0.0))
        throw construction_error("MobiusMap: |alpha|^2 - |beta|^2 must be positive");
    const double s = 1.0 / std::sqrt(q);
    alpha_ *= s;
    beta_ *= s;
}

MobiusMap MobiusMap::rotation(double psi) {
    return MobiusMap(std::polar(1.0, 0.5 * psi), cplx(0.0, 0.0));
}

MobiusMap MobiusMap::from_components(cplx alpha, cplx beta) {
    if (!(std::norm(alpha) - std::norm(beta) > 0.0))
        throw construction_error("MobiusMap: |alpha|^2 - |beta|^2 must be positive");
    MobiusMap m;
    m.alpha_ = alpha;
    m.beta_ = beta;
    return m;
}

CirclePoint MobiusMap::apply(CirclePoint p) const {
    const cplx z = std::polar(1.0, p.theta);
    const cplx den = std::conj(beta_) * z + std::conj(alpha_);
    if (std::norm(den) < 1e-300)
        throw singular_error("MobiusMap::apply: vanishing denominator (corrupted map)");
    const cplx w = (alpha_ * z + beta_) / den;
    return normalize_angle(std::atan2(w.imag(), w.real()));
}

cplx MobiusMap::apply_disk(cplx z) const {
    return (alpha_ * z + beta_) / (std::conj(beta_) * z + std::conj(alpha_));
}

double MobiusMap::boundary_derivative(CirclePoint p) const {
    const cplx z = std::polar(1.0, p.theta);
    return 1.0 / std::norm(std::conj(beta_) * z + std::conj(alpha_));
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
    const cplx a = m1.alpha() * m2.alpha() + m1.beta() * std::conj(m2.beta());
    const cplx b = m1.alpha() * m2.beta() + m1.beta() * std::conj(m2.alpha());
    return MobiusMap(a, b);
}

double mobius_distance(const MobiusMap& m1, const MobiusMap& m2) {
    const double plus = std::abs(m1.alpha() - m2.alpha()) + std::abs(m1.beta() - m2.beta());
    const double minus = std::abs(m1.alpha() + m2.alpha()) + std::abs(m1.beta() + m2.beta());
    return std::min(plus, minus);
}

MobiusMap MobiusMap::from_three_points(const std::array<CirclePoint, 3>& x,
                                       const std::array<CirclePoint, 3>& y) {
    constexpr double kDistinct = 1e-14;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (circ_dist(x[i], x[j]) < kDistinct || circ_dist(y[i], y[j]) < kDistinct)
                throw domain_error("from_three_points: coincident anchor points");
    if (ccw_ordered(x[0], x[1], x[2]) != ccw_ordered(y[0], y[1], y[2]))
        throw domain_error("from_three_points: orientation mismatch "
                           "(map would swap disk interior and exterior)");

    const Mat2 mx = to_zero_one_inf(std::polar(1.0, x[0].theta),
                                    std::polar(1.0, x[1].theta),
                                    std::polar(1.0, x[2].theta));
    const Mat2 my = to_zero_one_inf(std::polar(1.0, y[0].theta),
                                    std::polar(1.0, y[1].theta),
                                    std::polar(1.0, y[2].theta));
    Mat2 m = mul(inv(my), mx);
    const cplx det = m.a * m.d - m.b * m.c;
    const cplx s = std::sqrt(det);
    m = Mat2{m.a / s, m.b / s, m.c / s, m.d / s};

    // After det-normalization a circle-preserving matrix is +-SU(1,1);
    // reject anything off-form.
    const double resid = std::abs(m.d - std::conj(m.a)) + std::abs(m.c - std::conj(m.b));
    if (resid > 1e-10)
        throw construction_error("from_three_points: SU(1,1) residual too large");
    const cplx alpha = 0.5 * (m.a + std::conj(m.d));
    const cplx beta = 0.5 * (m.b + std::conj(m.c));
    if (std::norm(alpha) - std::norm(beta) <= 0.0)
        throw domain_error("from_three_points: orientation mismatch "
                           "(map would swap disk interior and exterior)");
    return MobiusMap(alpha, beta);
}

} // namespace bdlab
