#include "boundarylab/svg.hpp"

#include <cmath>
#include <sstream>

#include "boundarylab/json_io.hpp"

namespace bdlab {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;

struct Canvas {
    std::ostringstream os;

    void open(double w, double h) {
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
           << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    }
    void style(const std::string& css) { os << "<style>" << css << "</style>\n"; }
    void close() { os << "</svg>\n"; }
    std::string str() const { return os.str(); }
};

// disk coordinates -> pixel coordinates (y axis flipped)
struct DiskMap {
    double cx = kMargin + kSize / 2, cy = kMargin + kSize / 2, scale = kSize / 2;
    double x(double u) const { return cx + scale * u; }
    double y(double v) const { return cy - scale * v; }
};

std::string pt(const DiskMap& m, cplx z) {
    return fmt17(m.x(z.real())) + "," + fmt17(m.y(z.imag()));
}

} // namespace

std::string plot_fundamental_domain(const SurfaceGeometry& geom) {
    Canvas c;
    const double total = kSize + 2 * kMargin;
    c.open(total, total);
    c.style(".circle{fill:none;stroke:#444;stroke-width:1.2}"
            ".side{fill:none;stroke:#1f5fa8;stroke-width:1.6}"
            ".vertex{fill:#a82318}"
            ".lbl{font:13px sans-serif;fill:#222}"
            ".vlbl{font:11px sans-serif;fill:#a82318}");
    const DiskMap m;
    c.os << "<circle class=\"circle\" cx=\"" << fmt17(m.cx) << "\" cy=\"" << fmt17(m.cy)
         << "\" r=\"" << fmt17(m.scale) << "\"/>\n";

    // each side i as a sampled arc of its isometric circle from V_i to V_{i+1}
    constexpr int kSegs = 48;
    for (int i = 1; i <= geom.N; ++i) {
        const cplx center = std::polar(geom.d, 2.0 * geom.t * i);
        const cplx v0 = geom.vert(i) - center;
        const cplx v1 = geom.vert(i + 1) - center;
        const double a0 = std::atan2(v0.imag(), v0.real());
        double da = std::remainder(std::atan2(v1.imag(), v1.real()) - a0, kTau);
        c.os << "<polyline class=\"side\" points=\"";
        for (int s = 0; s <= kSegs; ++s) {
            const cplx z = center + std::polar(geom.r_euc, a0 + da * s / kSegs);
            if (s) c.os << " ";
            c.os << pt(m, z);
        }
        c.os << "\"/>\n";
    }
    for (int i = 1; i <= geom.N; ++i) {
        c.os << "<circle class=\"vertex\" cx=\"" << fmt17(m.x(geom.vert(i).real()))
             << "\" cy=\"" << fmt17(m.y(geom.vert(i).imag())) << "\" r=\"3\"/>\n";
    }
    for (int i = 1; i <= geom.N; ++i) {
        const cplx zp = std::polar(1.055, geom.p(i).theta);
        const cplx zq = std::polar(1.055, geom.q(i).theta);
        const cplx zv = std::polar(geom.v * 0.86, geom.t * (2 * i - 1));
        c.os << "<text class=\"lbl\" x=\"" << fmt17(m.x(zp.real())) << "\" y=\""
             << fmt17(m.y(zp.imag())) << "\" text-anchor=\"middle\">P" << i << "</text>\n";
        c.os << "<text class=\"lbl\" x=\"" << fmt17(m.x(zq.real())) << "\" y=\""
             << fmt17(m.y(zq.imag())) << "\" text-anchor=\"middle\">Q" << i << "</text>\n";
        c.os << "<text class=\"vlbl\" x=\"" << fmt17(m.x(zv.real())) << "\" y=\""
             << fmt17(m.y(zv.imag())) << "\" text-anchor=\"middle\">V" << i << "</text>\n";
    }
    c.close();
    return c.str();
}

namespace {

const char* piece_class(PieceType t) {
    switch (t) {
        case PieceType::wide: return "wide";
        case PieceType::lower_corner: return "lower";
        case PieceType::upper_corner: return "upper";
        case PieceType::d_rect: return "drect";
    }
    return "wide";
}

} // namespace

std::string plot_torus_domain(const RectangularDomain& dom) {
    Canvas c;
    const double total = kSize + 2 * kMargin;
    c.open(total, total);
    c.style(".frame{fill:none;stroke:#333;stroke-width:1}"
            ".wide{fill:#8ea6cb;stroke:#39425c;stroke-width:0.4}"
            ".lower{fill:#7bbf88;stroke:#39425c;stroke-width:0.4}"
            ".upper{fill:#d9a452;stroke:#39425c;stroke-width:0.4}"
            ".drect{fill:#b581b5;stroke:#39425c;stroke-width:0.4}");
    const double s = kSize / kTau;
    // torus coordinates: theta -> right, phi -> up
    const auto px = [&](double th) { return kMargin + s * th; };
    const auto py = [&](double ph) { return kMargin + kSize - s * ph; };

    c.os << "<rect class=\"frame\" x=\"" << fmt17(kMargin) << "\" y=\"" << fmt17(kMargin)
         << "\" width=\"" << fmt17(kSize) << "\" height=\"" << fmt17(kSize) << "\"/>\n";

    // each piece, split at the 2*pi wrap on both axes
    for (int i = 1; i <= dom.N; ++i) {
        for (const RectPiece& p : dom.strips[i].pieces) {
            const auto split = [](const CircleArc& a) {
                std::vector<std::pair<double, double>> out;
                const double s0 = a.start.theta;
                const double len = arc_length(a);
                if (s0 + len <= kTau) {
                    out.emplace_back(s0, len);
                } else {
                    out.emplace_back(s0, kTau - s0);
                    out.emplace_back(0.0, s0 + len - kTau);
                }
                return out;
            };
            for (const auto& [x0, xl] : split(p.x)) {
                for (const auto& [y0, yl] : split(p.y)) {
                    if (xl <= 0.0 || yl <= 0.0) continue;
                    c.os << "<rect class=\"" << piece_class(p.type) << "\" x=\""
                         << fmt17(px(x0)) << "\" y=\"" << fmt17(py(y0 + yl))
                         << "\" width=\"" << fmt17(s * xl) << "\" height=\""
                         << fmt17(s * yl) << "\"/>\n";
                }
            }
        }
    }
    c.close();
    return c.str();
}

} // namespace bdlab
