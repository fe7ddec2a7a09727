#include "boundarylab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bdlab {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string num_array(const std::vector<double>& vals) {
    std::string out = "[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += fmt17(vals[i]);
    }
    return out + "]";
}

std::string int_array(const std::vector<int>& vals) {
    std::string out = "[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vals[i]);
    }
    return out + "]";
}

std::string u64_array(const std::vector<std::uint64_t>& vals) {
    std::string out = "[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vals[i]);
    }
    return out + "]";
}

std::vector<double> angles_of(const std::vector<CirclePoint>& pts) {
    std::vector<double> out;
    out.reserve(pts.size() > 0 ? pts.size() - 1 : 0);
    for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(pts[i].theta);
    return out;
}

const char* mode_name(PartitionMode m) {
    switch (m) {
        case PartitionMode::general: return "general";
        case PartitionMode::bowen_series: return "bowen_series";
        case PartitionMode::dual: return "dual";
        case PartitionMode::midpoint: return "midpoint";
        case PartitionMode::explicit_: return "explicit";
    }
    return "general";
}

} // namespace

std::string geometry_to_json(const SurfaceGeometry& geom) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"g\": " << geom.g << ",\n";
    os << "  \"N\": " << geom.N << ",\n";
    os << "  \"t\": " << fmt17(geom.t) << ",\n";
    os << "  \"phi\": " << fmt17(geom.phi) << ",\n";
    os << "  \"d\": " << fmt17(geom.d) << ",\n";
    os << "  \"R_euc\": " << fmt17(geom.r_euc) << ",\n";
    os << "  \"v\": " << fmt17(geom.v) << ",\n";
    os << "  \"P\": " << num_array(angles_of(geom.P)) << ",\n";
    os << "  \"Q\": " << num_array(angles_of(geom.Q)) << ",\n";
    os << "  \"V\": [";
    for (int i = 1; i <= geom.N; ++i) {
        if (i > 1) os << ",";
        os << "[" << fmt17(std::abs(geom.V[i])) << ","
           << fmt17(normalize_angle(std::arg(geom.V[i])).theta) << "]";
    }
    os << "],\n";
    os << "  \"generators\": [";
    for (int i = 1; i <= geom.N; ++i) {
        if (i > 1) os << ",";
        const MobiusMap& m = geom.T[i];
        os << "[" << fmt17(m.alpha().real()) << "," << fmt17(m.alpha().imag()) << ","
           << fmt17(m.beta().real()) << "," << fmt17(m.beta().imag()) << "]";
    }
    os << "],\n";
    std::vector<int> sig(geom.pairing.sigma.begin() + 1, geom.pairing.sigma.end());
    std::vector<int> rho(geom.pairing.rho.begin() + 1, geom.pairing.rho.end());
    std::vector<int> the(geom.pairing.theta.begin() + 1, geom.pairing.theta.end());
    os << "  \"sigma\": " << int_array(sig) << ",\n";
    os << "  \"rho\": " << int_array(rho) << ",\n";
    os << "  \"theta\": " << int_array(the) << "\n";
    os << "}\n";
    return os.str();
}

SurfaceGeometry geometry_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SurfaceGeometry geom;
    geom.g = j.at("g").get<int>();
    geom.N = j.at("N").get<int>();
    geom.t = j.at("t").get<double>();
    geom.phi = j.at("phi").get<double>();
    geom.d = j.at("d").get<double>();
    geom.r_euc = j.at("R_euc").get<double>();
    geom.v = j.at("v").get<double>();
    const int N = geom.N;
    if (N <= 0 || j.at("P").size() != static_cast<std::size_t>(N))
        throw domain_error("geometry_from_json: inconsistent N");
    geom.P.assign(N + 1, CirclePoint{});
    geom.Q.assign(N + 1, CirclePoint{});
    geom.V.assign(N + 1, cplx{});
    geom.T.assign(N + 1, MobiusMap::identity());
    geom.pairing.N = N;
    geom.pairing.sigma.assign(N + 1, 0);
    geom.pairing.rho.assign(N + 1, 0);
    geom.pairing.theta.assign(N + 1, 0);
    for (int i = 1; i <= N; ++i) {
        geom.P[i] = normalize_angle(j.at("P")[i - 1].get<double>());
        geom.Q[i] = normalize_angle(j.at("Q")[i - 1].get<double>());
        const auto& vj = j.at("V")[i - 1];
        geom.V[i] = std::polar(vj[0].get<double>(), vj[1].get<double>());
        const auto& gj = j.at("generators")[i - 1];
        geom.T[i] = MobiusMap::from_components(
            cplx(gj[0].get<double>(), gj[1].get<double>()),
            cplx(gj[2].get<double>(), gj[3].get<double>()));
        geom.pairing.sigma[i] = j.at("sigma")[i - 1].get<int>();
        geom.pairing.rho[i] = j.at("rho")[i - 1].get<int>();
        geom.pairing.theta[i] = j.at("theta")[i - 1].get<int>();
    }
    return geom;
}

std::string partition_to_json(const Partition& part) {
    std::ostringstream os;
    os << "{\n  \"g\": " << part.g << ",\n  \"N\": " << part.N
       << ",\n  \"mode\": \"" << mode_name(part.mode) << "\",\n  \"A\": "
       << num_array(angles_of(part.A)) << "\n}\n";
    return os.str();
}

std::vector<CirclePoint> partition_angles_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json& arr = j.is_array() ? j : j.at("A");
    std::vector<CirclePoint> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(normalize_angle(v.get<double>()));
    return out;
}

std::string verify_report_to_json(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    bool all = true;
    os << "{\n  \"checks\": [\n";
    for (std::size_t k = 0; k < checks.size(); ++k) {
        const CheckResult& c = checks[k];
        all = all && c.pass;
        os << "    {\"name\": \"" << c.name << "\", \"max_residual\": "
           << fmt17(c.max_residual) << ", \"tol\": " << fmt17(c.tol)
           << ", \"pass\": " << (c.pass ? "true" : "false") << "}"
           << (k + 1 < checks.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"pass\": " << (all ? "true" : "false") << "\n}\n";
    return os.str();
}

namespace {

std::string trace_points_json(const OrbitTrace& tr) {
    std::vector<double> th;
    th.reserve(tr.points.size());
    for (const CirclePoint& p : tr.points) th.push_back(p.theta);
    return num_array(th);
}

} // namespace

std::string cycle_reports_to_json(const std::vector<CycleReport>& reports) {
    std::ostringstream os;
    os << "{\n  \"cycles\": [\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const CycleReport& r = reports[k];
        os << "    {\"i\": " << r.i << ", \"closed\": " << (r.closed ? "true" : "false")
           << ", \"m\": " << r.m << ", \"k\": " << r.k
           << ", \"end_theta\": " << fmt17(r.closed ? r.end.theta : 0.0)
           << ", \"is_short\": " << (r.is_short ? "true" : "false")
           << ", \"upper\": " << trace_points_json(r.upper)
           << ", \"lower\": " << trace_points_json(r.lower)
           << ", \"upper_sides\": " << int_array(r.upper.sides)
           << ", \"lower_sides\": " << int_array(r.lower.sides) << "}"
           << (k + 1 < reports.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string periodic_reports_to_json(const std::vector<PeriodicOrbitReport>& reports) {
    std::ostringstream os;
    os << "{\n  \"periodic_orbits\": [\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const PeriodicOrbitReport& r = reports[k];
        os << "    {\"i\": " << r.i
           << ", \"upper_preperiod\": " << r.upper_preperiod
           << ", \"upper_period\": " << r.upper_period
           << ", \"lower_preperiod\": " << r.lower_preperiod
           << ", \"lower_period\": " << r.lower_period
           << ", \"upper\": " << trace_points_json(r.upper)
           << ", \"lower\": " << trace_points_json(r.lower) << "}"
           << (k + 1 < reports.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string domain_to_json(const RectangularDomain& dom) {
    const char* kind = "omega_P";
    if (dom.kind == DomainKind::omega_A) kind = "omega_A";
    else if (dom.kind == DomainKind::psi_A) kind = "psi_A";
    else if (dom.kind == DomainKind::D_only) kind = "D";
    std::ostringstream os;
    os << "{\n  \"kind\": \"" << kind << "\",\n  \"g\": " << dom.g
       << ",\n  \"N\": " << dom.N << ",\n  \"strips\": [\n";
    for (int i = 1; i <= dom.N; ++i) {
        const StripSpec& s = dom.strips[i];
        os << "    {\"i\": " << i << ", \"pieces\": [";
        for (std::size_t p = 0; p < s.pieces.size(); ++p) {
            const RectPiece& r = s.pieces[p];
            if (p) os << ",";
            os << "[" << fmt17(r.x.start.theta) << "," << fmt17(r.x.end.theta) << ","
               << fmt17(r.y.start.theta) << "," << fmt17(r.y.end.theta) << "]";
        }
        os << "]}" << (i < dom.N ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string entry_stats_to_json(const EntryStats& stats) {
    std::ostringstream os;
    os << "{\"samples\": " << stats.samples << ", \"entered\": " << stats.entered
       << ", \"max_entry_time\": " << stats.max_entry_time
       << ", \"histogram\": " << u64_array(stats.histogram)
       << ", \"violations\": " << stats.violations
       << ", \"never_entered\": " << stats.never_entered
       << ", \"max_nonentrant_exceptional_dist\": "
       << fmt17(stats.max_nonentrant_exceptional_dist) << "}";
    return os.str();
}

std::string measure_report_to_json(const MeasureReport& rep) {
    std::ostringstream os;
    os << "{\n  \"K_closed\": " << fmt17(rep.K_closed)
       << ",\n  \"K_rect_sum\": " << fmt17(rep.K_rect_sum)
       << ",\n  \"K_monte_carlo\": " << fmt17(rep.K_monte_carlo)
       << ",\n  \"mc_samples\": " << rep.mc_samples
       << ",\n  \"mu_total\": " << fmt17(rep.mu_total)
       << ",\n  \"invariance_max_error\": " << fmt17(rep.invariance_max_error)
       << "\n}\n";
    return os.str();
}

std::string orbit_trace_to_csv(const OrbitTrace& trace) {
    std::ostringstream os;
    os << "step,theta,side_index\n";
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        os << k << "," << fmt17(trace.points[k].theta) << ","
           << (k < trace.sides.size() ? std::to_string(trace.sides[k]) : "") << "\n";
    }
    return os.str();
}

std::string orbit2d_to_csv(const std::vector<Orbit2DRow>& rows) {
    std::ostringstream os;
    os << "step,x_theta,y_theta,side_index,in_omega,in_psi\n";
    for (const Orbit2DRow& r : rows) {
        os << r.step << "," << fmt17(r.x.theta) << "," << fmt17(r.y.theta) << ","
           << r.side << "," << (r.in_omega ? 1 : 0) << "," << (r.in_psi ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write file: " + path);
    out << content;
}

} // namespace bdlab
