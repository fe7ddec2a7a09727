// boundary-lab: construct (8g-4)-gon surface-group geometry, run boundary-map
// dynamics, and verify the structural identities numerically.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "boundarylab/experiments.hpp"
#include "boundarylab/json_io.hpp"
#include "boundarylab/measures.hpp"
#include "boundarylab/svg.hpp"

using namespace bdlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct PartitionSpec {
    std::string raw = "midpoint";
};

Partition resolve_partition(const SurfaceGeometry& geom, const std::string& spec) {
    if (spec == "bowen-series") return partition_bowen_series(geom);
    if (spec == "dual") return partition_dual(geom);
    if (spec == "midpoint") return partition_midpoint(geom);
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "random-short" || head == "random") {
        if (tail.empty()) throw domain_error("partition spec needs a seed: " + spec);
        const std::uint64_t seed = std::stoull(tail);
        return head == "random-short" ? sample_short_cycle_partition(geom, seed)
                                      : sample_general_partition(geom, seed);
    }
    if (head == "file") {
        if (tail.empty()) throw domain_error("partition spec needs a path: " + spec);
        return partition_explicit(geom, partition_angles_from_json(read_file(tail)));
    }
    throw domain_error("unknown partition spec: " + spec);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

int cmd_geom(int genus, const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    emit(out, geometry_to_json(geom));
    return kExitOk;
}

std::vector<CheckResult> run_verification_suite(const SurfaceGeometry& geom, double tol) {
    std::vector<CheckResult> checks;
    const auto add = [&](const VerifyReport& rep) {
        checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
    };
    // combinatorics (exact)
    CheckResult comb{"side-pairing identities (exact)", 0.0, 0.5, false};
    try {
        const SidePairing sp = pairing_build(geom.g);
        for (int i = 1; i <= geom.N; ++i)
            if (sp.sigma[i] != geom.pairing.sigma[i] || sp.rho[i] != geom.pairing.rho[i] ||
                sp.theta[i] != geom.pairing.theta[i])
                comb.max_residual = 1.0;
        for (int i = 1; i <= geom.N; ++i)
            for (int n = 0; n <= 20; ++n)
                if (psi_iterate(sp, i, n) != sp.wrap(i + n * (4 * geom.g - 4)))
                    comb.max_residual = 1.0;
    } catch (const error&) {
        comb.max_residual = 1.0;
    }
    comb.pass = comb.max_residual < 0.5;
    checks.push_back(comb);

    add(verify_group_relations(geom, tol));
    add(verify_endpoint_mapping(geom, tol));
    add(verify_key_identity(geom, tol));

    // appendix quantities
    const AppendixAngles ang = appendix_angles(geom.g);
    CheckResult beta{"beta = pi/4 - t", std::fabs(ang.beta - (std::numbers::pi / 4 - ang.t)),
                     1e-12, false};
    beta.pass = beta.max_residual < beta.tol;
    checks.push_back(beta);
    CheckResult om{"omega > pi/4", std::max(0.0, std::numbers::pi / 4 - ang.omega + 0.0),
                   1e-12, false};
    om.pass = ang.omega > std::numbers::pi / 4;
    checks.push_back(om);
    CheckResult ga{"gamma - alpha < pi/2",
                   std::max(0.0, ang.gamma - ang.alpha - std::numbers::pi / 2), 1e-12, false};
    ga.pass = ang.gamma - ang.alpha < std::numbers::pi / 2;
    checks.push_back(ga);

    const ContractionReport con = verify_contraction(geom);
    CheckResult cr{"arc-halving contraction ratio < 1/2", con.max_ratio, 0.5, con.pass};
    checks.push_back(cr);

    // critical points solve their defining equations
    CheckResult crit{"critical points a_j, b_j", 0.0, 1e-10, false};
    try {
        const CriticalPoints cp = critical_points(geom);
        for (int j = 1; j <= geom.N; ++j) {
            crit.max_residual = std::max(crit.max_residual,
                circ_dist(geom.gen(j).apply(cp.a[j]), geom.p(geom.rho(j) + 1)));
            crit.max_residual = std::max(crit.max_residual,
                circ_dist(geom.gen(j - 1).apply(cp.b[j]), geom.q(geom.theta(j - 1))));
        }
        crit.pass = crit.max_residual < crit.tol;
    } catch (const error&) {
        crit.max_residual = 1.0;
    }
    checks.push_back(crit);

    add(verify_fixed_point_lemma(geom, partition_bowen_series(geom), tol));
    add(verify_fixed_point_lemma(geom, partition_midpoint(geom), tol));
    return checks;
}

int cmd_verify(int genus, double tol, const std::string& geom_file, const std::string& out) {
    std::vector<CheckResult> checks;
    try {
        const SurfaceGeometry geom =
            geom_file.empty() ? build_geometry(genus) : geometry_from_json(read_file(geom_file));
        checks = run_verification_suite(geom, tol);
    } catch (const error& e) {
        // a geometry that cannot even be assembled fails verification
        checks.push_back(CheckResult{std::string("load/build: ") + e.what(), 1.0, tol, false});
    }
    bool all = true;
    for (const CheckResult& c : checks) {
        all = all && c.pass;
        std::fprintf(stderr, "[%s] %-55s max residual %.3e (tol %.1e)\n",
                     c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual, c.tol);
    }
    if (!out.empty()) emit(out, verify_report_to_json(checks));
    std::fprintf(stderr, "verify: %s\n", all ? "all checks passed" : "FAILURES present");
    return all ? kExitOk : kExitVerifyFail;
}

int cmd_cycles(int genus, const std::string& spec, int max_iter, double tol, bool strict,
               const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    const Partition part = resolve_partition(geom, spec);
    if (part.mode == PartitionMode::bowen_series || part.mode == PartitionMode::dual) {
        // jump points sit at window endpoints: orbits are periodic, not cycles
        std::vector<PeriodicOrbitReport> reports;
        for (int i = 1; i <= geom.N; ++i)
            reports.push_back(periodic_orbit_report(geom, part, i));
        emit(out, periodic_reports_to_json(reports));
        for (const auto& r : reports)
            if (r.upper_period < 0 || r.lower_period < 0) return kExitVerifyFail;
        return kExitOk;
    }
    std::vector<CycleReport> reports;
    bool all_closed = true;
    for (int i = 1; i <= geom.N; ++i) {
        reports.push_back(cycle_detect(geom, part, i, max_iter, tol));
        all_closed = all_closed && reports.back().closed;
    }
    emit(out, cycle_reports_to_json(reports));
    std::fprintf(stderr, "cycles: %d/%d closed\n",
                 static_cast<int>(std::count_if(reports.begin(), reports.end(),
                                                [](const CycleReport& r) { return r.closed; })),
                 geom.N);
    if (strict && !all_closed) return kExitVerifyFail;
    return kExitOk;
}

int cmd_attractor(int genus, const std::string& spec, std::uint64_t samples, int max_steps,
                  std::uint64_t seed, double tol, int threads, const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    const Partition part = resolve_partition(geom, spec);
    std::ostringstream os;
    bool ok = true;
    if (part.mode == PartitionMode::bowen_series) {
        const RectangularDomain omega = build_omega_P(geom);
        const EntryStats trap = trapping_experiment(geom, part, omega, samples, max_steps,
                                                    seed, 1e-3, threads);
        ok = trap.entered == trap.samples && trap.violations == 0;
        os << "{\n  \"mode\": \"bowen_series\",\n  \"domain\": " << domain_to_json(omega)
           << ",\n  \"trapping\": " << entry_stats_to_json(trap) << "\n}\n";
        emit(out, os.str());
        return ok ? kExitOk : kExitVerifyFail;
    }
    if (part.mode == PartitionMode::dual)
        throw precondition_error("attractor: no domain construction in dual mode "
                                 "(only f/F dynamics run there)");
    // short-cycle gate with the failing indices in the message
    std::string failing;
    for (int i = 1; i <= geom.N; ++i)
        if (!is_short_cycle(geom, part, i)) failing += (failing.empty() ? "" : ",") + std::to_string(i);
    if (!failing.empty())
        throw precondition_error("attractor: partition fails the short-cycle check at indices " +
                                 failing);

    const RectangularDomain omega = build_omega_A(geom, part);
    const RectangularDomain psi = build_psi(geom, part);
    const BijectivityReport bij = verify_bijectivity(geom, part, tol);
    const EntryStats trap = trapping_experiment(geom, part, psi, samples, max_steps, seed,
                                                1e-3, threads);
    const EntryStats attr = attraction_experiment(geom, part, omega, samples, max_steps, seed,
                                                  1e-3, threads);
    const ResidualWidths widths = symbolic_D_iteration(geom, part, 10);

    ok = bij.pass && trap.entered == trap.samples && trap.violations == 0;
    const double entered_frac =
        attr.samples ? static_cast<double>(attr.entered) / attr.samples : 0.0;
    ok = ok && entered_frac >= 0.999;
    for (double r : widths.max_ratio) ok = ok && r < 0.5;

    os << "{\n  \"mode\": \"short_cycle\",\n  \"domain\": " << domain_to_json(omega)
       << ",\n  \"bijectivity\": {\"max_corner_residual\": " << fmt17(bij.max_corner_residual)
       << ", \"max_seam_residual\": " << fmt17(bij.max_seam_residual)
       << ", \"max_column_residual\": " << fmt17(bij.max_column_residual)
       << ", \"nu_domain\": " << fmt17(bij.nu_domain)
       << ", \"nu_images\": " << fmt17(bij.nu_images)
       << ", \"max_pair_overlap\": " << fmt17(bij.max_pair_overlap)
       << ", \"pass\": " << (bij.pass ? "true" : "false") << "}"
       << ",\n  \"trapping\": " << entry_stats_to_json(trap)
       << ",\n  \"attraction\": " << entry_stats_to_json(attr) << ",\n  \"residual_widths\": [";
    for (std::size_t n = 0; n < widths.max_width.size(); ++n)
        os << (n ? "," : "") << fmt17(widths.max_width[n]);
    os << "],\n  \"residual_ratios\": [";
    for (std::size_t n = 0; n < widths.max_ratio.size(); ++n)
        os << (n ? "," : "") << fmt17(widths.max_ratio[n]);
    os << "]\n}\n";
    emit(out, os.str());
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_measure(int genus, const std::string& spec, std::uint64_t mc_samples, int n_arcs,
                std::uint64_t seed, int threads, const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    const Partition part = resolve_partition(geom, spec);
    const MeasureContext ctx = make_measure_context(geom, part);
    MeasureReport rep;
    rep.K_closed = ctx.K;
    rep.K_rect_sum = nu_domain(ctx.omega);
    rep.mc_samples = mc_samples;
    rep.K_monte_carlo = mc_samples ? monte_carlo_K(ctx, mc_samples, seed, threads) : 0.0;
    rep.mu_total = mu_interval(ctx, CircleArc{CirclePoint{0.0}, CirclePoint{0.0},
                                              EdgePolicy::closed_closed});
    rep.invariance_max_error = mu_invariance_max_error(geom, ctx, n_arcs, seed);
    emit(out, measure_report_to_json(rep));
    bool ok = std::fabs(rep.K_rect_sum / rep.K_closed - 1.0) < 1e-10 &&
              std::fabs(rep.mu_total - 1.0) < 1e-10 &&
              rep.invariance_max_error < 1e-8;
    if (mc_samples) ok = ok && std::fabs(rep.K_monte_carlo / rep.K_closed - 1.0) < 1e-3;
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_orbit(int genus, const std::string& spec, double x, double y, int steps,
              const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    const Partition part = resolve_partition(geom, spec);
    CirclePoint px = normalize_angle(x), py = normalize_angle(y);
    if (circ_dist(px, py) <= 1e-12) throw domain_error("orbit: x and y must be distinct");

    std::optional<RectangularDomain> omega, psi;
    if (part.mode == PartitionMode::bowen_series) {
        omega = build_omega_P(geom);
        psi = omega; // Omega_P is itself the trapping region
    } else if (part.mode != PartitionMode::dual && is_short_cycle_all(geom, part)) {
        omega = build_omega_A(geom, part);
        psi = build_psi(geom, part);
    }
    std::vector<Orbit2DRow> rows;
    rows.reserve(steps + 1);
    const auto flags = [&](CirclePoint a, CirclePoint b, int step, int side) {
        Orbit2DRow r{step, a, b, side, false, false};
        if (omega) r.in_omega = domain_contains(*omega, a, b, 1e-12);
        if (psi) r.in_psi = domain_contains(*psi, a, b, 1e-12);
        return r;
    };
    rows.push_back(flags(px, py, 0, -1));
    for (int s = 1; s <= steps; ++s) {
        auto [img, side] = F_apply(geom, part, px, py);
        px = img.first;
        py = img.second;
        rows.push_back(flags(px, py, s, side));
    }
    emit(out, orbit2d_to_csv(rows));
    return kExitOk;
}

int cmd_plot(int genus, const std::string& spec, const std::string& what,
             const std::string& out) {
    const SurfaceGeometry geom = build_geometry(genus);
    if (what == "domain") {
        emit(out, plot_fundamental_domain(geom));
        return kExitOk;
    }
    const Partition part = resolve_partition(geom, spec);
    if (what == "attractor") {
        const RectangularDomain dom = part.mode == PartitionMode::bowen_series
                                          ? build_omega_P(geom)
                                          : build_omega_A(geom, part);
        emit(out, plot_torus_domain(dom));
        return kExitOk;
    }
    if (what == "trapping") {
        if (part.mode == PartitionMode::bowen_series) {
            emit(out, plot_torus_domain(build_omega_P(geom)));
            return kExitOk;
        }
        emit(out, plot_torus_domain(build_psi(geom, part)));
        return kExitOk;
    }
    throw domain_error("plot: unknown figure: " + what);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary maps for surface groups: geometry, dynamics, verification"};
    app.require_subcommand(1);

    int genus = 2;
    double tol = 1e-9;
    std::string out, geom_file, partition = "midpoint", what = "domain";
    std::uint64_t seed = 1, samples = 100000, mc_samples = 0;
    int max_steps = 10000, max_iter = 500, n_arcs = 100, steps = 100, threads = 0;
    double ox = 0.0, oy = 0.0;
    bool strict = false;

    const auto add_common = [&](CLI::App* sub, bool with_partition) {
        sub->add_option("--genus", genus, "surface genus (>= 2)")->required();
        sub->add_option("--out", out, "output path (default: stdout)");
        if (with_partition)
            sub->add_option("--partition", partition,
                            "bowen-series | dual | midpoint | random-short:SEED | "
                            "random:SEED | file:PATH");
    };

    CLI::App* geom_cmd = app.add_subcommand("geom", "export the canonical geometry JSON");
    add_common(geom_cmd, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--tol", tol, "residual tolerance");
    verify_cmd->add_option("--geom-file", geom_file, "verify a stored geometry JSON instead");

    CLI::App* cycles_cmd = app.add_subcommand("cycles", "detect the cycles of all A_i");
    add_common(cycles_cmd, true);
    cycles_cmd->add_option("--max-iter", max_iter, "orbit length cap");
    cycles_cmd->add_option("--tol", tol, "matching tolerance");
    cycles_cmd->add_flag("--strict", strict, "exit 1 when any cycle stays open");

    CLI::App* attr_cmd = app.add_subcommand("attractor",
                                            "build domains, verify bijectivity, run experiments");
    add_common(attr_cmd, true);
    attr_cmd->add_option("--samples", samples, "sample pairs per experiment");
    attr_cmd->add_option("--max-steps", max_steps, "iteration cap per sample");
    attr_cmd->add_option("--seed", seed, "experiment seed");
    attr_cmd->add_option("--tol", tol, "bijectivity tolerance");
    attr_cmd->add_option("--threads", threads, "worker cap (also BOUNDARY_LAB_THREADS)");

    CLI::App* measure_cmd = app.add_subcommand("measure", "invariant-measure report");
    add_common(measure_cmd, true);
    measure_cmd->add_option("--mc-samples", mc_samples, "Monte Carlo sample count (0 = skip)");
    measure_cmd->add_option("--arcs", n_arcs, "random arcs for the invariance check");
    measure_cmd->add_option("--seed", seed, "seed");
    measure_cmd->add_option("--threads", threads, "worker cap");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "trace one F-orbit to CSV");
    add_common(orbit_cmd, true);
    orbit_cmd->add_option("--x", ox, "x angle (radians)")->required();
    orbit_cmd->add_option("--y", oy, "y angle (radians)")->required();
    orbit_cmd->add_option("--steps", steps, "number of steps");

    CLI::App* plot_cmd = app.add_subcommand("plot", "deterministic SVG figures");
    add_common(plot_cmd, true);
    plot_cmd->add_option("--what", what, "domain | attractor | trapping")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (geom_cmd->parsed()) return cmd_geom(genus, out);
        if (verify_cmd->parsed()) return cmd_verify(genus, tol, geom_file, out);
        if (cycles_cmd->parsed())
            return cmd_cycles(genus, partition, max_iter, tol, strict, out);
        if (attr_cmd->parsed())
            return cmd_attractor(genus, partition, samples, max_steps, seed, tol, threads, out);
        if (measure_cmd->parsed())
            return cmd_measure(genus, partition, mc_samples, n_arcs, seed, threads, out);
        if (orbit_cmd->parsed()) return cmd_orbit(genus, partition, ox, oy, steps, out);
        if (plot_cmd->parsed()) return cmd_plot(genus, partition, what, out);
    } catch (const domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
