#pragma once

#include <string>
#include <vector>

#include "boundarylab/cycles.hpp"
#include "boundarylab/domains.hpp"
#include "boundarylab/experiments.hpp"

namespace bdlab {

/// 17-significant-digit decimal form: round-trips every double exactly and
/// keeps output byte-stable across runs (nlohmann's shortest-form printing
/// is not used for output for that reason).
std::string fmt17(double v);

std::string geometry_to_json(const SurfaceGeometry& geom);
/// Reconstructs the struct verbatim from the canonical field set; no
/// identities are re-verified (so a corrupted file is loadable and then
/// rejected by the verification suite).
SurfaceGeometry geometry_from_json(const std::string& text);

std::string partition_to_json(const Partition& part);
/// Parses a JSON array of N angles (radians).
std::vector<CirclePoint> partition_angles_from_json(const std::string& text);

std::string verify_report_to_json(const std::vector<CheckResult>& checks);

std::string cycle_reports_to_json(const std::vector<CycleReport>& reports);
std::string periodic_reports_to_json(const std::vector<PeriodicOrbitReport>& reports);

std::string domain_to_json(const RectangularDomain& dom);
std::string entry_stats_to_json(const EntryStats& stats);

struct MeasureReport {
    double K_closed = 0.0;
    double K_rect_sum = 0.0;
    double K_monte_carlo = 0.0;
    double mu_total = 0.0;
    double invariance_max_error = 0.0;
    std::uint64_t mc_samples = 0;
};

std::string measure_report_to_json(const MeasureReport& rep);

/// step,theta,side_index (the 1D boundary-map trace format)
std::string orbit_trace_to_csv(const OrbitTrace& trace);

struct Orbit2DRow {
    int step;
    CirclePoint x, y;
    int side;        // generator applied to reach this row (-1 on step 0)
    bool in_omega, in_psi;
};

/// step,x_theta,y_theta,side_index,in_omega,in_psi
std::string orbit2d_to_csv(const std::vector<Orbit2DRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bdlab
