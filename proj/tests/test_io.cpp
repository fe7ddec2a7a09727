#include <doctest.h>

#include <json.hpp>

#include "boundarylab/json_io.hpp"
#include "boundarylab/svg.hpp"

using namespace bdlab;

TEST_CASE("fmt17 round-trips doubles exactly") {
    for (double v : {0.0, 1.0, std::numbers::pi, 0.1, 1e-17, 12345.6789e-3,
                     0.3747344267216625}) {
        CHECK(std::stod(fmt17(v)) == v);
        CHECK(std::stod(fmt17(-v)) == -v);
    }
}

TEST_CASE("geometry JSON is valid and carries the canonical field set") {
    const SurfaceGeometry geom = build_geometry(2);
    const std::string text = geometry_to_json(geom);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("g") == 2);
    CHECK(j.at("N") == 12);
    CHECK(j.at("P").size() == 12);
    CHECK(j.at("Q").size() == 12);
    CHECK(j.at("V").size() == 12);
    CHECK(j.at("generators").size() == 12);
    CHECK(j.at("sigma").size() == 12);
    // stable output
    CHECK(geometry_to_json(geom) == text);
}

TEST_CASE("partition file round trip with window validation") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    const auto angles = partition_angles_from_json(partition_to_json(part));
    REQUIRE(angles.size() == static_cast<std::size_t>(geom.N));
    const Partition back = partition_explicit(geom, angles);
    for (int i = 1; i <= geom.N; ++i) CHECK(back.A[i].theta == part.A[i].theta);

    // a bare JSON array works too
    const auto bare = partition_angles_from_json("[0.26,0.79,1.31,1.83,2.36,2.88,"
                                                 "3.40,3.93,4.45,4.97,5.50,6.02]");
    CHECK(bare.size() == 12);
}

TEST_CASE("cycle and verify reports serialize to valid JSON") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    std::vector<CycleReport> reps;
    for (int i = 1; i <= 3; ++i) reps.push_back(cycle_detect(geom, part, i));
    const nlohmann::json j = nlohmann::json::parse(cycle_reports_to_json(reps));
    CHECK(j.at("cycles").size() == 3);
    CHECK(j.at("cycles")[0].at("is_short") == true);
    CHECK(j.at("cycles")[0].at("m") == 1);

    const nlohmann::json v =
        nlohmann::json::parse(verify_report_to_json(verify_group_relations(geom, 1e-9).checks));
    CHECK(v.at("pass") == true);
}

TEST_CASE("orbit CSV formats") {
    const SurfaceGeometry geom = build_geometry(2);
    const Partition part = partition_midpoint(geom);
    const OrbitTrace tr = orbit(geom, part, normalize_angle(0.5), 5);
    const std::string csv = orbit_trace_to_csv(tr);
    CHECK(csv.rfind("step,theta,side_index\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7); // header + 6 rows

    std::vector<Orbit2DRow> rows{{0, normalize_angle(0.1), normalize_angle(2.0), -1, false, true}};
    const std::string csv2 = orbit2d_to_csv(rows);
    CHECK(csv2.rfind("step,x_theta,y_theta,side_index,in_omega,in_psi\n", 0) == 0);
    CHECK(csv2.find(",0,1\n") != std::string::npos);
}

TEST_CASE("SVG output is deterministic with the expected element counts") {
    const SurfaceGeometry geom = build_geometry(2);
    const std::string svg1 = plot_fundamental_domain(geom);
    const std::string svg2 = plot_fundamental_domain(geom);
    CHECK(svg1 == svg2);
    const auto count = [&](const std::string& hay, const std::string& needle) {
        int n = 0;
        for (std::size_t pos = hay.find(needle); pos != std::string::npos;
             pos = hay.find(needle, pos + 1))
            ++n;
        return n;
    };
    CHECK(count(svg1, "<polyline class=\"side\"") == 12);
    CHECK(count(svg1, "class=\"vertex\"") == 12);
    CHECK(count(svg1, ">P") == 12);
    CHECK(count(svg1, ">V") == 12);

    const Partition part = partition_midpoint(geom);
    const std::string torus = plot_torus_domain(build_omega_A(geom, part));
    CHECK(torus == plot_torus_domain(build_omega_A(geom, part)));
    // 36 pieces, some split at the wrap
    CHECK(count(torus, "<rect class=\"wide\"") >= 12);
    CHECK(count(torus, "<rect class=\"lower\"") >= 12);
    CHECK(count(torus, "<rect class=\"upper\"") >= 12);

    const std::string psi = plot_torus_domain(build_psi(geom, part));
    CHECK(count(psi, "<rect class=\"drect\"") >= 12);
}
