#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "growthlab/errors.hpp"
#include "growthlab/runner.hpp"
#include "growthlab/scenario_io.hpp"

using namespace growthlab;

TEST_CASE("a minimal file naming a preset is a passthrough") {
    const ScenarioDocument doc = parse_scenario(R"({"name": "conservative-post-parity"})");
    const ScenarioSpec preset = *find_preset("conservative-post-parity");
    CHECK(doc.spec.name == preset.name);
    CHECK(doc.spec.rates.inference_compute == preset.rates.inference_compute);
    CHECK(doc.spec.parity_at_start);
    CHECK(doc.growth.alpha == 0.0125);
    CHECK(doc.growth.lambda == 0.75);
    CHECK(doc.growth.beta == 2.4);
    CHECK_FALSE(doc.gamma.has_value());
}

TEST_CASE("overriding algorithmic=8 with software feedback reproduces the rapid scenario") {
    const ScenarioDocument doc = parse_scenario(R"({
        "name": "moderate",
        "drivers": {"algorithmic": 8},
        "feedback_mode": "software"
    })");
    CHECK(doc.spec.rates.algorithmic_efficiency == 8.0);
    CHECK(doc.spec.caps.algorithmic_total == 1e9);
    const DriverProjection proj = scenario_projection(doc.spec);
    const DriverProjection rapid = scenario_projection(*find_preset("rapid"));
    CHECK(proj.effort_total == rapid.effort_total);
    CHECK(proj.effort_total >= 1e17);
}

TEST_CASE("parse rejections carry the field path") {
    auto path_of = [](const std::string& text) {
        try {
            parse_scenario(text);
        } catch (const ParseError& e) {
            return e.path();
        }
        return std::string("(accepted)");
    };
    CHECK(path_of(R"({"drivers": {"training": 0.5}})") == "drivers.training");
    CHECK(path_of(R"({"drivers": {"trainingg": 2}})") == "drivers.trainingg");
    CHECK(path_of(R"({"nonsense": 1})") == "nonsense");
    CHECK(path_of(R"({"horizon_years": -2})") == "horizon_years");
    CHECK(path_of(R"({"horizon_years": "ten"})") == "horizon_years");
    CHECK(path_of(R"({"growth": {"lambda": 1.5}})") == "growth.lambda");
    CHECK(path_of(R"({"growth": {"gamma": 0}})") == "growth.gamma");
    CHECK(path_of(R"({"feedback_mode": "magic"})") == "feedback_mode");
    CHECK(path_of(R"({"parity_at_start": 3})") == "parity_at_start");
    CHECK(path_of(R"({"caps": {"training_total": 0.1}})") == "caps.training_total");
    CHECK_THROWS_AS(parse_scenario("not json at all"), ParseError);
}

TEST_CASE("defaults fill a custom scenario") {
    const ScenarioDocument doc = parse_scenario(R"({"name": "my-scenario"})");
    CHECK(doc.spec.horizon_years == 10.0);
    CHECK(doc.spec.rates.training_compute == 4.5);
    CHECK(doc.spec.caps.training_total == 1e4);
    CHECK(doc.spec.human_growth == 0.04);
    CHECK_FALSE(doc.spec.parity_at_start);
}

TEST_CASE("round-trip: parse(serialize(doc)) == doc for every preset") {
    for (const auto& name : preset_names()) {
        ScenarioDocument doc;
        doc.spec = *find_preset(name);
        CHECK(parse_scenario(serialize_scenario(doc)) == doc);
    }
    // And for a customized document with gamma present.
    ScenarioDocument doc;
    doc.spec = *find_preset("rapid");
    doc.gamma = 0.7;
    set_by_path(doc, "growth.beta", 3.1);
    set_by_path(doc, "drivers.post_training", 2.0);
    CHECK(parse_scenario(serialize_scenario(doc)) == doc);
}

TEST_CASE("serialization is deterministic") {
    ScenarioDocument doc;
    doc.spec = *find_preset("scaling-limits");
    CHECK(serialize_scenario(doc) == serialize_scenario(doc));
}

TEST_CASE("set_by_path covers the sweepable fields and rejects unknowns") {
    ScenarioDocument doc;
    set_by_path(doc, "growth.lambda", 0.5);
    set_by_path(doc, "drivers.inference_compute", 3.0);
    set_by_path(doc, "caps.inference_total", 1e6);
    set_by_path(doc, "human_growth", 0.02);
    CHECK(doc.growth.lambda == 0.5);
    CHECK(doc.spec.rates.inference_compute == 3.0);
    CHECK(doc.spec.caps.inference_total == 1e6);
    CHECK(doc.spec.human_growth == 0.02);
    CHECK_THROWS_AS(set_by_path(doc, "drivers.warp", 2.0), ParseError);
}

TEST_CASE("run_scenario: conservative post-parity headline") {
    ScenarioDocument doc;
    doc.spec = *find_preset("conservative-post-parity");
    const RunResult run = run_scenario(doc);
    CHECK(run.tech_multiplier() == doctest::Approx(32.7895).epsilon(1e-4));
    CHECK(run.equivalent_years() == doctest::Approx(280.95).epsilon(1e-4));

    const std::string report = report_text(run);
    CHECK(report.find("conservative-post-parity") != std::string::npos);
    // The integration conventions are recorded in the report.
    CHECK(report.find("Runge-Kutta") != std::string::npos);
    CHECK(report.find("parity at start") != std::string::npos);
    CHECK(report.find("equivalent years") != std::string::npos);
}

TEST_CASE("run_scenario: a file-specified gamma shows up in the report") {
    const ScenarioDocument doc = parse_scenario(R"({
        "name": "conservative-post-parity",
        "growth": {"gamma": 0.7}
    })");
    REQUIRE(doc.gamma.has_value());
    const std::string report = report_text(run_scenario(doc));
    CHECK(report.find("gamma 0.7") != std::string::npos);
}

TEST_CASE("run_scenario: trend scenarios keep technology on the default path") {
    ScenarioDocument doc;
    doc.spec = *find_preset("moderate");
    const RunResult run = run_scenario(doc);
    // No parity, no AI feedback into technology: a decade stays a decade.
    CHECK(run.tech_multiplier() == doctest::Approx(std::pow(1.0125, 10.0)).epsilon(1e-3));
    CHECK(run.equivalent_years() == doctest::Approx(10.0).epsilon(5e-3));
    // Driver totals still report the stated decade products.
    CHECK(run.projection.effort_total == 1e11);
}

TEST_CASE("trajectory CSV has the fixed column order and grid") {
    ScenarioDocument doc;
    doc.spec = *find_preset("conservative-post-parity");
    const RunResult run = run_scenario(doc, 0.5);
    const std::string csv = trajectory_csv(run);
    CHECK(csv.rfind("year,effort_human,effort_ai,effort_total,tech_level,growth_rate,"
                    "equiv_years\n",
                    0) == 0);
    std::size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 22);  // header + 21 grid points
    CHECK(csv.find("\n0,1,1,2,1,") != std::string::npos);  // t=0 row starts on parity
}

TEST_CASE("byte-identical outputs across repeated runs") {
    ScenarioDocument doc;
    doc.spec = *find_preset("aggressive-post-parity");
    const RunResult a = run_scenario(doc);
    const RunResult b = run_scenario(doc);
    CHECK(trajectory_csv(a) == trajectory_csv(b));
    CHECK(report_text(a) == report_text(b));
}

TEST_CASE("sweep: lambda x beta grid is ordered and monotone") {
    const SweepFile sweep = parse_sweep(R"({
        "scenario": {"name": "conservative-post-parity"},
        "grid": [
            {"path": "growth.lambda", "values": [0.5, 0.75, 1.0]},
            {"path": "growth.beta", "values": [2.4, 3.1]}
        ]
    })");
    CHECK(sweep.grid.combinations() == 6);
    const std::string csv = sweep_csv(sweep);

    // Parse the CSV back into rows of (lambda, beta, tech, years).
    std::vector<std::array<double, 4>> rows;
    std::istringstream stream(csv);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "growth.lambda,growth.beta,tech_multiplier,equiv_years");
    while (std::getline(stream, line)) {
        std::array<double, 4> row{};
        std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &row[0], &row[1], &row[2], &row[3]);
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 6);
    // Lexicographic by grid index: lambda major, beta minor.
    CHECK(rows[0][0] == 0.5);
    CHECK(rows[0][1] == 2.4);
    CHECK(rows[1][1] == 3.1);
    CHECK(rows[2][0] == 0.75);
    // Years of progress increase in lambda at fixed beta, decrease in beta.
    CHECK(rows[2][3] > rows[0][3]);
    CHECK(rows[4][3] > rows[2][3]);
    CHECK(rows[1][3] < rows[0][3]);
    CHECK(rows[3][3] < rows[2][3]);
}

TEST_CASE("sweep: a single-point grid matches run_scenario") {
    const SweepFile sweep = parse_sweep(R"({
        "scenario": {"name": "conservative-post-parity"},
        "grid": [{"path": "growth.beta", "values": [2.4]}]
    })");
    const std::string csv = sweep_csv(sweep);
    ScenarioDocument doc;
    doc.spec = *find_preset("conservative-post-parity");
    const RunResult run = run_scenario(doc);
    char expected[128];
    std::snprintf(expected, sizeof expected, "2.4,%.12g,%.12g\n", run.tech_multiplier(),
                  run.equivalent_years());
    CHECK(csv.find(expected) != std::string::npos);
}

TEST_CASE("sweep: halved post-parity effort growth still clears a century") {
    // 2.5x/yr is half the conservative 5x/yr in log terms.
    const SweepFile sweep = parse_sweep(R"({
        "scenario": {"name": "conservative-post-parity"},
        "grid": [{"path": "drivers.inference_efficiency", "values": [1.25, 2.5]}]
    })");
    const std::string csv = sweep_csv(sweep);
    std::istringstream stream(csv);
    std::string line;
    std::getline(stream, line);
    std::vector<double> years;
    while (std::getline(stream, line)) {
        double v = 0, tech = 0, yr = 0;
        std::sscanf(line.c_str(), "%lf,%lf,%lf", &v, &tech, &yr);
        years.push_back(yr);
    }
    REQUIRE(years.size() == 2);
    // With inference_compute at 2x, efficiency 1.25 gives m_ai = 2.5x/yr and
    // efficiency 2.5 restores the preset's 5x/yr.
    CHECK(years[0] >= 100.0);
    CHECK(years[1] >= 280.0);
}

TEST_CASE("sweep: range axes and limits") {
    const SweepFile sweep = parse_sweep(R"({
        "scenario": {"name": "current"},
        "grid": [{"path": "growth.beta", "min": 2.0, "max": 3.0, "count": 5}]
    })");
    REQUIRE(sweep.grid.axes.size() == 1);
    const auto& values = sweep.grid.axes[0].values;
    REQUIRE(values.size() == 5);
    CHECK(values.front() == 2.0);
    CHECK(values.back() == 3.0);
    CHECK(values[2] == doctest::Approx(2.5).epsilon(1e-15));

    CHECK_THROWS_AS(parse_sweep(R"({
        "scenario": {"name": "current"},
        "grid": [
            {"path": "growth.beta", "min": 2, "max": 3, "count": 100},
            {"path": "growth.lambda", "min": 0.1, "max": 1.0, "count": 100},
            {"path": "human_growth", "min": 0.0, "max": 0.1, "count": 100}
        ]
    })"),
                    ParseError);
    CHECK_THROWS_AS(parse_sweep(R"({
        "scenario": {"name": "current"},
        "grid": [{"path": "growth.nope", "values": [1]}]
    })"),
                    ParseError);
    CHECK_THROWS_AS(parse_sweep(R"({"grid": []})"), ParseError);
}
