#pragma once

#include <string>

#include "growthlab/scenario_io.hpp"

namespace growthlab {

struct RunResult {
    ScenarioDocument doc;
    ResearcherSchedule schedule;
    Trajectory trajectory;
    DriverProjection projection;
    double step = kDefaultStep;

    double tech_multiplier() const { return trajectory.final_tech(); }
    double equivalent_years() const { return trajectory.final_equiv_years(); }
};

// Integrates the scenario's effort schedule through the growth engine.
// Deterministic: identical inputs produce byte-identical CSV and report text.
RunResult run_scenario(const ScenarioDocument& doc, double step = kDefaultStep);

// Fixed column order:
// year,effort_human,effort_ai,effort_total,tech_level,growth_rate,equiv_years
std::string trajectory_csv(const RunResult& result);

// Human-readable summary: headline results, driver totals, and the
// integration conventions the numbers depend on. Figures use 3 significant
// digits.
std::string report_text(const RunResult& result);

// Runs the grid's cartesian product over the base document. Rows are ordered
// lexicographically by grid index. Columns: one per swept path, then
// tech_multiplier and equiv_years.
std::string sweep_csv(const SweepFile& sweep, double step = kDefaultStep);

} // namespace growthlab
