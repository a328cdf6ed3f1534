#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/driver_model.hpp"
#include "growthlab/growth_engine.hpp"

namespace growthlab {

// A fully resolved scenario file: driver scenario plus growth calibration.
// gamma is the optional Cobb-Douglas cognitive share.
struct ScenarioDocument {
    ScenarioSpec spec;
    GrowthParams growth;
    std::optional<double> gamma;

    bool operator==(const ScenarioDocument&) const;
};

// Parses a scenario file. A `name` matching a built-in preset seeds the
// document with the preset's values before the remaining fields override
// them. Unknown keys, type mismatches, and out-of-range values are rejected
// with the offending field path. Throws ParseError.
ScenarioDocument parse_scenario(const std::string& text);

// Serializes every field explicitly; parse(serialize(doc)) == doc.
std::string serialize_scenario(const ScenarioDocument& doc);

// Assigns a scalar field by path, e.g. "growth.lambda", "drivers.algorithmic",
// "human_growth". Throws ParseError on unknown paths or bad values.
void set_by_path(ScenarioDocument& doc, const std::string& path, double value);

struct SweepAxis {
    std::string path;
    std::vector<double> values;
};

// Cartesian grid over up to 3 parameter paths. Combinations are capped to
// keep runs desk-scale.
struct SweepGrid {
    std::vector<SweepAxis> axes;

    std::size_t combinations() const;
    void validate() const;
};

inline constexpr std::size_t kMaxSweepCombinations = 100000;

struct SweepFile {
    ScenarioDocument base;
    SweepGrid grid;
};

// Sweep file schema: {"scenario": {...}, "grid": [{"path", "values"} |
// {"path", "min", "max", "count"}, ...]}.
SweepFile parse_sweep(const std::string& text);

} // namespace growthlab
