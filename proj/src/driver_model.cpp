#include "growthlab/driver_model.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

void require(bool ok, const char* path, const char* message) {
    if (!ok) throw ParseError(path, message);
}

bool valid_multiplier(double x) { return std::isfinite(x) && x >= 1.0; }
bool valid_cap(double x) { return x >= 1.0 && !std::isnan(x); }  // +inf allowed

// A cumulative total counts as having reached its cap when it lands within
// relative 1e-9; caps stated as round decade totals (e.g. 1e4 from a
// 10^0.4/yr rate) must clip exactly rather than miss by an ulp.
constexpr double kCapSlack = 1e-9;

DriverTotal compound_with_cap(double rate, double cap, double horizon) {
    DriverTotal out;
    if (horizon == 0.0 || rate == 1.0) {
        out.total = 1.0;
        return out;
    }
    const double uncapped = std::pow(rate, horizon);
    if (uncapped >= cap * (1.0 - kCapSlack)) {
        out.total = cap;
        out.cap_year = std::min(horizon, std::log(cap) / std::log(rate));
    } else {
        out.total = uncapped;
    }
    return out;
}

// Scenario-table rows as stated: (scenario, driver, annual rate, decade total).
// Zeros mark cells the tables leave blank.
constexpr std::array<TableEntry, 15> kPreParity = {{
    {"current", "training_compute", 4.5, 0, false},
    {"current", "algorithmic_efficiency", 3.0, 0, false},
    {"current", "inference_compute", 2.5, 0, false},
    {"current", "ai_research_effort", 25.0, 0, true},
    {"current", "relative_speed", 600.0, 0, true},
    {"moderate", "training_compute", 2.5, 1e4, false},
    {"moderate", "algorithmic_efficiency", 2.0, 1e3, false},
    {"moderate", "inference_compute", 2.5, 1e4, false},
    {"moderate", "ai_research_effort", 12.0, 1e11, true},
    {"moderate", "relative_speed", 300.0, 0, true},
    {"rapid", "training_compute", 2.5, 1e4, false},
    {"rapid", "algorithmic_efficiency", 8.0, 1e9, false},
    {"rapid", "inference_compute", 2.5, 1e4, false},
    {"rapid", "ai_research_effort", 50.0, 1e17, true},
    {"rapid", "relative_speed", 1000.0, 0, true},
}};

constexpr std::array<TableEntry, 10> kPostParity = {{
    {"conservative-post-parity", "training_compute", 1.0, 1.0, false},
    {"conservative-post-parity", "algorithmic_efficiency", 2.5, 1e4, false},
    {"conservative-post-parity", "inference_compute", 2.0, 1e3, false},
    {"conservative-post-parity", "ai_research_effort", 5.0, 1e7, false},
    {"conservative-post-parity", "relative_speed", 100.0, 0, false},
    {"aggressive-post-parity", "training_compute", 2.0, 1e3, false},
    {"aggressive-post-parity", "algorithmic_efficiency", 5.0, 1e7, false},
    {"aggressive-post-parity", "inference_compute", 2.5, 1e4, false},
    {"aggressive-post-parity", "ai_research_effort", 25.0, 1e14, false},
    {"aggressive-post-parity", "relative_speed", 600.0, 0, false},
}};

} // namespace

void DriverRates::validate() const {
    require(valid_multiplier(training_compute), "drivers.training", "must be >= 1");
    require(valid_multiplier(algorithmic_efficiency), "drivers.algorithmic", "must be >= 1");
    require(valid_multiplier(post_training), "drivers.post_training", "must be >= 1");
    require(valid_multiplier(inference_compute), "drivers.inference_compute", "must be >= 1");
    require(valid_multiplier(inference_efficiency), "drivers.inference_efficiency",
            "must be >= 1");
}

void HeadroomCaps::validate() const {
    require(valid_cap(training_total), "caps.training_total", "must be >= 1");
    require(valid_cap(algorithmic_total), "caps.algorithmic_total", "must be >= 1");
    require(valid_cap(inference_total), "caps.inference_total", "must be >= 1");
}

HeadroomCaps HeadroomCaps::unlimited() {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, inf};
}

void ScenarioSpec::validate() const {
    require(std::isfinite(horizon_years) && horizon_years >= 0.0, "horizon_years",
            "must be nonnegative");
    rates.validate();
    caps.validate();
    require(std::isfinite(human_growth) && human_growth >= 0.0, "human_growth",
            "must be nonnegative");
}

std::optional<ScenarioSpec> find_preset(std::string_view name) {
    // Table scenarios defined by decade totals carry the cap-exhausting rate
    // (total^(1/10), e.g. 10^0.4 for "2.5x/yr, 10,000x total") so the stated
    // decade products come out exact.
    const double r4 = std::pow(10.0, 0.4);  // 10,000x over a decade
    const double r3 = std::pow(10.0, 0.3);  // 1,000x over a decade

    ScenarioSpec spec;
    if (name == "current") {
        spec.name = "current";
        return spec;
    }
    if (name == "moderate") {
        spec.name = "moderate";
        spec.rates = {r4, r3, 1.0, r4, 5.0};
        return spec;
    }
    if (name == "rapid") {
        spec.name = "rapid";
        spec.rates = {r4, 8.0, 1.0, r4, 20.0};
        spec.caps.algorithmic_total = kSoftwareFeedbackAlgorithmicCap;
        spec.feedback_mode = FeedbackMode::software;
        return spec;
    }
    if (name == "scaling-limits") {
        spec.name = "scaling-limits";
        spec.rates = {4.5, 3.0, 3.0, r4, 10.0};
        return spec;
    }
    if (name == "conservative-post-parity") {
        spec.name = "conservative-post-parity";
        spec.rates = {1.0, 2.5, 1.0, 2.0, 2.5};
        spec.caps = {1e4, 1e4, 1e3};  // training holds at 1x regardless
        spec.parity_at_start = true;
        return spec;
    }
    if (name == "aggressive-post-parity") {
        spec.name = "aggressive-post-parity";
        spec.rates = {2.0, 5.0, 1.0, 2.5, 10.0};
        spec.caps = {1e3, 1e7, 1e4};
        spec.feedback_mode = FeedbackMode::software;
        spec.parity_at_start = true;
        return spec;
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"current",        "moderate",
            "rapid",          "scaling-limits",
            "conservative-post-parity", "aggressive-post-parity"};
}

double effective_compute_growth(const DriverRates& rates, bool include_post_training) {
    rates.validate();
    double growth = rates.training_compute * rates.algorithmic_efficiency;
    if (include_post_training) growth *= rates.post_training;
    return growth;
}

double ai_effort_growth(const DriverRates& rates) {
    rates.validate();
    return rates.inference_efficiency * rates.inference_compute;
}

double relative_speed(double ai_annual_multiplier, double human_growth) {
    require(valid_multiplier(ai_annual_multiplier), "ai_annual_multiplier", "must be >= 1");
    require(std::isfinite(human_growth) && human_growth > 0.0, "human_growth",
            "must be positive");
    return (ai_annual_multiplier - 1.0) / human_growth;
}

DriverProjection scenario_projection(const ScenarioSpec& spec) {
    spec.validate();
    DriverProjection proj;
    proj.training =
        compound_with_cap(spec.rates.training_compute, spec.caps.training_total,
                          spec.horizon_years);
    proj.algorithmic =
        compound_with_cap(spec.rates.algorithmic_efficiency, spec.caps.algorithmic_total,
                          spec.horizon_years);
    proj.inference =
        compound_with_cap(spec.rates.inference_compute, spec.caps.inference_total,
                          spec.horizon_years);
    proj.effort_total =
        proj.training.total * proj.algorithmic.total * proj.inference.total;
    proj.average_annual = spec.horizon_years > 0.0
                              ? std::pow(proj.effort_total, 1.0 / spec.horizon_years)
                              : 1.0;
    return proj;
}

double inference_efficiency_from_training(double effective_training_multiplier) {
    require(valid_multiplier(effective_training_multiplier),
            "effective_training_multiplier", "must be >= 1");
    return std::sqrt(effective_training_multiplier);
}

ResearcherSchedule effort_schedule(const ScenarioSpec& spec) {
    spec.validate();
    ResearcherSchedule sched;
    sched.human_start = 1.0;
    sched.human_growth = spec.human_growth;
    sched.ai_start = spec.parity_at_start ? 1.0 : 0.0;
    sched.ai_multiplier = ai_effort_growth(spec.rates);
    return sched;
}

ComputeBridge effective_compute_bridge(double raw_compute_ratio, double algo_low,
                                       double algo_high, double post_training) {
    require(valid_multiplier(raw_compute_ratio), "raw_compute_ratio", "must be >= 1");
    require(valid_multiplier(algo_low), "algo_low", "must be >= 1");
    require(std::isfinite(algo_high) && algo_high >= algo_low, "algo_high",
            "must be >= algo_low");
    require(valid_multiplier(post_training), "post_training", "must be >= 1");
    return {raw_compute_ratio * algo_low * post_training,
            raw_compute_ratio * algo_high * post_training};
}

double task_horizon_years(double doubling_months, double start_horizon,
                          double target_horizon) {
    require(std::isfinite(doubling_months) && doubling_months > 0.0, "doubling_months",
            "must be positive");
    require(std::isfinite(start_horizon) && start_horizon > 0.0, "start_horizon",
            "must be positive");
    require(std::isfinite(target_horizon) && target_horizon >= start_horizon,
            "target_horizon", "must be >= start_horizon");
    return doubling_months / 12.0 * std::log2(target_horizon / start_horizon);
}

double implied_algorithmic_headroom(double compute_headroom, double compute_rate,
                                    double algo_rate) {
    require(valid_multiplier(compute_headroom), "compute_headroom", "must be >= 1");
    require(std::isfinite(compute_rate) && compute_rate > 1.0, "compute_rate",
            "must exceed 1");
    require(valid_multiplier(algo_rate), "algo_rate", "must be >= 1");
    return std::pow(algo_rate, std::log(compute_headroom) / std::log(compute_rate));
}

std::span<const TableEntry> pre_parity_table() { return kPreParity; }
std::span<const TableEntry> post_parity_table() { return kPostParity; }

std::optional<double> stated_effort_rate(std::string_view preset) {
    for (const auto& row : kPreParity)
        if (preset == row.scenario && std::string_view(row.driver) == "ai_research_effort")
            return row.annual_rate;
    for (const auto& row : kPostParity)
        if (preset == row.scenario && std::string_view(row.driver) == "ai_research_effort")
            return row.annual_rate;
    return std::nullopt;
}

} // namespace growthlab
