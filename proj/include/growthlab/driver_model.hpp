#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/growth_engine.hpp"

namespace growthlab {

// Annual multipliers for the growth drivers of AI research effort.
// Declines are out of scope, so every multiplier is >= 1.
struct DriverRates {
    double training_compute = 4.5;
    double algorithmic_efficiency = 3.0;
    double post_training = 3.0;
    double inference_compute = 2.5;
    double inference_efficiency = 10.0;

    void validate() const;
    static DriverRates current_trends() { return {}; }
    static DriverRates all_ones() { return {1.0, 1.0, 1.0, 1.0, 1.0}; }
};

// Maximum cumulative multipliers before physical limits bind. The
// algorithmic cap rises from 1e3 to 1e9 under a software feedback loop.
struct HeadroomCaps {
    double training_total = 1e4;
    double algorithmic_total = 1e3;
    double inference_total = 1e4;

    void validate() const;
    static HeadroomCaps unlimited();
};

inline constexpr double kSoftwareFeedbackAlgorithmicCap = 1e9;

enum class FeedbackMode { none, software };

struct ScenarioSpec {
    std::string name;
    double horizon_years = 10.0;
    DriverRates rates;
    HeadroomCaps caps;
    double human_growth = 0.04;  // annual rate
    FeedbackMode feedback_mode = FeedbackMode::none;
    bool parity_at_start = false;  // AI effort equals human effort at t = 0

    void validate() const;
};

// Built-in scenarios addressable by name:
//   current, moderate, rapid, scaling-limits,
//   conservative-post-parity, aggressive-post-parity
std::optional<ScenarioSpec> find_preset(std::string_view name);
std::vector<std::string> preset_names();

// One driver's decade totals after continuous-time cap clipping.
struct DriverTotal {
    double total = 1.0;                 // cumulative multiplier over the horizon
    std::optional<double> cap_year;     // year the cap binds, when it does
};

struct DriverProjection {
    DriverTotal training;
    DriverTotal algorithmic;
    DriverTotal inference;
    double effort_total = 1.0;    // training x algorithmic x inference totals
    double average_annual = 1.0;  // effort_total^(1/horizon)
};

// Effective training compute growth: training x algorithmic
// (x post-training when flagged).
double effective_compute_growth(const DriverRates& rates, bool include_post_training);

// Growth in the AI researcher population: inference efficiency x inference compute.
double ai_effort_growth(const DriverRates& rates);

// (ai_annual_multiplier - 1) / human_growth, the arithmetic-percentage
// convention for "N times faster".
double relative_speed(double ai_annual_multiplier, double human_growth);

// Each driver compounds at its annual rate until its cumulative cap binds
// (a driver at rate r reaches cap at t* = ln(cap)/ln(r), pro-rated within a
// year) and holds thereafter. Inference efficiency over the horizon is fed
// from effective compute, so the effort total is the product of the capped
// training, algorithmic, and inference-compute totals.
DriverProjection scenario_projection(const ScenarioSpec& spec);

// Square-root trade between training and runtime efficiency: a 4x increase
// in effective training compute buys a 2x inference efficiency gain.
double inference_efficiency_from_training(double effective_training_multiplier);

// Total effort path S(t) = (1+human_growth)^t + ai0 * m_ai^t, with ai0 = 1
// when the scenario starts at parity and 0 otherwise. m_ai comes from
// ai_effort_growth on the scenario's rates.
ResearcherSchedule effort_schedule(const ScenarioSpec& spec);

struct ComputeBridge {
    double low = 1.0;
    double high = 1.0;
};

// Effective-compute range [raw*algo_low, raw*algo_high] x post_training.
ComputeBridge effective_compute_bridge(double raw_compute_ratio, double algo_low,
                                       double algo_high, double post_training = 1.0);

// Years until task horizons grow from start to target given a fixed doubling
// time in months: (doubling_months/12) * log2(target/start).
double task_horizon_years(double doubling_months, double start_horizon,
                          double target_horizon);

// Algorithmic efficiency headroom implied by a compute scale-up, assuming the
// historical ratio of efficiency gains to compute growth holds:
// algo_rate^(ln(compute_headroom)/ln(compute_rate)).
double implied_algorithmic_headroom(double compute_headroom, double compute_rate,
                                    double algo_rate);

// ---------------------------------------------------------------------------
// Stated scenario-table figures, kept verbatim as reference data. Derived
// numbers (compounded totals, computed relative speeds) come from the
// operations above; these rows are what the projection tables state.

struct TableEntry {
    const char* scenario;
    const char* driver;
    double annual_rate;   // stated annual multiplier (0 when unstated)
    double decade_total;  // stated cumulative multiplier (0 when unstated)
    bool lower_bound;     // stated as ">= x"
};

std::span<const TableEntry> pre_parity_table();
std::span<const TableEntry> post_parity_table();

// The table's stated annual effort multiplier for a preset (e.g. 12 for
// moderate, 50 for rapid), used by reports and reference checks.
std::optional<double> stated_effort_rate(std::string_view preset);

} // namespace growthlab
