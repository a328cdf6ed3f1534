#include "growthlab/industrial_model.hpp"

#include <cmath>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

void require(bool ok, const char* path, const char* message) {
    if (!ok) throw ParseError(path, message);
}

} // namespace

void LearningCurve::validate() const {
    require(std::isfinite(learning_rate) && learning_rate >= 0.0 && learning_rate < 1.0,
            "learning_rate", "must be in [0, 1)");
    require(std::isfinite(base_cost) && base_cost > 0.0, "base_cost", "must be positive");
    require(std::isfinite(base_cumulative) && base_cumulative > 0.0, "base_cumulative",
            "must be positive");
}

void ReplicatorParams::validate() const {
    require(std::isfinite(production_period) && production_period > 0.0,
            "production_period", "must be positive");
    require(std::isfinite(reinvest_fraction) && reinvest_fraction > 0.0 &&
                reinvest_fraction <= 1.0,
            "reinvest_fraction", "must be in (0, 1]");
}

void RobotEconomics::validate() const {
    require(std::isfinite(unit_cost) && unit_cost > 0.0, "unit_cost", "must be positive");
    require(std::isfinite(replaced_salary) && replaced_salary >= 0.0, "replaced_salary",
            "must be nonnegative");
    require(std::isfinite(hours_multiple) && hours_multiple > 0.0, "hours_multiple",
            "must be positive");
    require(std::isfinite(operating_cost) && operating_cost >= 0.0, "operating_cost",
            "must be nonnegative");
}

void LeadRatioParams::validate() const {
    require(std::isfinite(exponent_n) && exponent_n >= 1.0, "exponent_n", "must be >= 1");
    require(std::isfinite(lead_c) && lead_c >= 0.0, "lead_c", "must be nonnegative");
    require(std::isfinite(time_t) && time_t >= 0.0, "time_t", "must be nonnegative");
}

double learning_cost_ratio(const LearningCurve& curve, double cumulative_multiplier) {
    curve.validate();
    require(std::isfinite(cumulative_multiplier) && cumulative_multiplier >= 1.0,
            "cumulative_multiplier", "must be at least 1");
    return std::pow(1.0 - curve.learning_rate, std::log2(cumulative_multiplier));
}

double replicator_doubling_time(const ReplicatorParams& params) {
    params.validate();
    return params.production_period * std::log(2.0) /
           std::log1p(params.reinvest_fraction);
}

RobotReturns robot_returns(const RobotEconomics& econ) {
    econ.validate();
    const double net_income = econ.gross_revenue() - econ.operating_cost;
    RobotReturns out;
    out.annual_return = net_income / econ.unit_cost;
    if (net_income > 0.0) out.payback_months = 12.0 * econ.unit_cost / net_income;
    return out;
}

double lead_ratio(const LeadRatioParams& params) {
    params.validate();
    return std::exp(std::pow(params.time_t + params.lead_c, params.exponent_n) -
                    std::pow(params.time_t, params.exponent_n));
}

double compound_growth(double rate, double years) {
    require(std::isfinite(rate) && rate > -1.0, "rate", "must exceed -1");
    require(std::isfinite(years), "years", "must be finite");
    return std::exp(years * std::log1p(rate));
}

} // namespace growthlab
