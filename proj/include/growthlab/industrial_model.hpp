#pragma once

#include <optional>

namespace growthlab {

// Wright's-law experience curve: cost falls by `learning_rate` with every
// doubling of cumulative production.
struct LearningCurve {
    double learning_rate = 0.2;    // fractional decline per doubling, in [0, 1)
    double base_cost = 1.0;        // currency units at the reference point
    double base_cumulative = 1.0;  // units produced at the reference point

    void validate() const;
};

// Self-replicating factory stock: each unit takes `production_period` years
// to produce one unit, and `reinvest_fraction` of the stock produces more
// stock, so the stock grows (1 + f) per period.
struct ReplicatorParams {
    double production_period = 2.0;
    double reinvest_fraction = 0.75;  // in (0, 1]

    void validate() const;
};

struct RobotEconomics {
    double unit_cost = 100000.0;       // currency
    double replaced_salary = 50000.0;  // currency per year
    double hours_multiple = 5.0;       // robot hours vs a 40 h/week employee
    double operating_cost = 25000.0;   // currency per year

    void validate() const;
    double gross_revenue() const { return replaced_salary * hours_multiple; }
};

struct RobotReturns {
    double annual_return = 0.0;            // fraction of unit cost per year
    std::optional<double> payback_months;  // absent when net income <= 0
};

// Super-exponential economies E(t) = e^(t^n); a head start of c on the same
// curve gives the leader a ratio R(t) = exp((t+c)^n - t^n) over the laggard.
struct LeadRatioParams {
    double exponent_n = 2.0;  // n >= 1
    double lead_c = 1.0;      // head start, same units as t
    double time_t = 1.0;

    void validate() const;
};

// (1 - LR)^(log2(cumulative_multiplier)); fractional doublings allowed.
double learning_cost_ratio(const LearningCurve& curve, double cumulative_multiplier);

// production_period * ln(2) / ln(1 + reinvest_fraction).
double replicator_doubling_time(const ReplicatorParams& params);

// annual_return = (salary * hours_multiple - operating_cost) / unit_cost;
// payback = 12 * unit_cost / net annual income, absent when income <= 0.
RobotReturns robot_returns(const RobotEconomics& econ);

// exp((t+c)^n - t^n). Constant e^c when n = 1.
double lead_ratio(const LeadRatioParams& params);

// (1 + rate)^years. Requires rate > -1.
double compound_growth(double rate, double years);

} // namespace growthlab
