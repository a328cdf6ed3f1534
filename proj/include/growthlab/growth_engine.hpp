#pragma once

#include <functional>
#include <vector>

namespace growthlab {

// Annual TFP growth of the default path (research effort growing 4%/yr).
// Used as the yardstick when converting technology ratios to equivalent years.
inline constexpr double kDefaultTfpGrowth = 0.0125;

// Default integrator step in years.
inline constexpr double kDefaultStep = 0.01;

// Idea production function  dA/A = alpha * S^lambda * A^(-beta).
// alpha is calibrated so S=1, A=1 sits on the 1.25%/yr default path.
struct GrowthParams {
    double alpha = 0.0125;  // productivity constant
    double lambda = 0.75;   // parallelism elasticity, in (0, 1]
    double beta = 2.4;      // fishing-out elasticity, > 0

    void validate() const;  // throws ParseError on violation
};

// Cobb-Douglas split of research effort into cognitive and physical inputs:
// S = C^gamma * P^(1-gamma). gamma = 1 collapses to the one-input model.
struct CognitivePhysicalSplit {
    double gamma = 0.7;     // cognitive-labour elasticity, in (0, 1]
    double cognitive = 1.0; // C, effort in human-researcher equivalents
    double physical = 1.0;  // P, physical labour + capital index

    void validate() const;
};

// Logarithmic-ideas variant  g_A = base_growth + theta * ln(effort multiplier),
// with theta calibrated so the elasticity of g_A w.r.t. S at the reference
// point equals `elasticity`. The reference TFP growth for this variant is
// 1.5%/yr, not the 1.25%/yr of the power-law default.
struct LogIdeasParams {
    double base_growth = 0.015;
    double elasticity = 0.75;

    double theta() const { return elasticity * base_growth; }
    void validate() const;
};

// Total research effort over time: an exponentially growing human component
// plus an optional AI component growing at a fixed annual multiplier.
// Units are normalized so the human component starts at 1. Internally all
// compounding is continuous: x^t is computed as exp(t * ln x).
struct ResearcherSchedule {
    double human_start = 1.0;
    double human_growth = 0.04;  // annual rate, so human(t) = (1+g)^t
    double ai_start = 0.0;       // 0 disables the AI term
    double ai_multiplier = 1.0;  // annual multiplier, ai(t) = ai_start * m^t

    double human(double t) const;
    double ai(double t) const;
    double total(double t) const;
    void validate() const;
};

// Integrated technology path on a uniform time grid. A(0) = 1 by convention.
struct Trajectory {
    std::vector<double> times;        // years from start
    std::vector<double> effort;       // S(t)
    std::vector<double> tech_level;   // A(t)
    std::vector<double> growth_rate;  // alpha * S^lambda * A^(-beta) at grid points
    std::vector<double> equiv_years;  // cumulative years of default-path progress

    double final_tech() const { return tech_level.back(); }
    double final_equiv_years() const { return equiv_years.back(); }
};

struct RequiredGrowthResult {
    double growth_rate;    // constant annual effort growth rate g
    double achieved_tech;  // A(horizon) when forward-simulating g
    double target_tech;    // (1 + default growth)^target_years
    int iterations;
};

// Steady-state technology growth lambda * g_S / beta for effort growing at
// continuous rate g_S per year.
double steady_state_growth(const GrowthParams& params, double effort_growth);

// alpha * S^lambda * A^(-beta). S and A must be positive.
double instantaneous_growth(const GrowthParams& params, double effort, double tech_level);

// Classical fixed-step fourth-order Runge-Kutta on
//   dA/dt = alpha * S(t)^lambda * A^(1-beta),  A(0) = 1.
// The grid is uniform at `step`; if step does not divide horizon the last
// step is shortened to land exactly on the horizon. Effort must be positive
// everywhere it is evaluated.
Trajectory integrate_trajectory(const GrowthParams& params,
                                const std::function<double(double)>& effort,
                                double horizon, double step = kDefaultStep,
                                double default_growth = kDefaultTfpGrowth);
Trajectory integrate_trajectory(const GrowthParams& params,
                                const ResearcherSchedule& schedule,
                                double horizon, double step = kDefaultStep,
                                double default_growth = kDefaultTfpGrowth);

// ln(tech_ratio) / ln(1 + default_growth). Requires tech_ratio >= 1;
// regress is not modeled.
double years_of_progress(double tech_ratio, double default_growth = kDefaultTfpGrowth);

// Bisection over a constant effort growth rate g such that S(t) = (1+g)^t
// from steady-state initial conditions yields A(horizon) equal to the
// technology level the default path reaches after target_years. Bracket is
// g in [0, 10]; converges to relative residual 1e-9 on A.
RequiredGrowthResult solve_required_growth(const GrowthParams& params,
                                           double target_years, double horizon,
                                           double step = kDefaultStep,
                                           double default_growth = kDefaultTfpGrowth);

// Instantaneous effort multiplier speedup^(1/lambda) needed to raise the
// rate of progress by `speedup` immediately (no steady-state delay).
double frontload_boost(const GrowthParams& params, double speedup);

// lambda * (gamma*g_C + (1-gamma)*g_P) / beta.
double cobb_douglas_steady_state(const GrowthParams& params,
                                 const CognitivePhysicalSplit& split,
                                 double cognitive_growth, double physical_growth);

// Additional cognitive multiplier speedup^(1/(gamma*lambda)) / speedup^(1/lambda)
// required when only cognitive inputs scale.
double cognitive_boost_factor(double lambda, double gamma, double speedup);

// base_growth + theta * ln(effort_multiplier).
double log_ideas_growth(const LogIdeasParams& params, double effort_multiplier);

} // namespace growthlab
