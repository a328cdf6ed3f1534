#include "growthlab/growth_engine.hpp"

#include <cmath>
#include <cstdio>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

void require(bool ok, const char* path, const char* message) {
    if (!ok) throw ParseError(path, message);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

void GrowthParams::validate() const {
    require(finite_positive(alpha), "growth.alpha", "must be positive");
    require(std::isfinite(lambda) && lambda > 0.0 && lambda <= 1.0,
            "growth.lambda", "must be in (0, 1]");
    require(finite_positive(beta), "growth.beta", "must be positive");
}

void CognitivePhysicalSplit::validate() const {
    require(std::isfinite(gamma) && gamma > 0.0 && gamma <= 1.0,
            "split.gamma", "must be in (0, 1]");
    require(finite_positive(cognitive), "split.cognitive", "must be positive");
    require(finite_positive(physical), "split.physical", "must be positive");
}

void LogIdeasParams::validate() const {
    require(std::isfinite(base_growth) && base_growth >= 0.0,
            "log_ideas.base_growth", "must be nonnegative");
    require(std::isfinite(elasticity) && elasticity > 0.0 && elasticity <= 1.0,
            "log_ideas.elasticity", "must be in (0, 1]");
}

double ResearcherSchedule::human(double t) const {
    return human_start * std::exp(t * std::log1p(human_growth));
}

double ResearcherSchedule::ai(double t) const {
    if (ai_start == 0.0) return 0.0;
    return ai_start * std::exp(t * std::log(ai_multiplier));
}

double ResearcherSchedule::total(double t) const { return human(t) + ai(t); }

void ResearcherSchedule::validate() const {
    require(finite_positive(human_start), "schedule.human_start", "must be positive");
    require(std::isfinite(human_growth) && human_growth > -1.0,
            "schedule.human_growth", "must exceed -1");
    require(std::isfinite(ai_start) && ai_start >= 0.0,
            "schedule.ai_start", "must be nonnegative");
    require(finite_positive(ai_multiplier), "schedule.ai_multiplier", "must be positive");
}

double steady_state_growth(const GrowthParams& params, double effort_growth) {
    params.validate();
    if (!(std::isfinite(effort_growth) && effort_growth >= 0.0))
        throw ParseError("effort_growth", "must be a nonnegative rate per year");
    return params.lambda * effort_growth / params.beta;
}

double instantaneous_growth(const GrowthParams& params, double effort, double tech_level) {
    params.validate();
    if (!finite_positive(effort)) throw ParseError("effort", "must be positive");
    if (!finite_positive(tech_level)) throw ParseError("tech_level", "must be positive");
    return params.alpha * std::pow(effort, params.lambda) * std::pow(tech_level, -params.beta);
}

Trajectory integrate_trajectory(const GrowthParams& params,
                                const std::function<double(double)>& effort,
                                double horizon, double step, double default_growth) {
    params.validate();
    if (!finite_positive(horizon)) throw ParseError("horizon", "must be positive");
    if (!finite_positive(step)) throw ParseError("step", "must be positive");
    if (step > horizon) throw ParseError("step", "must not exceed the horizon");
    if (!finite_positive(default_growth))
        throw ParseError("default_growth", "must be positive");

    const double alpha = params.alpha;
    const double lam = params.lambda;
    const double one_minus_beta = 1.0 - params.beta;

    auto effort_at = [&](double t) {
        double s = effort(t);
        if (!finite_positive(s)) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "effort is non-positive at t=%.6g", t);
            throw ParseError("schedule", buf);
        }
        return s;
    };
    auto deriv = [&](double t, double a) {
        return alpha * std::pow(effort_at(t), lam) * std::pow(a, one_minus_beta);
    };

    // Number of full steps; a shortened final step lands exactly on the horizon.
    auto n_full = static_cast<std::size_t>(std::floor(horizon / step + 1e-12));
    double remainder = horizon - static_cast<double>(n_full) * step;
    if (remainder < 1e-12 * horizon) remainder = 0.0;
    const std::size_t n = n_full + (remainder > 0.0 ? 1 : 0);

    Trajectory traj;
    traj.times.reserve(n + 1);
    traj.effort.reserve(n + 1);
    traj.tech_level.reserve(n + 1);
    traj.growth_rate.reserve(n + 1);
    traj.equiv_years.reserve(n + 1);

    const double log_default = std::log1p(default_growth);
    double a = 1.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = (i == n) ? horizon : static_cast<double>(i) * step;
        const double s = effort_at(t);
        traj.times.push_back(t);
        traj.effort.push_back(s);
        traj.tech_level.push_back(a);
        traj.growth_rate.push_back(alpha * std::pow(s, lam) * std::pow(a, -params.beta));
        traj.equiv_years.push_back(std::log(a) / log_default);
        if (i == n) break;

        const double h = (i == n_full) ? remainder : step;
        const double k1 = deriv(t, a);
        const double k2 = deriv(t + 0.5 * h, a + 0.5 * h * k1);
        const double k3 = deriv(t + 0.5 * h, a + 0.5 * h * k2);
        const double k4 = deriv(t + h, a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return traj;
}

Trajectory integrate_trajectory(const GrowthParams& params,
                                const ResearcherSchedule& schedule,
                                double horizon, double step, double default_growth) {
    schedule.validate();
    return integrate_trajectory(
        params, [&schedule](double t) { return schedule.total(t); }, horizon, step,
        default_growth);
}

double years_of_progress(double tech_ratio, double default_growth) {
    if (!(std::isfinite(tech_ratio) && tech_ratio >= 1.0))
        throw ParseError("tech_ratio", "must be >= 1 (regress is not modeled)");
    if (!finite_positive(default_growth))
        throw ParseError("default_growth", "must be positive");
    return std::log(tech_ratio) / std::log1p(default_growth);
}

RequiredGrowthResult solve_required_growth(const GrowthParams& params,
                                           double target_years, double horizon,
                                           double step, double default_growth) {
    params.validate();
    if (!finite_positive(horizon)) throw ParseError("horizon", "must be positive");
    if (!(std::isfinite(target_years) && target_years >= horizon))
        throw ParseError("target_years", "must be at least the horizon");

    const double target = std::exp(target_years * std::log1p(default_growth));
    auto tech_at = [&](double g) {
        ResearcherSchedule sched{1.0, g, 0.0, 1.0};
        return integrate_trajectory(params, sched, horizon, step, default_growth)
            .final_tech();
    };

    double lo = 0.0, hi = 10.0;
    double f_lo = tech_at(lo), f_hi = tech_at(hi);
    if (target < f_lo) throw ParseError("target_years", "below the zero-growth path");
    if (target > f_hi)
        throw SolveError("required growth exceeds the bisection bracket [0, 10]");

    const int max_iter = 200;
    double mid = 0.0, achieved = f_lo;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        mid = 0.5 * (lo + hi);
        achieved = tech_at(mid);
        const double residual = (achieved - target) / target;
        if (std::fabs(residual) <= 1e-9) break;
        if (achieved < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14) break;
    }
    if (std::fabs((achieved - target) / target) > 1e-6)
        throw SolveError("bisection failed to converge on the target technology level");
    return {mid, achieved, target, iter + 1};
}

double frontload_boost(const GrowthParams& params, double speedup) {
    params.validate();
    if (!(std::isfinite(speedup) && speedup > 1.0))
        throw ParseError("speedup", "must exceed 1");
    return std::pow(speedup, 1.0 / params.lambda);
}

double cobb_douglas_steady_state(const GrowthParams& params,
                                 const CognitivePhysicalSplit& split,
                                 double cognitive_growth, double physical_growth) {
    params.validate();
    split.validate();
    if (!(std::isfinite(cognitive_growth) && cognitive_growth >= 0.0))
        throw ParseError("cognitive_growth", "must be nonnegative");
    if (!(std::isfinite(physical_growth) && physical_growth >= 0.0))
        throw ParseError("physical_growth", "must be nonnegative");
    return params.lambda *
           (split.gamma * cognitive_growth + (1.0 - split.gamma) * physical_growth) /
           params.beta;
}

double cognitive_boost_factor(double lambda, double gamma, double speedup) {
    if (!(std::isfinite(lambda) && lambda > 0.0 && lambda <= 1.0))
        throw ParseError("lambda", "must be in (0, 1]");
    if (!(std::isfinite(gamma) && gamma > 0.0 && gamma <= 1.0))
        throw ParseError("gamma", "must be in (0, 1]");
    if (!(std::isfinite(speedup) && speedup > 1.0))
        throw ParseError("speedup", "must exceed 1");
    return std::pow(speedup, 1.0 / (gamma * lambda)) / std::pow(speedup, 1.0 / lambda);
}

double log_ideas_growth(const LogIdeasParams& params, double effort_multiplier) {
    params.validate();
    if (!(std::isfinite(effort_multiplier) && effort_multiplier >= 1.0))
        throw ParseError("effort_multiplier", "must be at least 1");
    return params.base_growth + params.theta() * std::log(effort_multiplier);
}

} // namespace growthlab
