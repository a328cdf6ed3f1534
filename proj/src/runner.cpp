#include "growthlab/runner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace growthlab {

namespace {

std::string num(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string csv_num(double v) { return num(v, "%.12g"); }
std::string fig(double v) { return num(v, "%.3g"); }  // report figures, 3 sig digits

std::string driver_line(const char* label, const DriverTotal& total, double rate) {
    std::string line = "  ";
    line += label;
    line.resize(22, ' ');
    std::string t = fig(total.total);
    line += t;
    line.resize(34, ' ');
    line += "(rate " + fig(rate) + "x/yr";
    if (total.cap_year)
        line += ", cap reached at year " + fig(*total.cap_year);
    line += ")";
    return line;
}

} // namespace

RunResult run_scenario(const ScenarioDocument& doc, double step) {
    RunResult result;
    result.doc = doc;
    result.step = step;
    result.schedule = effort_schedule(doc.spec);
    result.trajectory = integrate_trajectory(doc.growth, result.schedule,
                                             doc.spec.horizon_years, step);
    result.projection = scenario_projection(doc.spec);
    return result;
}

std::string trajectory_csv(const RunResult& result) {
    std::string csv =
        "year,effort_human,effort_ai,effort_total,tech_level,growth_rate,equiv_years\n";
    const Trajectory& traj = result.trajectory;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        csv += csv_num(t);
        csv += ',';
        csv += csv_num(result.schedule.human(t));
        csv += ',';
        csv += csv_num(result.schedule.ai(t));
        csv += ',';
        csv += csv_num(traj.effort[i]);
        csv += ',';
        csv += csv_num(traj.tech_level[i]);
        csv += ',';
        csv += csv_num(traj.growth_rate[i]);
        csv += ',';
        csv += csv_num(traj.equiv_years[i]);
        csv += '\n';
    }
    return csv;
}

std::string report_text(const RunResult& result) {
    const ScenarioDocument& doc = result.doc;
    const ScenarioSpec& spec = doc.spec;
    std::ostringstream out;

    out << "scenario: " << (spec.name.empty() ? "custom" : spec.name) << "\n";
    out << "horizon: " << fig(spec.horizon_years) << " years at step "
        << fig(result.step) << "\n";
    out << "growth params: alpha " << fig(doc.growth.alpha) << ", lambda "
        << fig(doc.growth.lambda) << ", beta " << fig(doc.growth.beta);
    if (doc.gamma) out << ", gamma " << fig(*doc.gamma);
    out << "\n";

    const double m_ai = result.schedule.ai_multiplier;
    out << "effort schedule: S(t) = (1+" << fig(spec.human_growth) << ")^t";
    if (spec.parity_at_start)
        out << " + " << fig(m_ai)
            << "^t  (parity at start: AI equals human effort at t=0)";
    else
        out << "  (no AI term: AI effort does not feed technology in this scenario)";
    out << "\n";

    out << "results:\n";
    out << "  tech multiplier     " << fig(result.tech_multiplier()) << "\n";
    out << "  equivalent years    " << fig(result.equivalent_years())
        << "  (at " << fig(kDefaultTfpGrowth) << "/yr default-path growth)\n";
    out << "  effort at horizon   " << fig(result.trajectory.effort.back()) << "\n";

    out << "driver projection over " << fig(spec.horizon_years) << " years:\n";
    out << driver_line("training", result.projection.training,
                       spec.rates.training_compute)
        << "\n";
    out << driver_line("algorithmic", result.projection.algorithmic,
                       spec.rates.algorithmic_efficiency)
        << "\n";
    out << driver_line("inference compute", result.projection.inference,
                       spec.rates.inference_compute)
        << "\n";
    out << "  effort total        " << fig(result.projection.effort_total)
        << "  (average " << fig(result.projection.average_annual) << "x/yr)\n";

    const double ai_growth = ai_effort_growth(spec.rates);
    out << "ai effort growth: " << fig(ai_growth) << "x/yr; relative speed vs "
        << fig(spec.human_growth) << "/yr human growth: "
        << fig(relative_speed(ai_growth, spec.human_growth)) << "x\n";

    if (auto stated = stated_effort_rate(spec.name)) {
        const double computed_speed = relative_speed(*stated, spec.human_growth);
        out << "reference figures: table states " << fig(*stated)
            << "x/yr effort growth; at that rate the relative speed is "
            << fig(computed_speed) << "x under the arithmetic convention";
        for (auto rows : {pre_parity_table(), post_parity_table()})
            for (const auto& tab : rows)
                if (spec.name == tab.scenario &&
                    std::string_view(tab.driver) == "relative_speed" &&
                    std::fabs(computed_speed - tab.annual_rate) > 0.01) {
                    out << " (the table states " << (tab.lower_bound ? ">=" : "")
                        << fig(tab.annual_rate) << "x; the computed value is reported)";
                }
        out << "\n";
    }

    out << "conventions:\n";
    out << "  - annual figures are multipliers; internals compound continuously"
           " (x^t = exp(t ln x))\n";
    out << "  - integrator: classical fourth-order Runge-Kutta at fixed step on"
           " dA/dt = alpha S^lambda A^(1-beta), A(0)=1\n";
    out << "  - parity at start sets the AI component equal to the human component,"
           " doubling total effort at t=0\n";
    out << "  - equivalent years = ln(A) / ln(1 + " << fig(kDefaultTfpGrowth) << ")\n";
    return out.str();
}

std::string sweep_csv(const SweepFile& sweep, double step) {
    sweep.grid.validate();
    const auto& axes = sweep.grid.axes;

    std::string csv;
    for (const auto& axis : axes) {
        csv += axis.path;
        csv += ',';
    }
    csv += "tech_multiplier,equiv_years\n";

    std::vector<std::size_t> index(axes.size(), 0);
    const std::size_t total = sweep.grid.combinations();
    for (std::size_t row = 0; row < total; ++row) {
        // Row-major order over the axes as listed: last axis varies fastest.
        std::size_t rem = row;
        for (std::size_t a = axes.size(); a-- > 0;) {
            index[a] = rem % axes[a].values.size();
            rem /= axes[a].values.size();
        }
        ScenarioDocument doc = sweep.base;
        for (std::size_t a = 0; a < axes.size(); ++a)
            set_by_path(doc, axes[a].path, axes[a].values[index[a]]);
        RunResult result = run_scenario(doc, step);
        for (std::size_t a = 0; a < axes.size(); ++a) {
            csv += csv_num(axes[a].values[index[a]]);
            csv += ',';
        }
        csv += csv_num(result.tech_multiplier());
        csv += ',';
        csv += csv_num(result.equivalent_years());
        csv += '\n';
    }
    return csv;
}

} // namespace growthlab
