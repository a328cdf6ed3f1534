// growthlab command-line interface. Talks to the core exclusively through
// the C API in growthlab.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "growthlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitVerifyFailed = 3;

std::string fig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string precise(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int exit_code_for(int status) {
    switch (status) {
        case GROWTHLAB_OK: return kExitOk;
        case GROWTHLAB_ERR_NO_CONVERGENCE: return kExitNoConvergence;
        case GROWTHLAB_ERR_VERIFY_FAILED: return kExitVerifyFailed;
        default: return kExitInputError;
    }
}

// Takes ownership of a malloc'd C string.
std::string adopt(char* s) {
    if (!s) return {};
    std::string out = s;
    growthlab_string_free(s);
    return out;
}

int fail(int status, char* err) {
    std::cerr << "error: " << (err ? err : "unknown failure") << "\n";
    growthlab_string_free(err);
    return exit_code_for(status);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kExitInputError;
    }
    file << text;
    return kExitOk;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream file(path, std::ios::binary);
    if (!file) return false;
    std::ostringstream buffer;
    buffer << file.rdbuf();
    out = buffer.str();
    return true;
}

// One computed figure for the calculator subcommands: text or csv rendering.
struct Figure {
    std::string name;
    double value;
    std::string unit;
};

int emit_figures(const std::vector<Figure>& figures, const std::string& format,
                 const std::string& out_path, const std::string& note = "") {
    std::string text;
    if (format == "csv") {
        text = "quantity,value,unit\n";
        for (const auto& f : figures)
            text += f.name + ',' + precise(f.value) + ',' + f.unit + '\n';
    } else {
        for (const auto& f : figures) {
            text += f.name + ": " + fig(f.value);
            if (!f.unit.empty()) text += ' ' + f.unit;
            text += '\n';
        }
        if (!note.empty()) text += note + '\n';
    }
    return emit(text, out_path);
}

// Stated reference for crustal copper; the computed value from the stated
// inputs lands ~10x higher, which the output flags rather than hides.
constexpr double kStatedCrustalCopperTonnes = 1.32e14;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growthlab — deterministic growth-takeoff modeling toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    // --- steady-state -------------------------------------------------------
    auto* steady = app.add_subcommand(
        "steady-state", "Steady-state technology growth for a given effort growth");
    double ss_lambda = 0.75, ss_beta = 2.4, ss_growth = 0.04;
    std::optional<double> ss_gamma;
    double ss_cognitive = 0.04, ss_physical = 0.04;
    steady->add_option("--lambda", ss_lambda, "parallelism elasticity");
    steady->add_option("--beta", ss_beta, "fishing-out elasticity");
    steady->add_option("--effort-growth", ss_growth, "effort growth rate per year");
    steady->add_option("--gamma", ss_gamma, "cognitive share for the Cobb-Douglas split");
    steady->add_option("--cognitive-growth", ss_cognitive, "cognitive effort growth");
    steady->add_option("--physical-growth", ss_physical, "physical input growth");
    steady->add_option("--format", format, "text|csv");
    steady->add_option("--out", out_path, "write output to a file");

    // --- simulate -----------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "Integrate a scenario file");
    std::string scenario_path;
    double step = 0.01;
    simulate->add_option("file", scenario_path, "scenario file (JSON)")->required();
    simulate->add_option("--step", step, "integrator step in years");
    simulate->add_option("--format", format, "csv (trajectory) or text (report)");
    simulate->add_option("--out", out_path, "write output to a file");

    // --- solve --------------------------------------------------------------
    auto* solve = app.add_subcommand(
        "solve", "Constant effort growth required for a target of equivalent years");
    double target_years = 100.0, horizon = 10.0;
    solve->add_option("--target-years", target_years, "equivalent years to reach")
        ->required();
    solve->add_option("--horizon", horizon, "window in years")->required();
    solve->add_option("--step", step, "integrator step in years");
    solve->add_option("--format", format, "text|csv");
    solve->add_option("--out", out_path, "write output to a file");

    // --- tables -------------------------------------------------------------
    auto* tables = app.add_subcommand("tables", "Stated scenario tables");
    std::string which_table;
    tables->add_option("which", which_table, "pre-parity|post-parity (default both)");
    tables->add_option("--out", out_path, "write output to a file");

    // --- limits -------------------------------------------------------------
    auto* limits = app.add_subcommand("limits", "Physical-limits calculators");
    limits->require_subcommand(1);

    auto* warming_cmd = limits->add_subcommand("warming", "Waste-heat warming");
    double warm_flux = -1.0;
    bool warm_incident = false;
    warming_cmd->add_option("--flux", warm_flux,
                            "extra surface flux in W/m^2 (default: half of absorbed sunlight)");
    warming_cmd->add_flag("--incident", warm_incident,
                          "halve the incident instead of the absorbed solar flux");

    auto* probes = limits->add_subcommand("probe-fleet", "Relativistic probe fleet energy");
    double probe_count = 1e10, probe_mass = 1.0, probe_speed = 0.99;
    probes->add_option("--count", probe_count, "number of probes");
    probes->add_option("--mass", probe_mass, "probe mass in kg");
    probes->add_option("--speed", probe_speed, "speed as a fraction of c");

    auto* solar = limits->add_subcommand("solar-capture", "Solar power and copper budget");
    double solar_area = 7.22e6, solar_flux = 500.0, copper_intensity = 5.5;
    solar->add_option("--area-km2", solar_area, "capture area in km^2");
    solar->add_option("--flux", solar_flux, "flux in W/m^2");
    solar->add_option("--copper-intensity", copper_intensity, "tonnes of copper per MW");

    auto* crustal = limits->add_subcommand("crustal-resource", "Crustal element stock");
    double abundance = 6e-5, recoverable = 0.15, requirement = 2e10;
    crustal->add_option("--abundance", abundance, "mass fraction in the crust");
    crustal->add_option("--recoverable", recoverable, "recoverable fraction");
    crustal->add_option("--requirement", requirement, "required tonnes");

    auto* storage = limits->add_subcommand("storage", "DNA-density data storage");
    double storage_mass = 1.0, storage_density = 1e21, bytes_per_brain = 1e14;
    storage->add_option("--mass-g", storage_mass, "storage mass in grams");
    storage->add_option("--density", storage_density, "bits per gram");
    storage->add_option("--bytes-per-brain", bytes_per_brain, "bytes per synaptic map");

    auto* fleet = limits->add_subcommand("fleet-volume", "Drone fleet volume");
    double fleet_count = 1e10, fleet_unit = 16.0;
    double ref_x = 76.0, ref_y = 180.0, ref_z = 19.0;
    fleet->add_option("--count", fleet_count, "number of units");
    fleet->add_option("--unit-cm3", fleet_unit, "unit volume in cm^3");
    fleet->add_option("--ref-x", ref_x, "reference enclosure x in m");
    fleet->add_option("--ref-y", ref_y, "reference enclosure y in m");
    fleet->add_option("--ref-z", ref_z, "reference enclosure z in m");

    auto* headroom = limits->add_subcommand("energy-headroom", "Solar energy headroom");
    double current_w = 1.9e13, capture_fraction = 0.001, efficiency = 0.1;
    headroom->add_option("--current-w", current_w, "current primary consumption in W");
    headroom->add_option("--capture", capture_fraction, "fraction of solar output captured");
    headroom->add_option("--efficiency", efficiency, "conversion efficiency");

    for (auto* cmd : limits->get_subcommands({})) {
        cmd->add_option("--format", format, "text|csv");
        cmd->add_option("--out", out_path, "write output to a file");
    }

    // --- industry -------------------------------------------------------------
    auto* industry = app.add_subcommand("industry", "Industrial-explosion calculators");
    industry->require_subcommand(1);

    auto* learning = industry->add_subcommand("learning-curve", "Experience-curve cost ratio");
    double learning_rate = 0.2, cumulative = 1e5;
    learning->add_option("--learning-rate", learning_rate, "cost decline per doubling");
    learning->add_option("--multiplier", cumulative, "cumulative production multiplier");

    auto* replicator = industry->add_subcommand("replicator", "Self-replicating stock");
    double period = 2.0, reinvest = 0.75;
    replicator->add_option("--period", period, "production period in years");
    replicator->add_option("--reinvest", reinvest, "fraction reinvested in more stock");

    auto* robots = industry->add_subcommand("robot-roi", "Robot return on investment");
    double unit_cost = 100000.0, salary = 50000.0, hours_multiple = 5.0,
           operating = 25000.0;
    robots->add_option("--unit-cost", unit_cost, "robot cost");
    robots->add_option("--salary", salary, "replaced salary per year");
    robots->add_option("--hours-multiple", hours_multiple, "hours vs a 40 h/week worker");
    robots->add_option("--operating-cost", operating, "running cost per year");

    auto* lead = industry->add_subcommand("lead-ratio", "Super-exponential lead ratio");
    double lead_n = 2.0, lead_c = 1.0, lead_t = 1.0;
    lead->add_option("--exponent", lead_n, "super-exponential order n");
    lead->add_option("--lead", lead_c, "head start c");
    lead->add_option("--time", lead_t, "evaluation time t");

    auto* compound = industry->add_subcommand("compound-growth", "Compound growth multiplier");
    double comp_rate = 0.01, comp_years = 100.0;
    compound->add_option("--rate", comp_rate, "growth rate per year");
    compound->add_option("--years", comp_years, "number of years");

    for (auto* cmd : industry->get_subcommands({})) {
        cmd->add_option("--format", format, "text|csv");
        cmd->add_option("--out", out_path, "write output to a file");
    }

    // --- sweep ----------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep over a scenario");
    std::string sweep_path;
    sweep->add_option("file", sweep_path, "sweep file (JSON)")->required();
    sweep->add_option("--step", step, "integrator step in years");
    sweep->add_option("--out", out_path, "write output to a file");

    // --- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Recompute every reference figure");
    std::string filter;
    std::optional<double> lambda_override, beta_override;
    verify->add_option("--filter", filter, "run checks whose name contains this substring");
    verify->add_option("--lambda", lambda_override, "perturb the parallelism elasticity");
    verify->add_option("--beta", beta_override, "perturb the fishing-out elasticity");
    verify->add_option("--format", format, "text|csv");
    verify->add_option("--out", out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    char* err = nullptr;

    if (*steady) {
        double value = 0.0;
        int rc = growthlab_steady_state_growth(ss_lambda, ss_beta, ss_growth, &value, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        std::vector<Figure> figures{{"steady_state_growth", value, "per year"}};
        if (ss_gamma) {
            double cd = 0.0;
            rc = growthlab_cobb_douglas_steady_state(ss_lambda, ss_beta, *ss_gamma,
                                                     ss_cognitive, ss_physical, &cd, &err);
            if (rc != GROWTHLAB_OK) return fail(rc, err);
            figures.push_back({"cobb_douglas_growth", cd, "per year"});
        }
        return emit_figures(figures, format, out_path);
    }

    if (*simulate) {
        std::string text;
        if (!read_file(scenario_path, text)) {
            std::cerr << "error: cannot read scenario file: " << scenario_path << "\n";
            return kExitInputError;
        }
        growthlab_scenario_t* scenario = nullptr;
        int rc = growthlab_scenario_from_text(text.c_str(), &scenario, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        growthlab_run_t* run = nullptr;
        rc = growthlab_run_scenario(scenario, step, &run, &err);
        growthlab_scenario_free(scenario);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        const std::string output =
            format == "csv" ? adopt(growthlab_run_csv(run)) : adopt(growthlab_run_report(run));
        growthlab_run_free(run);
        return emit(output, out_path);
    }

    if (*solve) {
        double growth = 0.0, achieved = 0.0;
        int rc = growthlab_solve_required_growth(target_years, horizon, step, &growth,
                                                 &achieved, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"required_effort_growth", growth, "per year"},
                             {"achieved_tech_multiplier", achieved, ""}},
                            format, out_path);
    }

    if (*tables) {
        char* text = growthlab_tables_text(which_table.empty() ? nullptr
                                                               : which_table.c_str());
        if (!text) {
            std::cerr << "error: unknown table: " << which_table << "\n";
            return kExitInputError;
        }
        std::string output = adopt(text);
        double metr = 0.0;
        if (growthlab_task_horizon_years(7.0, 1.0, 167.0, &metr, nullptr) == GROWTHLAB_OK) {
            output += "task-horizon extrapolation: doubling every 7 months from a"
                      " 1-hour baseline reaches one working month (167 h) in " +
                      fig(metr) + " years (the 1-hour baseline is an assumption of"
                      " this tool)\n";
        }
        return emit(output, out_path);
    }

    if (*warming_cmd) {
        double kelvin = 0.0, flux = warm_flux;
        int rc;
        if (warm_flux >= 0.0)
            rc = growthlab_warming_from_flux(warm_flux, &kelvin, &err);
        else
            rc = growthlab_fusion_half_solar_warming(warm_incident ? 1 : 0, &kelvin, &flux,
                                                     &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"extra_flux", flux, "W/m^2"}, {"warming", kelvin, "K"}},
                            format, out_path);
    }

    if (*probes) {
        double joules = 0.0, seconds = 0.0;
        int rc = growthlab_probe_fleet_energy(probe_count, probe_mass, probe_speed,
                                              &joules, &seconds, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"fleet_energy", joules, "J"},
                             {"solar_output_equivalent", seconds, "s"}},
                            format, out_path);
    }

    if (*solar) {
        double power = 0.0, copper = 0.0;
        int rc = growthlab_solar_capture(solar_area, solar_flux, copper_intensity, &power,
                                         &copper, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"power", power, "MW"}, {"copper", copper, "t"}}, format,
                            out_path);
    }

    if (*crustal) {
        double tonnes = 0.0, total = 0.0;
        int sufficient = 0, ignored = 0;
        int rc = growthlab_crustal_resource(abundance, recoverable, requirement, &tonnes,
                                            &sufficient, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        rc = growthlab_crustal_resource(abundance, 1.0, requirement, &total, &ignored, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        std::string note;
        const double vs_stated = total / kStatedCrustalCopperTonnes;
        if (vs_stated > 2.0 || vs_stated < 0.5) {
            note = "note: the commonly stated copper stock (" +
                   fig(kStatedCrustalCopperTonnes) +
                   " t) disagrees with the product of the stated inputs by ~" +
                   fig(vs_stated) + "x; this tool reports the computed product";
        }
        std::vector<Figure> figures{
            {"recoverable_stock", tonnes, "t"},
            {"requirement", requirement, "t"},
            {"sufficient", static_cast<double>(sufficient), "(1 = yes)"}};
        return emit_figures(figures, format, out_path, note);
    }

    if (*storage) {
        double bits = 0.0, brains = 0.0;
        int rc = growthlab_storage_capacity(storage_mass, storage_density, bytes_per_brain,
                                            &bits, &brains, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"capacity", bits, "bits"},
                             {"brain_equivalents", brains, ""}},
                            format, out_path);
    }

    if (*fleet) {
        double volume = 0.0, reference = 0.0;
        int rc = growthlab_fleet_volume(fleet_count, fleet_unit, ref_x, ref_y, ref_z,
                                        &volume, &reference, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"fleet_volume", volume, "m^3"},
                             {"reference_volume", reference, "m^3"},
                             {"fits", volume <= reference ? 1.0 : 0.0, "(1 = yes)"}},
                            format, out_path);
    }

    if (*headroom) {
        double multiplier = 0.0;
        int rc = growthlab_energy_headroom(current_w, capture_fraction, efficiency,
                                           &multiplier, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"headroom_multiplier", multiplier, "x current consumption"}},
                            format, out_path);
    }

    if (*learning) {
        double ratio = 0.0;
        int rc = growthlab_learning_cost_ratio(learning_rate, cumulative, &ratio, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"cost_ratio", ratio, ""},
                             {"cost_decline", 1.0 - ratio, "fraction"}},
                            format, out_path);
    }

    if (*replicator) {
        double doubling = 0.0;
        int rc = growthlab_replicator_doubling_time(period, reinvest, &doubling, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"doubling_time", doubling, "years"}}, format, out_path);
    }

    if (*robots) {
        double annual_return = 0.0, payback = 0.0;
        int rc = growthlab_robot_returns(unit_cost, salary, hours_multiple, operating,
                                         &annual_return, &payback, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        std::vector<Figure> figures{{"annual_return", annual_return, "per year"}};
        if (payback >= 0.0)
            figures.push_back({"payback", payback, "months"});
        else
            figures.push_back({"payback", -1.0, "(never repays)"});
        return emit_figures(figures, format, out_path);
    }

    if (*lead) {
        double ratio = 0.0;
        int rc = growthlab_lead_ratio(lead_n, lead_c, lead_t, &ratio, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"lead_ratio", ratio, ""}}, format, out_path);
    }

    if (*compound) {
        double multiplier = 0.0;
        int rc = growthlab_compound_growth(comp_rate, comp_years, &multiplier, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit_figures({{"multiplier", multiplier, ""}}, format, out_path);
    }

    if (*sweep) {
        std::string text;
        if (!read_file(sweep_path, text)) {
            std::cerr << "error: cannot read sweep file: " << sweep_path << "\n";
            return kExitInputError;
        }
        char* csv = nullptr;
        int rc = growthlab_sweep_from_text(text.c_str(), step, &csv, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        return emit(adopt(csv), out_path);
    }

    if (*verify) {
        growthlab_verify_t* result = nullptr;
        const double* lam = lambda_override ? &*lambda_override : nullptr;
        const double* bet = beta_override ? &*beta_override : nullptr;
        int rc = growthlab_verify_run(filter.empty() ? nullptr : filter.c_str(), lam, bet,
                                      &result, &err);
        if (rc != GROWTHLAB_OK) return fail(rc, err);
        const std::string output = format == "csv" ? adopt(growthlab_verify_csv(result))
                                                   : adopt(growthlab_verify_text(result));
        const int failures = growthlab_verify_failure_count(result);
        growthlab_verify_free(result);
        int emit_rc = emit(output, out_path);
        if (emit_rc != kExitOk) return emit_rc;
        return failures > 0 ? kExitVerifyFailed : kExitOk;
    }

    return kExitInputError;
}
