#include "growthlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "growthlab/driver_model.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/growth_engine.hpp"
#include "growthlab/industrial_model.hpp"
#include "growthlab/physical_limits.hpp"
#include "growthlab/runner.hpp"
#include "growthlab/scenario_io.hpp"
#include "growthlab/verify.hpp"

struct growthlab_scenario_t {
    growthlab::ScenarioDocument doc;
};

struct growthlab_run_t {
    growthlab::RunResult result;
};

struct growthlab_verify_t {
    std::vector<growthlab::CheckResult> results;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& message) {
    if (err) *err = dup_string(message);
}

// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
int guarded(char** err, Fn&& fn) {
    try {
        fn();
        return GROWTHLAB_OK;
    } catch (const growthlab::SolveError& e) {
        set_err(err, e.what());
        return GROWTHLAB_ERR_NO_CONVERGENCE;
    } catch (const growthlab::ParseError& e) {
        set_err(err, e.what());
        return GROWTHLAB_ERR_INVALID_INPUT;
    } catch (const std::invalid_argument& e) {
        set_err(err, e.what());
        return GROWTHLAB_ERR_INVALID_INPUT;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GROWTHLAB_ERR_INTERNAL;
    }
}

int require_arg(bool ok, const char* message, char** err) {
    if (ok) return GROWTHLAB_OK;
    set_err(err, message);
    return GROWTHLAB_ERR_INVALID_INPUT;
}

} // namespace

extern "C" {

const char* growthlab_version(void) { return "1.0.0"; }

void growthlab_string_free(char* s) { std::free(s); }

int growthlab_scenario_from_text(const char* text, growthlab_scenario_t** out,
                                 char** err) {
    if (int rc = require_arg(text && out, "null argument", err)) return rc;
    return guarded(err, [&] {
        auto* handle = new growthlab_scenario_t{growthlab::parse_scenario(text)};
        *out = handle;
    });
}

int growthlab_scenario_from_preset(const char* name, growthlab_scenario_t** out,
                                   char** err) {
    if (int rc = require_arg(name && out, "null argument", err)) return rc;
    return guarded(err, [&] {
        auto preset = growthlab::find_preset(name);
        if (!preset)
            throw growthlab::ParseError("name", std::string("unknown preset: ") + name);
        growthlab::ScenarioDocument doc;
        doc.spec = *preset;
        *out = new growthlab_scenario_t{std::move(doc)};
    });
}

char* growthlab_preset_names(void) {
    std::string joined;
    for (const auto& name : growthlab::preset_names()) {
        joined += name;
        joined += '\n';
    }
    return dup_string(joined);
}

char* growthlab_scenario_to_text(const growthlab_scenario_t* scenario) {
    if (!scenario) return nullptr;
    return dup_string(growthlab::serialize_scenario(scenario->doc));
}

int growthlab_scenario_set(growthlab_scenario_t* scenario, const char* path,
                           double value, char** err) {
    if (int rc = require_arg(scenario && path, "null argument", err)) return rc;
    return guarded(err, [&] { growthlab::set_by_path(scenario->doc, path, value); });
}

void growthlab_scenario_free(growthlab_scenario_t* scenario) { delete scenario; }

int growthlab_run_scenario(const growthlab_scenario_t* scenario, double step_years,
                           growthlab_run_t** out, char** err) {
    if (int rc = require_arg(scenario && out, "null argument", err)) return rc;
    return guarded(err, [&] {
        *out = new growthlab_run_t{growthlab::run_scenario(scenario->doc, step_years)};
    });
}

double growthlab_run_tech_multiplier(const growthlab_run_t* run) {
    return run ? run->result.tech_multiplier() : 0.0;
}

double growthlab_run_equiv_years(const growthlab_run_t* run) {
    return run ? run->result.equivalent_years() : 0.0;
}

char* growthlab_run_csv(const growthlab_run_t* run) {
    if (!run) return nullptr;
    return dup_string(growthlab::trajectory_csv(run->result));
}

char* growthlab_run_report(const growthlab_run_t* run) {
    if (!run) return nullptr;
    return dup_string(growthlab::report_text(run->result));
}

void growthlab_run_free(growthlab_run_t* run) { delete run; }

int growthlab_sweep_from_text(const char* text, double step_years, char** csv_out,
                              char** err) {
    if (int rc = require_arg(text && csv_out, "null argument", err)) return rc;
    return guarded(err, [&] {
        const growthlab::SweepFile sweep = growthlab::parse_sweep(text);
        *csv_out = dup_string(growthlab::sweep_csv(sweep, step_years));
    });
}

int growthlab_verify_run(const char* filter, const double* lambda_override,
                         const double* beta_override, growthlab_verify_t** out,
                         char** err) {
    if (int rc = require_arg(out != nullptr, "null argument", err)) return rc;
    return guarded(err, [&] {
        growthlab::VerifyOptions options;
        if (filter) options.filter = filter;
        if (lambda_override) options.lambda_override = *lambda_override;
        if (beta_override) options.beta_override = *beta_override;
        *out = new growthlab_verify_t{growthlab::run_verification(options)};
    });
}

int growthlab_verify_check_count(const growthlab_verify_t* verify) {
    return verify ? static_cast<int>(verify->results.size()) : 0;
}

int growthlab_verify_failure_count(const growthlab_verify_t* verify) {
    return verify ? growthlab::failure_count(verify->results) : 0;
}

char* growthlab_verify_text(const growthlab_verify_t* verify) {
    if (!verify) return nullptr;
    return dup_string(growthlab::verification_text(verify->results));
}

char* growthlab_verify_csv(const growthlab_verify_t* verify) {
    if (!verify) return nullptr;
    return dup_string(growthlab::verification_csv(verify->results));
}

void growthlab_verify_free(growthlab_verify_t* verify) { delete verify; }

int growthlab_steady_state_growth(double lambda, double beta, double effort_growth,
                                  double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        growthlab::GrowthParams params;
        params.lambda = lambda;
        params.beta = beta;
        *out = growthlab::steady_state_growth(params, effort_growth);
    });
}

int growthlab_instantaneous_growth(double alpha, double lambda, double beta,
                                   double effort, double tech_level, double* out,
                                   char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *out = growthlab::instantaneous_growth({alpha, lambda, beta}, effort, tech_level);
    });
}

int growthlab_years_of_progress(double tech_ratio, double default_growth, double* out,
                                char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err,
                   [&] { *out = growthlab::years_of_progress(tech_ratio, default_growth); });
}

int growthlab_solve_required_growth(double target_years, double horizon_years,
                                    double step_years, double* growth_out,
                                    double* achieved_tech_out, char** err) {
    if (int rc = require_arg(growth_out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        const auto solved = growthlab::solve_required_growth(
            growthlab::GrowthParams{}, target_years, horizon_years, step_years);
        *growth_out = solved.growth_rate;
        if (achieved_tech_out) *achieved_tech_out = solved.achieved_tech;
    });
}

int growthlab_frontload_boost(double lambda, double speedup, double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        growthlab::GrowthParams params;
        params.lambda = lambda;
        *out = growthlab::frontload_boost(params, speedup);
    });
}

int growthlab_cobb_douglas_steady_state(double lambda, double beta, double gamma,
                                        double cognitive_growth, double physical_growth,
                                        double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        growthlab::GrowthParams params;
        params.lambda = lambda;
        params.beta = beta;
        growthlab::CognitivePhysicalSplit split;
        split.gamma = gamma;
        *out = growthlab::cobb_douglas_steady_state(params, split, cognitive_growth,
                                                    physical_growth);
    });
}

int growthlab_cognitive_boost_factor(double lambda, double gamma, double speedup,
                                     double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err,
                   [&] { *out = growthlab::cognitive_boost_factor(lambda, gamma, speedup); });
}

int growthlab_log_ideas_growth(double base_growth, double elasticity,
                               double effort_multiplier, double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *out = growthlab::log_ideas_growth({base_growth, elasticity}, effort_multiplier);
    });
}

int growthlab_relative_speed(double ai_annual_multiplier, double human_growth,
                             double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err,
                   [&] { *out = growthlab::relative_speed(ai_annual_multiplier, human_growth); });
}

int growthlab_inference_efficiency_from_training(double effective_training_multiplier,
                                                 double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *out = growthlab::inference_efficiency_from_training(effective_training_multiplier);
    });
}

int growthlab_task_horizon_years(double doubling_months, double start_horizon,
                                 double target_horizon, double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *out = growthlab::task_horizon_years(doubling_months, start_horizon,
                                             target_horizon);
    });
}

char* growthlab_tables_text(const char* which) {
    const std::string selection = which ? which : "";
    std::ostringstream out;
    auto render = [&out](const char* title,
                         std::span<const growthlab::TableEntry> rows) {
        out << title << "\n";
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %-26s %-24s %12s %16s\n", "scenario", "driver",
                      "annual", "decade total");
        out << buf;
        for (const auto& row : rows) {
            std::string annual = row.annual_rate > 0
                                     ? [&] {
                                           char n[32];
                                           std::snprintf(n, sizeof n, "%s%.3g%s",
                                                         row.lower_bound ? ">=" : "",
                                                         row.annual_rate,
                                                         std::strcmp(row.driver,
                                                                     "relative_speed") == 0
                                                             ? ""
                                                             : "x");
                                           return std::string(n);
                                       }()
                                     : std::string("-");
            std::string total = row.decade_total > 0
                                    ? [&] {
                                          char n[32];
                                          std::snprintf(n, sizeof n, "%.3g",
                                                        row.decade_total);
                                          return std::string(n);
                                      }()
                                    : std::string("-");
            std::snprintf(buf, sizeof buf, "  %-26s %-24s %12s %16s\n", row.scenario,
                          row.driver, annual.c_str(), total.c_str());
            out << buf;
        }
    };
    if (selection.empty() || selection == "pre-parity")
        render("projection table: decade at current trends", growthlab::pre_parity_table());
    if (selection.empty() || selection == "post-parity")
        render("projection table: decade after research-effort parity",
               growthlab::post_parity_table());
    if (out.str().empty()) return nullptr;
    return dup_string(out.str());
}

int growthlab_learning_cost_ratio(double learning_rate, double cumulative_multiplier,
                                  double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        growthlab::LearningCurve curve;
        curve.learning_rate = learning_rate;
        *out = growthlab::learning_cost_ratio(curve, cumulative_multiplier);
    });
}

int growthlab_replicator_doubling_time(double production_period_years,
                                       double reinvest_fraction, double* out,
                                       char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *out = growthlab::replicator_doubling_time(
            {production_period_years, reinvest_fraction});
    });
}

int growthlab_robot_returns(double unit_cost, double replaced_salary,
                            double hours_multiple, double operating_cost,
                            double* annual_return_out, double* payback_months_out,
                            char** err) {
    if (int rc = require_arg(annual_return_out && payback_months_out, "null output", err))
        return rc;
    return guarded(err, [&] {
        const auto returns = growthlab::robot_returns(
            {unit_cost, replaced_salary, hours_multiple, operating_cost});
        *annual_return_out = returns.annual_return;
        *payback_months_out = returns.payback_months.value_or(-1.0);
    });
}

int growthlab_lead_ratio(double exponent_n, double lead_c, double time_t, double* out,
                         char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] { *out = growthlab::lead_ratio({exponent_n, lead_c, time_t}); });
}

int growthlab_compound_growth(double rate, double years, double* out, char** err) {
    if (int rc = require_arg(out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] { *out = growthlab::compound_growth(rate, years); });
}

int growthlab_warming_from_flux(double extra_flux_w_m2, double* kelvin_out, char** err) {
    if (int rc = require_arg(kelvin_out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *kelvin_out = growthlab::warming(growthlab::PhysicalConstants{},
                                         growthlab::ThermalScenario{extra_flux_w_m2});
    });
}

int growthlab_fusion_half_solar_warming(int use_incident, double* kelvin_out,
                                        double* flux_out, char** err) {
    if (int rc = require_arg(kelvin_out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        const growthlab::PhysicalConstants constants;
        const double flux = growthlab::half_solar_flux(
            constants, use_incident ? growthlab::FluxBasis::incident
                                    : growthlab::FluxBasis::absorbed);
        *kelvin_out = growthlab::warming(constants, growthlab::ThermalScenario{flux});
        if (flux_out) *flux_out = flux;
    });
}

int growthlab_probe_fleet_energy(double count, double unit_mass_kg,
                                 double speed_fraction, double* joules_out,
                                 double* solar_seconds_out, char** err) {
    if (int rc = require_arg(joules_out && solar_seconds_out, "null output", err))
        return rc;
    return guarded(err, [&] {
        const auto energy = growthlab::probe_fleet_energy(
            growthlab::PhysicalConstants{}, count, unit_mass_kg, speed_fraction);
        *joules_out = energy.total_joules;
        *solar_seconds_out = energy.seconds_of_solar_output;
    });
}

int growthlab_solar_capture(double area_km2, double flux_w_m2,
                            double copper_intensity_t_per_mw, double* power_mw_out,
                            double* copper_tonnes_out, char** err) {
    if (int rc = require_arg(power_mw_out && copper_tonnes_out, "null output", err))
        return rc;
    return guarded(err, [&] {
        const auto capture =
            growthlab::solar_capture(area_km2, flux_w_m2, copper_intensity_t_per_mw);
        *power_mw_out = capture.power_mw;
        *copper_tonnes_out = capture.copper_tonnes;
    });
}

int growthlab_crustal_resource(double abundance_fraction, double recoverable_fraction,
                               double requirement_tonnes, double* tonnes_out,
                               int* sufficient_out, char** err) {
    if (int rc = require_arg(tonnes_out && sufficient_out, "null output", err)) return rc;
    return guarded(err, [&] {
        const auto resource = growthlab::crustal_resource(
            growthlab::PhysicalConstants{}.crust_mass_kg, abundance_fraction,
            recoverable_fraction, requirement_tonnes);
        *tonnes_out = resource.tonnes;
        *sufficient_out = resource.sufficient ? 1 : 0;
    });
}

int growthlab_storage_capacity(double mass_g, double density_bits_per_g,
                               double bytes_per_brain, double* bits_out,
                               double* brains_out, char** err) {
    if (int rc = require_arg(bits_out && brains_out, "null output", err)) return rc;
    return guarded(err, [&] {
        const auto storage =
            growthlab::storage_capacity(mass_g, density_bits_per_g, bytes_per_brain);
        *bits_out = storage.bits;
        *brains_out = storage.brain_count;
    });
}

int growthlab_fleet_volume(double count, double unit_volume_cm3, double ref_x_m,
                           double ref_y_m, double ref_z_m, double* volume_m3_out,
                           double* reference_m3_out, char** err) {
    if (int rc = require_arg(volume_m3_out && reference_m3_out, "null output", err))
        return rc;
    return guarded(err, [&] {
        const auto volume =
            growthlab::fleet_volume(count, unit_volume_cm3, ref_x_m, ref_y_m, ref_z_m);
        *volume_m3_out = volume.volume_m3;
        *reference_m3_out = volume.reference_m3;
    });
}

int growthlab_energy_headroom(double current_primary_w, double capture_fraction_of_sun,
                              double conversion_efficiency, double* multiplier_out,
                              char** err) {
    if (int rc = require_arg(multiplier_out != nullptr, "null output", err)) return rc;
    return guarded(err, [&] {
        *multiplier_out = growthlab::energy_headroom(
            growthlab::PhysicalConstants{}, current_primary_w, capture_fraction_of_sun,
            conversion_efficiency);
    });
}

} // extern "C"
