/* growthlab — deterministic growth-takeoff modeling toolkit.
 *
 * C interface to the growthlab core. All handles are opaque; functions
 * return GROWTHLAB_OK or an error code, with a malloc'd message written to
 * *err when err is non-NULL. Strings returned by growthlab_* functions are
 * malloc'd and must be released with growthlab_string_free.
 */
#ifndef GROWTHLAB_H
#define GROWTHLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    GROWTHLAB_OK = 0,
    GROWTHLAB_ERR_INVALID_INPUT = 1,
    GROWTHLAB_ERR_NO_CONVERGENCE = 2,
    GROWTHLAB_ERR_VERIFY_FAILED = 3,
    GROWTHLAB_ERR_INTERNAL = 4
};

typedef struct growthlab_scenario_t growthlab_scenario_t;
typedef struct growthlab_run_t growthlab_run_t;
typedef struct growthlab_verify_t growthlab_verify_t;

const char* growthlab_version(void);
void growthlab_string_free(char* s);

/* --- scenarios ---------------------------------------------------------- */

int growthlab_scenario_from_text(const char* text, growthlab_scenario_t** out,
                                 char** err);
int growthlab_scenario_from_preset(const char* name, growthlab_scenario_t** out,
                                   char** err);
/* Newline-separated list of built-in preset names. */
char* growthlab_preset_names(void);
char* growthlab_scenario_to_text(const growthlab_scenario_t* scenario);
/* Assign a scalar field by path, e.g. "growth.lambda" or "drivers.algorithmic". */
int growthlab_scenario_set(growthlab_scenario_t* scenario, const char* path,
                           double value, char** err);
void growthlab_scenario_free(growthlab_scenario_t* scenario);

/* --- scenario execution -------------------------------------------------- */

int growthlab_run_scenario(const growthlab_scenario_t* scenario, double step_years,
                           growthlab_run_t** out, char** err);
double growthlab_run_tech_multiplier(const growthlab_run_t* run);
double growthlab_run_equiv_years(const growthlab_run_t* run);
char* growthlab_run_csv(const growthlab_run_t* run);
char* growthlab_run_report(const growthlab_run_t* run);
void growthlab_run_free(growthlab_run_t* run);

/* Parses a sweep file ({"scenario": {...}, "grid": [...]}) and writes the
 * result table as CSV. */
int growthlab_sweep_from_text(const char* text, double step_years, char** csv_out,
                              char** err);

/* --- self-verification --------------------------------------------------- */

/* filter selects checks whose name contains the substring; NULL runs all.
 * lambda_override / beta_override perturb the growth calibration when
 * non-NULL. Always succeeds unless inputs are malformed; failed checks are
 * reported in the result. */
int growthlab_verify_run(const char* filter, const double* lambda_override,
                         const double* beta_override, growthlab_verify_t** out,
                         char** err);
int growthlab_verify_check_count(const growthlab_verify_t* verify);
int growthlab_verify_failure_count(const growthlab_verify_t* verify);
char* growthlab_verify_text(const growthlab_verify_t* verify);
char* growthlab_verify_csv(const growthlab_verify_t* verify);
void growthlab_verify_free(growthlab_verify_t* verify);

/* --- growth engine scalars ------------------------------------------------ */

int growthlab_steady_state_growth(double lambda, double beta, double effort_growth,
                                  double* out, char** err);
int growthlab_instantaneous_growth(double alpha, double lambda, double beta,
                                   double effort, double tech_level, double* out,
                                   char** err);
int growthlab_years_of_progress(double tech_ratio, double default_growth, double* out,
                                char** err);
int growthlab_solve_required_growth(double target_years, double horizon_years,
                                    double step_years, double* growth_out,
                                    double* achieved_tech_out, char** err);
int growthlab_frontload_boost(double lambda, double speedup, double* out, char** err);
int growthlab_cobb_douglas_steady_state(double lambda, double beta, double gamma,
                                        double cognitive_growth, double physical_growth,
                                        double* out, char** err);
int growthlab_cognitive_boost_factor(double lambda, double gamma, double speedup,
                                     double* out, char** err);
int growthlab_log_ideas_growth(double base_growth, double elasticity,
                               double effort_multiplier, double* out, char** err);

/* --- driver model scalars -------------------------------------------------- */

int growthlab_relative_speed(double ai_annual_multiplier, double human_growth,
                             double* out, char** err);
int growthlab_inference_efficiency_from_training(double effective_training_multiplier,
                                                 double* out, char** err);
int growthlab_task_horizon_years(double doubling_months, double start_horizon,
                                 double target_horizon, double* out, char** err);
/* Formatted scenario tables; which is "pre-parity", "post-parity", or NULL
 * for both. */
char* growthlab_tables_text(const char* which);

/* --- industrial calculators ------------------------------------------------ */

int growthlab_learning_cost_ratio(double learning_rate, double cumulative_multiplier,
                                  double* out, char** err);
int growthlab_replicator_doubling_time(double production_period_years,
                                       double reinvest_fraction, double* out,
                                       char** err);
/* payback_months_out is set to -1 when net income never repays the unit. */
int growthlab_robot_returns(double unit_cost, double replaced_salary,
                            double hours_multiple, double operating_cost,
                            double* annual_return_out, double* payback_months_out,
                            char** err);
int growthlab_lead_ratio(double exponent_n, double lead_c, double time_t, double* out,
                         char** err);
int growthlab_compound_growth(double rate, double years, double* out, char** err);

/* --- physical limits calculators ------------------------------------------- */

/* Warming from extra surface flux, default Earth constants. */
int growthlab_warming_from_flux(double extra_flux_w_m2, double* kelvin_out, char** err);
/* The fusion headline case: extra flux equal to half the absorbed
 * (use_incident = 0) or incident (use_incident = 1) solar flux. */
int growthlab_fusion_half_solar_warming(int use_incident, double* kelvin_out,
                                        double* flux_out, char** err);
int growthlab_probe_fleet_energy(double count, double unit_mass_kg,
                                 double speed_fraction, double* joules_out,
                                 double* solar_seconds_out, char** err);
int growthlab_solar_capture(double area_km2, double flux_w_m2,
                            double copper_intensity_t_per_mw, double* power_mw_out,
                            double* copper_tonnes_out, char** err);
/* Uses the default continental crust mass. */
int growthlab_crustal_resource(double abundance_fraction, double recoverable_fraction,
                               double requirement_tonnes, double* tonnes_out,
                               int* sufficient_out, char** err);
int growthlab_storage_capacity(double mass_g, double density_bits_per_g,
                               double bytes_per_brain, double* bits_out,
                               double* brains_out, char** err);
int growthlab_fleet_volume(double count, double unit_volume_cm3, double ref_x_m,
                           double ref_y_m, double ref_z_m, double* volume_m3_out,
                           double* reference_m3_out, char** err);
int growthlab_energy_headroom(double current_primary_w, double capture_fraction_of_sun,
                              double conversion_efficiency, double* multiplier_out,
                              char** err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GROWTHLAB_H */
