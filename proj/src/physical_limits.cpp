#include "growthlab/physical_limits.hpp"

#include <cmath>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

void require(bool ok, const char* path, const char* message) {
    if (!ok) throw ParseError(path, message);
}

void require_nonneg(double x, const char* path) {
    require(std::isfinite(x) && x >= 0.0, path, "must be nonnegative");
}

void require_fraction(double x, const char* path) {
    require(std::isfinite(x) && x >= 0.0 && x <= 1.0, path, "must be in [0, 1]");
}

} // namespace

void PhysicalConstants::validate() const {
    require(std::isfinite(solar_constant) && solar_constant > 0.0, "constants.solar_constant",
            "must be positive");
    require(std::isfinite(albedo) && albedo >= 0.0 && albedo < 1.0, "constants.albedo",
            "must be in [0, 1)");
    require(std::isfinite(stefan_boltzmann) && stefan_boltzmann > 0.0,
            "constants.stefan_boltzmann", "must be positive");
    require(std::isfinite(solar_luminosity) && solar_luminosity > 0.0,
            "constants.solar_luminosity", "must be positive");
    require(std::isfinite(light_speed) && light_speed > 0.0, "constants.light_speed",
            "must be positive");
    require(std::isfinite(earth_ocean_area_km2) && earth_ocean_area_km2 > 0.0,
            "constants.earth_ocean_area_km2", "must be positive");
    require(std::isfinite(crust_mass_kg) && crust_mass_kg > 0.0, "constants.crust_mass_kg",
            "must be positive");
}

void ThermalScenario::validate() const {
    require_nonneg(extra_flux_w_m2, "scenario.extra_flux_w_m2");
}

double equilibrium_temperature(const PhysicalConstants& constants,
                               const ThermalScenario& scenario) {
    constants.validate();
    scenario.validate();
    const double total_flux = constants.absorbed_solar_flux() + scenario.extra_flux_w_m2;
    return std::pow(total_flux / constants.stefan_boltzmann, 0.25);
}

double warming(const PhysicalConstants& constants, const ThermalScenario& scenario) {
    return equilibrium_temperature(constants, scenario) -
           equilibrium_temperature(constants, ThermalScenario{0.0});
}

double half_solar_flux(const PhysicalConstants& constants, FluxBasis basis) {
    constants.validate();
    return 0.5 * (basis == FluxBasis::absorbed ? constants.absorbed_solar_flux()
                                               : constants.incident_solar_flux());
}

ProbeFleetEnergy probe_fleet_energy(const PhysicalConstants& constants, double count,
                                    double unit_mass_kg, double speed_fraction) {
    constants.validate();
    require_nonneg(count, "count");
    require_nonneg(unit_mass_kg, "unit_mass_kg");
    require(std::isfinite(speed_fraction) && speed_fraction >= 0.0 && speed_fraction < 1.0,
            "speed_fraction", "must be in [0, 1)");
    const double gamma = 1.0 / std::sqrt(1.0 - speed_fraction * speed_fraction);
    const double c = constants.light_speed;
    ProbeFleetEnergy out;
    out.total_joules = count * (gamma - 1.0) * unit_mass_kg * c * c;
    out.seconds_of_solar_output = out.total_joules / constants.solar_luminosity;
    return out;
}

SolarCapture solar_capture(double area_km2, double flux_w_m2,
                           double copper_intensity_t_per_mw) {
    require_nonneg(area_km2, "area_km2");
    require_nonneg(flux_w_m2, "flux_w_m2");
    require_nonneg(copper_intensity_t_per_mw, "copper_intensity_t_per_mw");
    SolarCapture out;
    out.power_mw = area_km2 * 1e6 * flux_w_m2 / 1e6;  // km^2 -> m^2, W -> MW
    out.copper_tonnes = out.power_mw * copper_intensity_t_per_mw;
    return out;
}

CrustalResource crustal_resource(double crust_mass_kg, double abundance_fraction,
                                 double recoverable_fraction,
                                 double requirement_tonnes) {
    require(std::isfinite(crust_mass_kg) && crust_mass_kg > 0.0, "crust_mass_kg",
            "must be positive");
    require_fraction(abundance_fraction, "abundance_fraction");
    require_fraction(recoverable_fraction, "recoverable_fraction");
    require_nonneg(requirement_tonnes, "requirement_tonnes");
    CrustalResource out;
    out.tonnes = crust_mass_kg * abundance_fraction * recoverable_fraction / 1000.0;
    out.requirement_tonnes = requirement_tonnes;
    out.sufficient = out.tonnes >= requirement_tonnes;
    return out;
}

StorageCapacity storage_capacity(double mass_g, double density_bits_per_g,
                                 double bytes_per_brain) {
    require_nonneg(mass_g, "mass_g");
    require_nonneg(density_bits_per_g, "density_bits_per_g");
    require(std::isfinite(bytes_per_brain) && bytes_per_brain > 0.0, "bytes_per_brain",
            "must be positive");
    StorageCapacity out;
    out.bits = mass_g * density_bits_per_g;
    out.brain_count = out.bits / 8.0 / bytes_per_brain;
    return out;
}

FleetVolume fleet_volume(double count, double unit_volume_cm3, double ref_x_m,
                         double ref_y_m, double ref_z_m) {
    require_nonneg(count, "count");
    require_nonneg(unit_volume_cm3, "unit_volume_cm3");
    require_nonneg(ref_x_m, "ref_x_m");
    require_nonneg(ref_y_m, "ref_y_m");
    require_nonneg(ref_z_m, "ref_z_m");
    FleetVolume out;
    out.volume_m3 = count * unit_volume_cm3 * 1e-6;
    out.reference_m3 = ref_x_m * ref_y_m * ref_z_m;
    out.fits = out.volume_m3 <= out.reference_m3;
    return out;
}

double energy_headroom(const PhysicalConstants& constants, double current_primary_w,
                       double capture_fraction_of_sun, double conversion_efficiency) {
    constants.validate();
    require(std::isfinite(current_primary_w) && current_primary_w > 0.0,
            "current_primary_w", "must be positive");
    require_fraction(capture_fraction_of_sun, "capture_fraction_of_sun");
    require_fraction(conversion_efficiency, "conversion_efficiency");
    return constants.solar_luminosity * capture_fraction_of_sun * conversion_efficiency /
           current_primary_w;
}

} // namespace growthlab
