#pragma once

namespace growthlab {

// All physical constants in one table; computation is SI throughout.
// Note the naming: `albedo` here and `lambda` in GrowthParams are unrelated,
// as are the solar constant and research effort S.
struct PhysicalConstants {
    double solar_constant = 1361.0;        // W/m^2
    double albedo = 0.3;                   // dimensionless
    double stefan_boltzmann = 5.670e-8;    // W/m^2 K^4
    double solar_luminosity = 3.828e26;    // W
    double light_speed = 2.998e8;          // m/s
    double earth_ocean_area_km2 = 3.61e8;  // km^2
    double crust_mass_kg = 2.171e22;       // kg

    void validate() const;
    // Globally averaged solar flux absorbed at the surface: S(1-albedo)/4.
    double absorbed_solar_flux() const {
        return solar_constant * (1.0 - albedo) / 4.0;
    }
    // Top-of-atmosphere incident flux: S/4.
    double incident_solar_flux() const { return solar_constant / 4.0; }
};

// Which flux the "half of sunlight" fusion scenario halves. The absorbed
// interpretation reproduces the stated ~25 K warming; incident is exposed
// as an alternative reading.
enum class FluxBasis { absorbed, incident };

// Extra (non-solar) power dissipated at the surface, globally averaged.
struct ThermalScenario {
    double extra_flux_w_m2 = 0.0;

    void validate() const;
};

// Effective equilibrium temperature ((S(1-a)/4 + F) / sigma)^(1/4), in kelvin.
double equilibrium_temperature(const PhysicalConstants& constants,
                               const ThermalScenario& scenario);

// T_e(F) - T_e(0).
double warming(const PhysicalConstants& constants, const ThermalScenario& scenario);

// F for the fusion scenario: half of the absorbed (or incident) solar flux.
double half_solar_flux(const PhysicalConstants& constants,
                       FluxBasis basis = FluxBasis::absorbed);

struct ProbeFleetEnergy {
    double total_joules = 0.0;
    double seconds_of_solar_output = 0.0;
};

// Relativistic kinetic energy (gamma - 1) m c^2 summed over the fleet,
// also expressed as seconds of total solar output.
ProbeFleetEnergy probe_fleet_energy(const PhysicalConstants& constants, double count,
                                    double unit_mass_kg, double speed_fraction);

struct SolarCapture {
    double power_mw = 0.0;
    double copper_tonnes = 0.0;
};

// power = area x flux; copper = power x intensity (t/MW).
SolarCapture solar_capture(double area_km2, double flux_w_m2,
                           double copper_intensity_t_per_mw);

struct CrustalResource {
    double tonnes = 0.0;
    double requirement_tonnes = 0.0;
    bool sufficient = false;
};

// crust_mass x abundance x recoverable, in tonnes, compared to a requirement.
CrustalResource crustal_resource(double crust_mass_kg, double abundance_fraction,
                                 double recoverable_fraction,
                                 double requirement_tonnes);

struct StorageCapacity {
    double bits = 0.0;
    double brain_count = 0.0;  // at bytes_per_brain per synaptic map
};

StorageCapacity storage_capacity(double mass_g, double density_bits_per_g,
                                 double bytes_per_brain = 1e14);

struct FleetVolume {
    double volume_m3 = 0.0;
    double reference_m3 = 0.0;  // enclosure given as three dimensions
    bool fits = false;
};

FleetVolume fleet_volume(double count, double unit_volume_cm3, double ref_x_m,
                         double ref_y_m, double ref_z_m);

// solar_luminosity x capture_fraction x efficiency / current consumption.
double energy_headroom(const PhysicalConstants& constants, double current_primary_w,
                       double capture_fraction_of_sun, double conversion_efficiency);

} // namespace growthlab
