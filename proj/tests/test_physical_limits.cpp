#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "growthlab/errors.hpp"
#include "growthlab/physical_limits.hpp"

using namespace growthlab;

namespace {

// Independent Stefan-Boltzmann evaluation from the raw numbers.
double oracle_temperature(double flux_w_m2) {
    return std::pow(flux_w_m2 / 5.670e-8, 0.25);
}

} // namespace

TEST_CASE("no-atmosphere equilibrium temperature") {
    const PhysicalConstants constants;
    const double t0 = equilibrium_temperature(constants, ThermalScenario{0.0});
    CHECK(t0 == doctest::Approx(254.58).epsilon(1e-4));
    CHECK(t0 == doctest::Approx(oracle_temperature(1361.0 * 0.7 / 4.0)).epsilon(1e-12));
    CHECK(warming(constants, ThermalScenario{0.0}) == 0.0);
}

TEST_CASE("fusion at half the absorbed flux warms by about 25 K") {
    const PhysicalConstants constants;
    const double flux = half_solar_flux(constants);
    CHECK(flux == doctest::Approx(0.5 * 1361.0 * 0.7 / 4.0).epsilon(1e-12));
    const double dt = warming(constants, ThermalScenario{flux});
    CHECK(dt == doctest::Approx(27.159).epsilon(1e-4));
    CHECK(std::fabs(dt - 25.0) <= 3.0);

    // The incident reading runs hotter; exposed, not default.
    const double dt_incident =
        warming(constants, ThermalScenario{half_solar_flux(constants, FluxBasis::incident)});
    CHECK(dt_incident == doctest::Approx(36.72).epsilon(1e-3));
    CHECK(dt_incident > dt);
}

TEST_CASE("equilibrium temperature scaling and monotonicity") {
    const PhysicalConstants constants;
    std::mt19937 rng(3u);
    std::uniform_real_distribution<double> flux(0.0, 500.0);
    double prev = equilibrium_temperature(constants, ThermalScenario{0.0});
    for (double f = 20.0; f <= 400.0; f += 20.0) {
        const double t = equilibrium_temperature(constants, ThermalScenario{f});
        CHECK(t > prev);
        prev = t;
    }
    // Homogeneity of degree 1/4 in the total flux.
    for (int i = 0; i < 100; ++i) {
        const double f = flux(rng);
        const double total = constants.absorbed_solar_flux() + f;
        PhysicalConstants doubled = constants;
        doubled.solar_constant *= 16.0;
        const double t16 =
            equilibrium_temperature(doubled, ThermalScenario{16.0 * f});
        const double t1 = equilibrium_temperature(constants, ThermalScenario{f});
        CHECK(t16 == doctest::Approx(2.0 * t1).epsilon(1e-12));
        CHECK(t1 == doctest::Approx(oracle_temperature(total)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(equilibrium_temperature(constants, ThermalScenario{-1.0}), ParseError);
}

TEST_CASE("probe fleet energy at 0.99c") {
    const PhysicalConstants constants;
    const ProbeFleetEnergy one = probe_fleet_energy(constants, 1.0, 1.0, 0.99);
    // Independent evaluation: gamma - 1 via beta^2 gamma^2 / (gamma + 1).
    const double beta_sq = 0.99 * 0.99;
    const double gamma = 1.0 / std::sqrt(1.0 - beta_sq);
    const double oracle =
        beta_sq * gamma * gamma / (gamma + 1.0) * 2.998e8 * 2.998e8;
    CHECK(one.total_joules == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(one.total_joules == doctest::Approx(5.4726e17).epsilon(1e-4));

    const ProbeFleetEnergy fleet = probe_fleet_energy(constants, 1e10, 1.0, 0.99);
    CHECK(fleet.total_joules == doctest::Approx(1e10 * one.total_joules).epsilon(1e-12));
    CHECK(fleet.seconds_of_solar_output == doctest::Approx(14.296).epsilon(1e-3));
    CHECK(fleet.seconds_of_solar_output < 60.0);
}

TEST_CASE("probe energy approaches the Newtonian limit at low speed") {
    const PhysicalConstants constants;
    for (double frac : {0.001, 0.005, 0.01}) {
        const double v = frac * constants.light_speed;
        const double newtonian = 0.5 * v * v;
        const double relativistic = probe_fleet_energy(constants, 1.0, 1.0, frac).total_joules;
        CHECK(std::fabs(relativistic - newtonian) / newtonian < 0.01);
    }
    // Fast probes cost strictly more than the Newtonian estimate.
    for (double frac : {0.5, 0.9, 0.99}) {
        const double v = frac * constants.light_speed;
        CHECK(probe_fleet_energy(constants, 1.0, 1.0, frac).total_joules > 0.5 * v * v);
    }
    CHECK_THROWS_AS(probe_fleet_energy(constants, 1.0, 1.0, 1.0), ParseError);
}

TEST_CASE("probe fleet energy is linear in count and mass, monotone in speed") {
    const PhysicalConstants constants;
    std::mt19937 rng(13u);
    std::uniform_real_distribution<double> count(1.0, 1e12);
    std::uniform_real_distribution<double> mass(0.01, 100.0);
    std::uniform_real_distribution<double> speed(0.01, 0.98);
    for (int i = 0; i < 100; ++i) {
        const double n = count(rng), m = mass(rng), s = speed(rng);
        const double base = probe_fleet_energy(constants, n, m, s).total_joules;
        CHECK(probe_fleet_energy(constants, 3.0 * n, m, s).total_joules ==
              doctest::Approx(3.0 * base).epsilon(1e-12));
        CHECK(probe_fleet_energy(constants, n, 2.0 * m, s).total_joules ==
              doctest::Approx(2.0 * base).epsilon(1e-12));
        CHECK(probe_fleet_energy(constants, n, m, s + 0.01).total_joules > base);
    }
}

TEST_CASE("solar capture on 2% of the oceans") {
    const PhysicalConstants constants;
    const double area = 0.02 * constants.earth_ocean_area_km2;
    CHECK(area == doctest::Approx(7.22e6).epsilon(1e-12));
    const SolarCapture capture = solar_capture(area, 500.0, 5.5);
    CHECK(capture.power_mw == doctest::Approx(3.61e9).epsilon(1e-12));
    CHECK(capture.copper_tonnes == doctest::Approx(1.9855e10).epsilon(1e-4));
    const SolarCapture none = solar_capture(0.0, 500.0, 5.5);
    CHECK(none.power_mw == 0.0);
    CHECK(none.copper_tonnes == 0.0);
}

TEST_CASE("crustal copper stock versus the solar requirement") {
    const PhysicalConstants constants;
    const CrustalResource full =
        crustal_resource(constants.crust_mass_kg, 6e-5, 1.0, 2e10);
    CHECK(full.tonnes == doctest::Approx(1.3026e15).epsilon(1e-4));
    CHECK(full.sufficient);

    // 15% recoverable still clears the requirement, and the conclusion holds
    // even from the 10x-lower commonly stated stock.
    const CrustalResource recoverable =
        crustal_resource(constants.crust_mass_kg, 6e-5, 0.15, 2e10);
    CHECK(recoverable.tonnes == doctest::Approx(1.9539e14).epsilon(1e-4));
    CHECK(recoverable.sufficient);
    CHECK(0.15 * 1.32e14 >= 2e10);

    const CrustalResource none = crustal_resource(constants.crust_mass_kg, 0.0, 1.0, 2e10);
    CHECK(none.tonnes == 0.0);
    CHECK_FALSE(none.sufficient);
}

TEST_CASE("storage capacity at DNA density") {
    const StorageCapacity one_gram = storage_capacity(1.0, 1e21);
    CHECK(one_gram.bits == 1e21);
    // 1e21 bits = 125 exabytes; the statement rounds to "roughly 100".
    CHECK(one_gram.bits / 8.0 == doctest::Approx(1.25e20).epsilon(1e-12));
    CHECK(one_gram.brain_count == doctest::Approx(1.25e6).epsilon(1e-12));

    const StorageCapacity two_grams = storage_capacity(2.0, 1e21);
    CHECK(two_grams.brain_count >= 1e6);
    CHECK(storage_capacity(0.0, 1e21).bits == 0.0);
}

TEST_CASE("drone fleet volume against the reference hangar") {
    const FleetVolume fleet = fleet_volume(1e10, 16.0, 76.0, 180.0, 19.0);
    CHECK(fleet.volume_m3 == doctest::Approx(1.6e5).epsilon(1e-12));
    CHECK(fleet.reference_m3 == doctest::Approx(259920.0).epsilon(1e-12));
    CHECK(fleet.fits);
    CHECK(fleet_volume(0.0, 16.0, 1.0, 1.0, 1.0).volume_m3 == 0.0);
}

TEST_CASE("capacity and volume operations are linear in their size argument") {
    std::mt19937 rng(41u);
    std::uniform_real_distribution<double> scale(0.1, 1e6);
    for (int i = 0; i < 100; ++i) {
        const double x = scale(rng);
        CHECK(storage_capacity(3.0 * x, 1e21).bits ==
              doctest::Approx(3.0 * storage_capacity(x, 1e21).bits).epsilon(1e-12));
        CHECK(fleet_volume(5.0 * x, 16.0, 1, 1, 1).volume_m3 ==
              doctest::Approx(5.0 * fleet_volume(x, 16.0, 1, 1, 1).volume_m3)
                  .epsilon(1e-12));
        CHECK(solar_capture(2.0 * x, 500.0, 5.5).power_mw ==
              doctest::Approx(2.0 * solar_capture(x, 500.0, 5.5).power_mw)
                  .epsilon(1e-12));
    }
}

TEST_CASE("energy headroom from modest space-based capture") {
    const PhysicalConstants constants;
    const double multiplier = energy_headroom(constants, 1.9e13, 0.001, 0.1);
    CHECK(multiplier == doctest::Approx(2.0147e9).epsilon(1e-4));
    CHECK(multiplier > 1e9);
    CHECK(energy_headroom(constants, 1.9e13, 0.0, 0.1) == 0.0);

    // Earth-bound sanity check: 100x current consumption fits within the
    // solar flux on 2% of the oceans.
    const SolarCapture capture = solar_capture(7.22e6, 500.0, 5.5);
    CHECK(100.0 * 1.9e13 < capture.power_mw * 1e6);
}
