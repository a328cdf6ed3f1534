#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "growthlab/driver_model.hpp"
#include "growthlab/errors.hpp"

using namespace growthlab;

TEST_CASE("effective compute growth under current trends") {
    const DriverRates current = DriverRates::current_trends();
    CHECK(effective_compute_growth(current, false) == doctest::Approx(13.5).epsilon(1e-13));
    CHECK(effective_compute_growth(current, true) == doctest::Approx(40.5).epsilon(1e-13));
    CHECK(effective_compute_growth(DriverRates::all_ones(), true) == 1.0);
}

TEST_CASE("ai effort growth is the inference-side product") {
    CHECK(ai_effort_growth(DriverRates::current_trends()) ==
          doctest::Approx(25.0).epsilon(1e-13));
    CHECK(ai_effort_growth(find_preset("conservative-post-parity")->rates) ==
          doctest::Approx(5.0).epsilon(1e-13));
    CHECK(ai_effort_growth(DriverRates::all_ones()) == 1.0);
}

TEST_CASE("rates below 1 are rejected with the field path") {
    DriverRates rates = DriverRates::current_trends();
    rates.training_compute = 0.5;
    try {
        rates.validate();
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        CHECK(e.path() == "drivers.training");
    }
}

TEST_CASE("relative_speed under the arithmetic convention") {
    CHECK(relative_speed(25.0, 0.04) == doctest::Approx(600.0).epsilon(1e-12));
    CHECK(relative_speed(5.0, 0.04) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(relative_speed(1.04, 0.04) == doctest::Approx(1.0).epsilon(1e-12));

    // Linear in the multiplier minus one, inverse in human growth.
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> mult(1.0, 100.0);
    std::uniform_real_distribution<double> growth(0.005, 0.2);
    for (int i = 0; i < 200; ++i) {
        const double m = mult(rng), g = growth(rng);
        const double base = relative_speed(m, g);
        CHECK(relative_speed(1.0 + 2.0 * (m - 1.0), g) ==
              doctest::Approx(2.0 * base).epsilon(1e-9));
        CHECK(relative_speed(m, 2.0 * g) == doctest::Approx(0.5 * base).epsilon(1e-9));
    }
}

TEST_CASE("scenario_projection respects caps and reports cap years") {
    const ScenarioSpec limits = *find_preset("scaling-limits");
    const DriverProjection proj = scenario_projection(limits);
    CHECK(proj.training.total == 1e4);
    CHECK(proj.algorithmic.total == 1e3);
    CHECK(proj.inference.total == 1e4);
    CHECK(proj.effort_total == 1e11);
    CHECK(proj.average_annual == doctest::Approx(12.589254).epsilon(1e-6));
    REQUIRE(proj.training.cap_year.has_value());
    CHECK(*proj.training.cap_year == doctest::Approx(std::log(1e4) / std::log(4.5)));
    REQUIRE(proj.inference.cap_year.has_value());
    CHECK(*proj.inference.cap_year == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("rapid scenario projects at least 1e17 total effort at >= 50x per year") {
    const DriverProjection proj = scenario_projection(*find_preset("rapid"));
    CHECK(proj.algorithmic.total == 1e9);  // software feedback cap binds at ~9.97y
    CHECK(proj.effort_total >= 1e17);
    CHECK(proj.average_annual >= 50.0);
}

TEST_CASE("post-parity projections land on the stated decade totals") {
    const DriverProjection conservative =
        scenario_projection(*find_preset("conservative-post-parity"));
    CHECK(conservative.training.total == 1.0);
    CHECK(conservative.algorithmic.total == doctest::Approx(std::pow(2.5, 10.0)));
    CHECK(conservative.inference.total == 1e3);
    CHECK(conservative.effort_total == doctest::Approx(9.5367e6).epsilon(1e-4));
    CHECK(conservative.average_annual == doctest::Approx(5.0).epsilon(0.01));

    const DriverProjection aggressive =
        scenario_projection(*find_preset("aggressive-post-parity"));
    CHECK(aggressive.training.total == 1e3);
    CHECK(aggressive.effort_total == doctest::Approx(9.3132e13).epsilon(1e-4));
    CHECK(aggressive.average_annual == doctest::Approx(25.0).epsilon(0.01));
}

TEST_CASE("horizon zero projects all totals to 1") {
    ScenarioSpec spec = *find_preset("moderate");
    spec.horizon_years = 0.0;
    const DriverProjection proj = scenario_projection(spec);
    CHECK(proj.training.total == 1.0);
    CHECK(proj.algorithmic.total == 1.0);
    CHECK(proj.inference.total == 1.0);
    CHECK(proj.effort_total == 1.0);
    CHECK(proj.average_annual == 1.0);
}

TEST_CASE("with unlimited caps the projection equals rate^horizon exactly") {
    ScenarioSpec spec = *find_preset("current");
    spec.caps = HeadroomCaps::unlimited();
    const DriverProjection proj = scenario_projection(spec);
    CHECK(proj.training.total == std::pow(4.5, 10.0));
    CHECK(proj.algorithmic.total == std::pow(3.0, 10.0));
    CHECK(proj.inference.total == std::pow(2.5, 10.0));
    CHECK_FALSE(proj.training.cap_year.has_value());
}

TEST_CASE("no driver total ever exceeds its cap") {
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> rate(1.0, 12.0);
    std::uniform_real_distribution<double> cap(1.0, 1e8);
    for (int i = 0; i < 200; ++i) {
        ScenarioSpec spec;
        spec.rates = {rate(rng), rate(rng), 1.0, rate(rng), 1.0};
        spec.caps = {cap(rng), cap(rng), cap(rng)};
        const DriverProjection proj = scenario_projection(spec);
        CHECK(proj.training.total <= spec.caps.training_total);
        CHECK(proj.algorithmic.total <= spec.caps.algorithmic_total);
        CHECK(proj.inference.total <= spec.caps.inference_total);
    }
}

TEST_CASE("stated table totals stay within 10% of their compounded rates") {
    for (const auto& row : pre_parity_table()) {
        if (row.decade_total <= 0.0 || row.annual_rate <= 0.0) continue;
        if (std::string_view(row.driver) == "ai_research_effort" && row.lower_bound &&
            std::string_view(row.scenario) == "moderate")
            continue;  // ">= 12x" is a floor, not the derived 12.5x rate
        const double compounded = std::pow(row.annual_rate, 10.0);
        CHECK(std::fabs(compounded - row.decade_total) <= 0.1 * row.decade_total);
    }
    for (const auto& row : post_parity_table()) {
        if (row.decade_total <= 1.0 || row.annual_rate <= 0.0) continue;
        const double compounded = std::pow(row.annual_rate, 10.0);
        CHECK(std::fabs(compounded - row.decade_total) <= 0.1 * row.decade_total);
    }
    // The moderate effort row is stated as a floor; check it from below.
    CHECK(std::pow(12.0, 10.0) <= 1e11);
}

TEST_CASE("stated effort rates are retrievable per preset") {
    CHECK(*stated_effort_rate("current") == 25.0);
    CHECK(*stated_effort_rate("moderate") == 12.0);
    CHECK(*stated_effort_rate("rapid") == 50.0);
    CHECK(*stated_effort_rate("conservative-post-parity") == 5.0);
    CHECK(*stated_effort_rate("aggressive-post-parity") == 25.0);
    CHECK_FALSE(stated_effort_rate("nonesuch").has_value());
}

TEST_CASE("inference efficiency from training follows the square-root trade") {
    CHECK(inference_efficiency_from_training(4.0) == 2.0);
    CHECK(inference_efficiency_from_training(1.0) == 1.0);
    CHECK(inference_efficiency_from_training(100.0) == 10.0);
    CHECK_THROWS_AS(inference_efficiency_from_training(0.5), ParseError);
}

TEST_CASE("effort_schedule composes the human and AI terms") {
    const ScenarioSpec conservative = *find_preset("conservative-post-parity");
    const ResearcherSchedule sched = effort_schedule(conservative);
    CHECK(sched.human_start == 1.0);
    CHECK(sched.ai_start == 1.0);
    CHECK(sched.ai_multiplier == doctest::Approx(5.0).epsilon(1e-13));
    CHECK(sched.total(10.0) == doctest::Approx(1.48024 + 9765625.0).epsilon(1e-5));

    // Symmetric growth: AI matched to the human rate doubles the whole path.
    ScenarioSpec matched = conservative;
    matched.rates.inference_efficiency = 1.04;
    matched.rates.inference_compute = 1.0;
    const ResearcherSchedule sym = effort_schedule(matched);
    for (double t : {0.0, 1.0, 5.5, 10.0})
        CHECK(sym.total(t) == doctest::Approx(2.0 * sym.human(t)).epsilon(1e-12));

    // Without parity the AI term vanishes.
    const ResearcherSchedule human_only = effort_schedule(*find_preset("current"));
    CHECK(human_only.ai(3.0) == 0.0);
}

TEST_CASE("effort_schedule grows and is eventually AI-dominated") {
    const ResearcherSchedule sched = effort_schedule(*find_preset("conservative-post-parity"));
    double prev = sched.total(0.0);
    for (double t = 0.25; t <= 10.0; t += 0.25) {
        const double cur = sched.total(t);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(sched.ai(10.0) / sched.total(10.0) > 0.999);
}

TEST_CASE("effective compute bridge") {
    const double raw = 2.1e25 / 1.9e21;
    const ComputeBridge band = effective_compute_bridge(raw, 5.0, 50.0);
    CHECK(band.low == doctest::Approx(5.526e4).epsilon(1e-3));
    CHECK(band.high == doctest::Approx(5.526e5).epsilon(1e-3));
    const ComputeBridge with_post = effective_compute_bridge(raw, 5.0, 50.0, 20.0);
    CHECK(with_post.high == doctest::Approx(1.105e7).epsilon(1e-3));
    const ComputeBridge unit = effective_compute_bridge(raw, 1.0, 1.0);
    CHECK(unit.low == raw);
    CHECK(unit.high == raw);
}

TEST_CASE("task horizon extrapolation") {
    CHECK(task_horizon_years(7.0, 1.0, 167.0) == doctest::Approx(4.307).epsilon(1e-3));
    CHECK(task_horizon_years(7.0, 3.0, 3.0) == 0.0);
    CHECK(task_horizon_years(7.0, 1.0, 2.0) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("implied algorithmic headroom from the compute scale-up") {
    CHECK(implied_algorithmic_headroom(1e4, 4.5, 3.0) ==
          doctest::Approx(835.0).epsilon(1e-3));
}

TEST_CASE("presets are complete and self-consistent") {
    for (const auto& name : preset_names()) {
        const auto preset = find_preset(name);
        REQUIRE(preset.has_value());
        CHECK(preset->name == name);
        CHECK_NOTHROW(preset->validate());
    }
    CHECK_FALSE(find_preset("unknown").has_value());

    // Post-parity presets start at parity; trend scenarios do not.
    CHECK(find_preset("conservative-post-parity")->parity_at_start);
    CHECK(find_preset("aggressive-post-parity")->parity_at_start);
    CHECK_FALSE(find_preset("moderate")->parity_at_start);

    // The aggressive scenario's inference efficiency tracks effective compute.
    const ScenarioSpec aggressive = *find_preset("aggressive-post-parity");
    CHECK(aggressive.rates.inference_efficiency ==
          doctest::Approx(effective_compute_growth(aggressive.rates, false)));
    CHECK(ai_effort_growth(aggressive.rates) == doctest::Approx(25.0).epsilon(1e-13));
}
