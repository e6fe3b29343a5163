#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lcadc/engine.hpp"
#include "lcadc/metrics.hpp"
#include "lcadc/power.hpp"
#include "support/oracles.hpp"

using namespace lcadc;
using lcadc_tests::guarded_period;

namespace {

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = t0 + (t1 - t0) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    return g;
}

}  // namespace

TEST_CASE("reconstruction of an idle trace is the window midpoint") {
    AdcConfig cfg;
    ClockConfig clk{1e-6, 0.0, 0};
    // constant input sitting exactly on the level-16 midpoint
    auto src = SignalSource::sine(0.0, 100.0, 0.515625);
    auto trace = simulate(src, cfg, clk, 0.01);
    auto rec = reconstruct(trace, cfg);
    REQUIRE(rec.values.size() == 1);
    CHECK(rec.values[0] == 0.515625);
    CHECK(rec.value_at(0.0) == 0.515625);
    CHECK(rec.value_at(0.009) == 0.515625);

    auto err = tracking_error(src, rec, uniform_grid(0.0, 0.01, 1000));
    CHECK(err.max_abs_v == 0.0);
    CHECK(err.rmse_v == 0.0);
}

TEST_CASE("single increment steps one LSB at the register load") {
    AdcConfig cfg;
    SimTrace trace;
    trace.duration = 2e-3;
    trace.initial_level = Level{16};
    trace.events.push_back({0.9e-3, 0.95e-3, 1e-3, 1.05e-3, Direction::Inc, Level{17}, false,
                            false});
    auto rec = reconstruct(trace, cfg);
    REQUIRE(rec.values.size() == 2);
    CHECK(rec.values[0] == doctest::Approx(0.515625).epsilon(1e-15));
    CHECK(rec.values[1] == doctest::Approx(0.546875).epsilon(1e-15));
    CHECK(rec.step_times[1] == 1e-3);
    CHECK(rec.value_at(0.99e-3) == doctest::Approx(0.515625));
    CHECK(rec.value_at(1.01e-3) == doctest::Approx(0.546875));
}

TEST_CASE("saturated handshakes do not move the staircase") {
    AdcConfig cfg;
    SimTrace trace;
    trace.duration = 2e-3;
    trace.initial_level = Level{31};
    trace.events.push_back({0.4e-3, 0.45e-3, 0.5e-3, 0.55e-3, Direction::Inc, Level{31}, false,
                            true});
    auto rec = reconstruct(trace, cfg);
    CHECK(rec.values.size() == 1);
}

TEST_CASE("a full sine period returns the staircase to its start") {
    AdcConfig cfg;
    double f = 1000.0;
    ClockConfig clk{max_clock_period(f, 0.5, cfg) / 4.0, 0.0, 0};
    auto src = SignalSource::sine(0.5, f, 0.5);
    auto trace = simulate(src, cfg, clk, guarded_period(f));
    REQUIRE(trace.events.size() == 62);
    auto rec = reconstruct(trace, cfg);
    CHECK(rec.values.size() == 63);
    CHECK(rec.values.front() == rec.values.back());
    // the staircase replays the engine's level sequence
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        CHECK(rec.values[i + 1] ==
              (trace.events[i].level_after.code + 0.5) * cfg.delta());
    }
}

TEST_CASE("slow triangle stays within the latency error bound") {
    AdcConfig cfg;
    double f = 10.0;
    double t_clk = max_clock_period(f, 0.5, cfg);
    ClockConfig clk{t_clk, 0.0, 0};
    auto src = SignalSource::triangle(0.5, f, 0.5);
    double duration = 0.12;
    auto trace = simulate(src, cfg, clk, duration);
    auto rec = reconstruct(trace, cfg);

    double slope = src.max_slope();
    double bound = cfg.delta() / 2.0 + slope * (cfg.t_dig_s + cfg.t_comp_s + 2.0 * t_clk);
    auto err = tracking_error(src, rec, uniform_grid(0.0, duration, 8000));
    CHECK(err.max_abs_v <= bound);
    CHECK(err.rmse_v <= err.max_abs_v);

    // away from any in-flight handshake the input sits inside the window
    for (double t : uniform_grid(0.0, duration, 4000)) {
        bool quiescent = true;
        for (const auto& ev : trace.events) {
            if (t >= ev.t_cross && t < ev.t_ack_fall + cfg.t_comp_s) {
                quiescent = false;
                break;
            }
        }
        if (quiescent)
            CHECK(std::abs(src.eval(t) - rec.value_at(t)) <= cfg.delta() / 2.0 + 1e-12);
    }
}

TEST_CASE("fast sine at the clock bound stays within the latency error bound") {
    AdcConfig cfg;
    double f = 1000.0;
    double t_clk = max_clock_period(f, 0.5, cfg);
    ClockConfig clk = ClockConfig::with_random_phase(t_clk, 3);
    auto src = SignalSource::sine(0.5, f, 0.5);
    double duration = 20e-3;
    auto trace = simulate(src, cfg, clk, duration);
    auto rec = reconstruct(trace, cfg);

    double bound = cfg.delta() / 2.0 + src.max_slope() * (cfg.t_comp_s + 2.0 * t_clk);
    auto err = tracking_error(src, rec, uniform_grid(0.0, duration, 200000));
    CHECK(err.max_abs_v <= bound);  // about delta/2 + 33.3 mV
}

TEST_CASE("error evaluation rejects an empty grid") {
    AdcConfig cfg;
    SimTrace trace;
    trace.duration = 1.0;
    trace.initial_level = Level{16};
    auto rec = reconstruct(trace, cfg);
    CHECK_THROWS_AS(tracking_error(SignalSource::sine(0.5, 1.0, 0.5), rec, {}),
                    std::invalid_argument);
}
