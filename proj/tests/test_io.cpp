#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "lcadc/engine.hpp"
#include "lcadc/io.hpp"
#include "lcadc/power.hpp"
#include "support/temp_files.hpp"

using namespace lcadc;
using lcadc_tests::write_temp;

namespace {

std::string first_line(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    return line;
}

std::string temp_path(const std::string& name) {
    return write_temp(name, "");
}

}  // namespace

TEST_CASE("doubles round-trip through their text form") {
    for (double v : {0.0, 1.0, -1.0, 0.1, 1e-12, 659.5e-9, std::numbers::pi, 1.0 / 3.0,
                     93.0 / (64.0 * std::numbers::pi), 1e300, 4.9736e-6}) {
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        double v = u(rng);
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("emitted files carry headers and round-trip through the loader") {
    AdcConfig cfg;
    ClockConfig clk{2e-6, 0.0, 0};
    auto trace = simulate(SignalSource::sine(0.5, 1000.0, 0.5), cfg, clk, 2e-3);
    auto power = measured_power(trace, cfg);

    auto trace_path = temp_path("io_trace.csv");
    write_trace_csv(trace_path, trace);
    CHECK(first_line(trace_path) ==
          "t_cross_s,t_req_s,t_ack_rise_s,t_ack_fall_s,direction,level_after,catch_up,saturated");

    auto seg_path = temp_path("io_segments.csv");
    write_power_segments_csv(seg_path, trace);
    CHECK(first_line(seg_path) == "t_start_s,t_end_s,state");

    auto sum_path = temp_path("io_summary.json");
    write_summary_json(sum_path, trace, power, clk);
    CHECK(first_line(sum_path) == "{");

    auto rows = sweep_off_fraction_factors({10.0, 100.0}, {1.0, 0.5}, cfg);
    auto sweep_path = temp_path("io_sweep.csv");
    write_sweep_csv(sweep_path, rows);
    CHECK(first_line(sweep_path) == "f_in_hz,t_clk_s,off_fraction,mean_power_w,feasible");

    std::vector<EmpiricalPoint> measured(rows.size());
    write_sweep_csv(sweep_path, rows, measured);
    CHECK(first_line(sweep_path) ==
          "f_in_hz,t_clk_s,off_fraction,mean_power_w,feasible,measured_off_fraction,"
          "measured_mean_power_w");
}

TEST_CASE("record values survive a write/load cycle exactly") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::string content = "time_s,value\n";
    std::vector<double> times, values;
    double t = 0.0;
    for (int i = 0; i < 200; ++i) {
        t += 1e-3 + u(rng) * 1e-3;
        times.push_back(t);
        values.push_back(u(rng));
        content += format_double(times.back()) + "," + format_double(values.back()) + "\n";
    }
    auto path = write_temp("io_roundtrip.csv", content);
    auto rec = load_record(path, std::nullopt);
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(rec.eval(times[i]) == values[i]);
}
