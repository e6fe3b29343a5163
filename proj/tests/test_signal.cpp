#include <cmath>
#include <stdexcept>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lcadc/signal.hpp"
#include "support/temp_files.hpp"

using lcadc::SignalSource;
using lcadc_tests::write_temp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sine generator") {
    auto s = SignalSource::sine(0.5, 1000.0, 0.5);
    CHECK(s.eval(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.eval(0.25e-3) == doctest::Approx(1.0).epsilon(1e-12));
    // quarter of a quarter period: 0.5 + 0.5*sin(pi/6)
    CHECK(s.eval(1e-3 / 12.0) == doctest::Approx(0.5 + 0.5 * std::sin(kPi / 6.0)).epsilon(1e-12));
    CHECK(s.max_slope() == doctest::Approx(2.0 * kPi * 1000.0 * 0.5));
    CHECK(s.min_value() == doctest::Approx(0.0));
    CHECK(s.max_value() == doctest::Approx(1.0));

    CHECK_THROWS_AS(SignalSource::sine(0.5, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SignalSource::sine(0.5, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SignalSource::sine(-0.1, 10.0, 0.5), std::invalid_argument);
}

TEST_CASE("triangle generator") {
    auto s = SignalSource::triangle(0.5, 10.0, 0.5);
    CHECK(s.eval(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.eval(0.025) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.eval(0.075) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.eval(0.0125) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s.max_slope() == doctest::Approx(4.0 * 0.5 * 10.0));

    CHECK_THROWS_AS(SignalSource::triangle(0.5, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("analytic sources are periodic") {
    double f = 1000.0;
    for (auto s : {SignalSource::sine(0.5, f, 0.5), SignalSource::triangle(0.5, f, 0.5)}) {
        for (double t : {0.0, 1.7e-5, 1.23e-4, 3.3e-4, 9.99e-4}) {
            for (int k = 1; k <= 5; ++k) {
                CHECK(std::abs(s.eval(t) - s.eval(t + k / f)) < 1e-12);
            }
        }
    }
}

TEST_CASE("sampled source interpolates and clamps") {
    auto s = SignalSource::sampled({0.0, 1.0}, {0.0, 1.0});
    CHECK(s.eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.eval(-1.0) == 0.0);   // clamp before the record
    CHECK(s.eval(2.0) == 1.0);    // clamp past the record
    CHECK(s.duration() == 1.0);

    // evaluation at a sample time returns the sample exactly
    std::vector<double> times{0.0, 0.013, 0.27, 0.5001, 0.9};
    std::vector<double> values{0.1, 0.731, -0.25, 0.662, 0.331};
    auto r = SignalSource::sampled(times, values);
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(r.eval(times[i]) == values[i]);

    CHECK_THROWS_AS(SignalSource::sampled({0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SignalSource::sampled({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(SignalSource::sampled({0.0, -1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("record loading") {
    SUBCASE("two columns with header") {
        auto path = write_temp("rec2col.csv", "time_s,value\n0,0\n1,1\n");
        auto s = lcadc::load_record(path, std::nullopt);
        CHECK(s.eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("two columns without header") {
        auto path = write_temp("rec2col_nohdr.csv", "0,0\n1,1\n");
        auto s = lcadc::load_record(path, std::nullopt);
        CHECK(s.eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("single column with sample rate") {
        auto path = write_temp("rec1col.csv", "value\n0.25\n0.5\n0.75\n");
        auto s = lcadc::load_record(path, 360.0);
        CHECK(s.eval(1.0 / 360.0) == 0.5);
        CHECK(s.eval(2.0 / 360.0) == 0.75);
        CHECK(s.duration() == doctest::Approx(2.0 / 360.0));
    }
    SUBCASE("single column without header") {
        auto path = write_temp("rec1col_nohdr.csv", "0.25\n0.5\n0.75\n");
        auto s = lcadc::load_record(path, 360.0);
        CHECK(s.eval(0.0) == 0.25);
        CHECK(s.eval(1.0 / 360.0) == 0.5);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(lcadc::load_record(write_temp("short.csv", "value\n1\n"), 360.0),
                        std::runtime_error);
        CHECK_THROWS_AS(
            lcadc::load_record(write_temp("nonmono.csv", "time_s,value\n0,0\n0,1\n"),
                               std::nullopt),
            std::runtime_error);
        CHECK_THROWS_AS(
            lcadc::load_record(write_temp("garbage.csv", "time_s,value\n0,zero\n1,1\n"),
                               std::nullopt),
            std::runtime_error);
        CHECK_THROWS_AS(lcadc::load_record("/nonexistent/file.csv", std::nullopt),
                        std::runtime_error);
    }
}

TEST_CASE("full-scale scaling") {
    SUBCASE("endpoints map to the margins") {
        auto s = SignalSource::sampled({0.0, 0.5, 1.0}, {-1.0, 0.0, 1.0});
        auto scaled = lcadc::scale_to_full_scale(s, 1.0, 0.0);
        CHECK(scaled.min_value() == 0.0);
        CHECK(scaled.max_value() == 1.0);
        CHECK(scaled.eval(0.5) == doctest::Approx(0.5).epsilon(1e-15));  // affine midpoint

        auto r = SignalSource::sampled({0.0, 1.0}, {0.0, 2.0});
        auto scaled2 = lcadc::scale_to_full_scale(r, 1.0, 0.05);
        CHECK(scaled2.min_value() == doctest::Approx(0.05).epsilon(1e-15));
        CHECK(scaled2.max_value() == doctest::Approx(0.95).epsilon(1e-15));
    }
    SUBCASE("constant record is rejected") {
        auto s = SignalSource::sampled({0.0, 1.0}, {0.7, 0.7});
        CHECK_THROWS_AS(lcadc::scale_to_full_scale(s, 1.0, 0.0), std::invalid_argument);
    }
    SUBCASE("scaled sources stay inside [0, v_fs]") {
        auto sine = lcadc::scale_to_full_scale(SignalSource::sine(0.3, 50.0, 0.1), 1.0, 0.0);
        auto tri = lcadc::scale_to_full_scale(SignalSource::triangle(1.7, 5.0, -2.0), 1.0, 0.0);
        for (int i = 0; i <= 10000; ++i) {
            double t = i * 1e-5;
            for (const auto& s : {sine, tri}) {
                double v = s.eval(t);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
        }
        // analytic scaling preserves the waveform shape
        CHECK(sine.kind() == SignalSource::Kind::Sine);
        CHECK(sine.eval(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    }
}
