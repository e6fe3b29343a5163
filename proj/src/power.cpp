#include "lcadc/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lcadc {

namespace {

PowerReport from_off_fraction(double off_fraction, std::size_t n_crossings, double duration,
                              const AdcConfig& cfg) {
    PowerReport r;
    r.off_fraction = off_fraction;
    r.mean_power_w = cfg.p_on_w * (1.0 - off_fraction) + cfg.p_off_w * off_fraction;
    r.reduction = 1.0 - r.mean_power_w / cfg.p_on_w;
    r.n_crossings = n_crossings;
    r.duration_s = duration;
    return r;
}

}  // namespace

PowerReport measured_power(const SimTrace& trace, const AdcConfig& cfg) {
    cfg.validate();
    if (!(trace.duration > 0.0))
        throw std::invalid_argument("trace duration must be positive");
    double off = 0.0;
    for (const PowerSegment& seg : trace.power_segments) {
        if (seg.state == PowerState::Off)
            off += seg.t_end - seg.t_start;
    }
    return from_off_fraction(off / trace.duration, trace.events.size(), trace.duration, cfg);
}

PowerReport analytic_mean_power(std::size_t n_crossings, const ClockConfig& clk, double t,
                                const AdcConfig& cfg) {
    cfg.validate();
    clk.validate();
    if (!(t > 0.0))
        throw std::invalid_argument("observation time must be positive");
    double t_off = static_cast<double>(n_crossings) * expected_off_time(clk);
    if (t_off > t)
        throw std::invalid_argument("off time exceeds the observation time");
    return from_off_fraction(t_off / t, n_crossings, t, cfg);
}

double max_clock_period(double f_in_hz, double amplitude, const AdcConfig& cfg) {
    cfg.validate();
    if (!(f_in_hz > 0.0))
        throw std::invalid_argument("input frequency must be positive");
    if (!(amplitude > 0.0))
        throw std::invalid_argument("amplitude must be positive");
    return cfg.delta() / (4.0 * std::numbers::pi * f_in_hz * amplitude);
}

double max_tracking_frequency(const AdcConfig& cfg, double amplitude) {
    cfg.validate();
    if (!(amplitude > 0.0))
        throw std::invalid_argument("amplitude must be positive");
    return cfg.delta() / (amplitude * 2.0 * std::numbers::pi * cfg.t_comp_s);
}

std::vector<SweepRow> sweep_off_fraction(const std::vector<double>& f_grid,
                                         const std::vector<double>& clk_grid,
                                         const AdcConfig& cfg) {
    cfg.validate();
    if (f_grid.empty() || clk_grid.empty())
        throw std::invalid_argument("sweep grids must be non-empty");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRow> rows;
    rows.reserve(f_grid.size() * clk_grid.size());
    for (double f : f_grid) {
        double bound = max_clock_period(f, cfg.v_fs / 2.0, cfg);
        for (double t_clk : clk_grid) {
            if (!(t_clk > 0.0))
                throw std::invalid_argument("clock periods must be positive");
            SweepRow row{f, t_clk, nan, nan, t_clk <= bound};
            if (row.feasible) {
                // crossings per second of a full-scale sine, over t = 1 s
                double n = static_cast<double>(sine_crossings_per_period(cfg)) * f;
                double off = n * 1.5 * t_clk;
                row.off_fraction = off;
                row.mean_power_w = cfg.p_on_w * (1.0 - off) + cfg.p_off_w * off;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_off_fraction_factors(const std::vector<double>& f_grid,
                                                 const std::vector<double>& factors,
                                                 const AdcConfig& cfg) {
    cfg.validate();
    if (f_grid.empty() || factors.empty())
        throw std::invalid_argument("sweep grids must be non-empty");

    std::vector<SweepRow> rows;
    rows.reserve(f_grid.size() * factors.size());
    for (double f : f_grid) {
        double bound = max_clock_period(f, cfg.v_fs / 2.0, cfg);
        for (double factor : factors) {
            auto sub = sweep_off_fraction({f}, {factor * bound}, cfg);
            rows.push_back(sub.front());
        }
    }
    return rows;
}

OffTimeIndex::OffTimeIndex(const SimTrace& trace) {
    prefix_.push_back(0.0);
    for (const PowerSegment& seg : trace.power_segments) {
        if (seg.state != PowerState::Off)
            continue;
        starts_.push_back(seg.t_start);
        ends_.push_back(seg.t_end);
        prefix_.push_back(prefix_.back() + (seg.t_end - seg.t_start));
    }
}

double OffTimeIndex::total_off() const {
    return prefix_.back();
}

double OffTimeIndex::off_between(double a, double b) const {
    if (!(b > a))
        return 0.0;
    // first segment ending after a
    auto it = std::upper_bound(ends_.begin(), ends_.end(), a);
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(it - ends_.begin()); i < starts_.size(); ++i) {
        if (starts_[i] >= b)
            break;
        sum += std::min(ends_[i], b) - std::max(starts_[i], a);
    }
    return sum;
}

}  // namespace lcadc
