#ifndef LCADC_POWER_HPP
#define LCADC_POWER_HPP

#include <cstddef>
#include <vector>

#include "lcadc/ackgen.hpp"
#include "lcadc/adc.hpp"
#include "lcadc/engine.hpp"

namespace lcadc {

struct PowerReport {
    double mean_power_w = 0.0;
    double off_fraction = 0.0;
    double reduction = 0.0;  // 1 - mean_power/p_on
    std::size_t n_crossings = 0;
    double duration_s = 0.0;
};

// Power accounting straight off a trace: off_fraction from the OFF
// segments, mean power as the linear mix of p_on and p_off.
PowerReport measured_power(const SimTrace& trace, const AdcConfig& cfg);

// Closed-form estimate: T_OFF = n_crossings * 3*t_clk/2 over a span t.
PowerReport analytic_mean_power(std::size_t n_crossings, const ClockConfig& clk, double t,
                                const AdcConfig& cfg);

// Largest ACK clock period that still answers before the next worst-case
// crossing of a sine at f_in: delta / (4*pi*f_in*A).
double max_clock_period(double f_in_hz, double amplitude, const AdcConfig& cfg);

// Fastest full-scale sine the tracker can follow given the comparator
// decision time: delta / (A*2*pi*t_comp).
double max_tracking_frequency(const AdcConfig& cfg, double amplitude);

// A full-scale sine strictly crosses each interior boundary twice per
// period; the peaks only touch the rails.
inline std::size_t sine_crossings_per_period(const AdcConfig& cfg) {
    return 2u * static_cast<std::size_t>(cfg.max_code());
}

struct SweepRow {
    double f_in_hz;
    double t_clk_s;
    double off_fraction;   // NaN when infeasible
    double mean_power_w;   // NaN when infeasible
    bool feasible;
};

// Off-fraction table over (input frequency) x (clock period) for a
// full-scale sine (A = v_fs/2). Entries with t_clk above the bound are
// marked infeasible.
std::vector<SweepRow> sweep_off_fraction(const std::vector<double>& f_grid,
                                         const std::vector<double>& clk_grid,
                                         const AdcConfig& cfg);

// Same table with per-frequency periods factor * max_clock_period(f).
std::vector<SweepRow> sweep_off_fraction_factors(const std::vector<double>& f_grid,
                                                 const std::vector<double>& factors,
                                                 const AdcConfig& cfg);

// Prefix-sum index over a trace's OFF segments for windowed queries.
class OffTimeIndex {
  public:
    explicit OffTimeIndex(const SimTrace& trace);

    double off_between(double a, double b) const;
    double total_off() const;

  private:
    std::vector<double> starts_;
    std::vector<double> ends_;
    std::vector<double> prefix_;
};

}  // namespace lcadc

#endif
