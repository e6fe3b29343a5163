#ifndef LCADC_ECG_HPP
#define LCADC_ECG_HPP

#include <cstddef>
#include <vector>

#include "lcadc/adc.hpp"
#include "lcadc/engine.hpp"
#include "lcadc/power.hpp"
#include "lcadc/signal.hpp"

namespace lcadc {

struct WindowedReduction {
    double t_center_s;
    double reduction;
};

struct EcgReport {
    double avg_reduction = 0.0;
    double peak_reduction = 0.0;
    double peak_time_s = 0.0;   // window center of the peak
    double t_clk_s = 0.0;
    std::size_t n_crossings = 0;
    std::size_t overloads = 0;
    PowerReport overall;
    std::vector<WindowedReduction> windowed;  // stride = window/2
};

// Full-record experiment: pick the ACK clock period from the band limit
// (max_clock_period at A = v_fs/2), simulate the whole record, and report
// the overall reduction plus a sliding-window reduction series with its
// peak. The record must already be scaled into [0, v_fs] and must be at
// least one window long.
EcgReport run_ecg(const SignalSource& record, const AdcConfig& cfg, double ecg_bandwidth_hz,
                  double window_s, double clock_phase_s = 0.0);

}  // namespace lcadc

#endif
