#include "lcadc/ecg.hpp"

#include <cmath>
#include <stdexcept>

namespace lcadc {

EcgReport run_ecg(const SignalSource& record, const AdcConfig& cfg, double ecg_bandwidth_hz,
                  double window_s, double clock_phase_s) {
    cfg.validate();
    if (!(ecg_bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    if (!(window_s > 0.0))
        throw std::invalid_argument("window must be positive");
    double duration = record.duration();
    if (!std::isfinite(duration))
        throw std::invalid_argument("record must be a sampled source");
    if (duration < window_s)
        throw std::invalid_argument("record shorter than one window");

    EcgReport report;
    report.t_clk_s = max_clock_period(ecg_bandwidth_hz, cfg.v_fs / 2.0, cfg);

    ClockConfig clk{report.t_clk_s, clock_phase_s, 0};
    SimTrace trace = simulate(record, cfg, clk, duration);

    report.overall = measured_power(trace, cfg);
    report.avg_reduction = report.overall.reduction;
    report.n_crossings = trace.events.size();
    report.overloads = trace.overload_errors.size();

    // sliding windows, half-window stride; reduction is linear in off time
    OffTimeIndex off(trace);
    double slope = 1.0 - cfg.p_off_w / cfg.p_on_w;
    double stride = window_s / 2.0;
    for (double t0 = 0.0; t0 + window_s <= duration * (1.0 + 1e-12); t0 += stride) {
        double t1 = std::min(t0 + window_s, duration);
        double reduction = off.off_between(t0, t1) / window_s * slope;
        report.windowed.push_back({t0 + window_s / 2.0, reduction});
        if (reduction > report.peak_reduction) {
            report.peak_reduction = reduction;
            report.peak_time_s = t0 + window_s / 2.0;
        }
    }
    return report;
}

}  // namespace lcadc
