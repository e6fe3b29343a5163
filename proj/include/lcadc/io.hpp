#ifndef LCADC_IO_HPP
#define LCADC_IO_HPP

#include <string>
#include <vector>

#include "lcadc/ecg.hpp"
#include "lcadc/engine.hpp"
#include "lcadc/metrics.hpp"
#include "lcadc/power.hpp"

namespace lcadc {

// Shortest round-trip decimal form, locale-independent. Every emitter goes
// through this so identical runs produce byte-identical files.
std::string format_double(double v);

void write_trace_csv(const std::string& path, const SimTrace& trace);
void write_power_segments_csv(const std::string& path, const SimTrace& trace);
void write_summary_json(const std::string& path, const SimTrace& trace,
                        const PowerReport& power, const ClockConfig& clk);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

// Infeasible or skipped points carry no measured columns (written as nan).
struct EmpiricalPoint {
    double off_fraction = 0.0;
    double mean_power_w = 0.0;
    bool simulated = false;
};
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows,
                     const std::vector<EmpiricalPoint>& measured);

void write_reconstruction_csv(const std::string& path, const Reconstruction& rec);
void write_metrics_json(const std::string& path, const TrackingError& err);

void write_ecg_report_json(const std::string& path, const EcgReport& report);
std::string ecg_report_json(const EcgReport& report);
void write_ecg_windows_csv(const std::string& path, const EcgReport& report);

}  // namespace lcadc

#endif
