#include "lcadc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace lcadc {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace

void write_trace_csv(const std::string& path, const SimTrace& trace) {
    auto out = open_out(path);
    out << "t_cross_s,t_req_s,t_ack_rise_s,t_ack_fall_s,direction,level_after,catch_up,"
           "saturated\n";
    for (const CrossingEvent& ev : trace.events) {
        out << format_double(ev.t_cross) << ',' << format_double(ev.t_req) << ','
            << format_double(ev.t_ack_rise) << ',' << format_double(ev.t_ack_fall) << ','
            << (ev.direction == Direction::Inc ? "inc" : "dec") << ',' << ev.level_after.code
            << ',' << (ev.catch_up ? 1 : 0) << ',' << (ev.saturated ? 1 : 0) << '\n';
    }
}

void write_power_segments_csv(const std::string& path, const SimTrace& trace) {
    auto out = open_out(path);
    out << "t_start_s,t_end_s,state\n";
    for (const PowerSegment& seg : trace.power_segments) {
        out << format_double(seg.t_start) << ',' << format_double(seg.t_end) << ','
            << (seg.state == PowerState::On ? "ON" : "OFF") << '\n';
    }
}

void write_summary_json(const std::string& path, const SimTrace& trace,
                        const PowerReport& power, const ClockConfig& clk) {
    nlohmann::json j;
    j["event_count"] = trace.events.size();
    j["off_fraction"] = power.off_fraction;
    j["mean_power_w"] = power.mean_power_w;
    j["overload_count"] = trace.overload_errors.size();
    j["reduction"] = power.reduction;
    j["duration_s"] = trace.duration;
    j["initial_level"] = trace.initial_level.code;
    j["clock_period_s"] = clk.t_clk_s;
    j["clock_phase_s"] = clk.phase_s;
    write_json(path, j);
}

namespace {

void sweep_row_prefix(std::ofstream& out, const SweepRow& row) {
    out << format_double(row.f_in_hz) << ',' << format_double(row.t_clk_s) << ','
        << format_double(row.off_fraction) << ',' << format_double(row.mean_power_w) << ','
        << (row.feasible ? 1 : 0);
}

}  // namespace

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    auto out = open_out(path);
    out << "f_in_hz,t_clk_s,off_fraction,mean_power_w,feasible\n";
    for (const SweepRow& row : rows) {
        sweep_row_prefix(out, row);
        out << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows,
                     const std::vector<EmpiricalPoint>& measured) {
    if (measured.size() != rows.size())
        throw std::invalid_argument("measured column size mismatch");
    auto out = open_out(path);
    out << "f_in_hz,t_clk_s,off_fraction,mean_power_w,feasible,measured_off_fraction,"
           "measured_mean_power_w\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sweep_row_prefix(out, rows[i]);
        double off = measured[i].simulated ? measured[i].off_fraction : nan;
        double mean = measured[i].simulated ? measured[i].mean_power_w : nan;
        out << ',' << format_double(off) << ',' << format_double(mean) << '\n';
    }
}

void write_reconstruction_csv(const std::string& path, const Reconstruction& rec) {
    auto out = open_out(path);
    out << "t_s,v_hat_v\n";
    for (std::size_t i = 0; i < rec.step_times.size(); ++i)
        out << format_double(rec.step_times[i]) << ',' << format_double(rec.values[i]) << '\n';
    if (!rec.step_times.empty() && rec.step_times.back() < rec.duration)
        out << format_double(rec.duration) << ',' << format_double(rec.values.back()) << '\n';
}

void write_metrics_json(const std::string& path, const TrackingError& err) {
    nlohmann::json j;
    j["rmse_v"] = err.rmse_v;
    j["max_abs_v"] = err.max_abs_v;
    write_json(path, j);
}

std::string ecg_report_json(const EcgReport& report) {
    nlohmann::json j;
    j["avg_reduction"] = report.avg_reduction;
    j["peak_reduction"] = report.peak_reduction;
    j["peak_time_s"] = report.peak_time_s;
    j["t_clk_s"] = report.t_clk_s;
    j["n_crossings"] = report.n_crossings;
    j["overloads"] = report.overloads;
    return j.dump(2);
}

void write_ecg_report_json(const std::string& path, const EcgReport& report) {
    auto out = open_out(path);
    out << ecg_report_json(report) << '\n';
}

void write_ecg_windows_csv(const std::string& path, const EcgReport& report) {
    auto out = open_out(path);
    out << "t_center_s,reduction\n";
    for (const WindowedReduction& w : report.windowed)
        out << format_double(w.t_center_s) << ',' << format_double(w.reduction) << '\n';
}

}  // namespace lcadc
