#include "lcadc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcadc {

double Reconstruction::value_at(double t) const {
    if (t <= step_times.front())
        return values.front();
    auto it = std::upper_bound(step_times.begin(), step_times.end(), t);
    return values[static_cast<std::size_t>(it - step_times.begin()) - 1];
}

Reconstruction reconstruct(const SimTrace& trace, const AdcConfig& cfg) {
    cfg.validate();
    Reconstruction rec;
    rec.duration = trace.duration;
    double delta = cfg.delta();
    rec.step_times.push_back(0.0);
    rec.values.push_back((trace.initial_level.code + 0.5) * delta);
    for (const CrossingEvent& ev : trace.events) {
        if (ev.saturated)
            continue;  // rail-pinned handshake, the register did not move
        rec.step_times.push_back(ev.t_ack_rise);
        rec.values.push_back((ev.level_after.code + 0.5) * delta);
    }
    return rec;
}

TrackingError tracking_error(const SignalSource& src, const Reconstruction& rec,
                             std::span<const double> grid) {
    if (grid.empty())
        throw std::invalid_argument("error grid must be non-empty");
    double sum_sq = 0.0;
    double max_abs = 0.0;
    for (double t : grid) {
        double e = src.eval(t) - rec.value_at(t);
        sum_sq += e * e;
        max_abs = std::max(max_abs, std::abs(e));
    }
    return {std::sqrt(sum_sq / static_cast<double>(grid.size())), max_abs};
}

}  // namespace lcadc
