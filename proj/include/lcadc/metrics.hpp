#ifndef LCADC_METRICS_HPP
#define LCADC_METRICS_HPP

#include <span>
#include <vector>

#include "lcadc/adc.hpp"
#include "lcadc/engine.hpp"
#include "lcadc/signal.hpp"

namespace lcadc {

// Piecewise-constant readout at window midpoints, (code + 0.5)*delta,
// stepping at each register-load instant.
struct Reconstruction {
    std::vector<double> step_times;  // step_times[0] == 0
    std::vector<double> values;      // values[i] holds on [step_times[i], step_times[i+1])
    double duration = 0.0;

    double value_at(double t) const;
};

Reconstruction reconstruct(const SimTrace& trace, const AdcConfig& cfg);

struct TrackingError {
    double rmse_v;
    double max_abs_v;
};

TrackingError tracking_error(const SignalSource& src, const Reconstruction& rec,
                             std::span<const double> grid);

}  // namespace lcadc

#endif
