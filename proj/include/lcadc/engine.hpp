#ifndef LCADC_ENGINE_HPP
#define LCADC_ENGINE_HPP

#include <optional>
#include <vector>

#include "lcadc/ackgen.hpp"
#include "lcadc/adc.hpp"
#include "lcadc/signal.hpp"

namespace lcadc {

struct CrossingEvent {
    double t_cross = 0.0;     // boundary-crossing instant; for catch-up
                              // events the re-enable instant (the real
                              // crossing happened unobserved while off)
    double t_req = 0.0;       // t_cross + t_comp + t_dig
    double t_ack_rise = 0.0;  // register load
    double t_ack_fall = 0.0;  // comparators re-enabled
    Direction direction = Direction::Inc;
    Level level_after;
    bool catch_up = false;
    bool saturated = false;
};

enum class PowerState { On, Off };

struct PowerSegment {
    double t_start;
    double t_end;
    PowerState state;
};

struct OverloadError {
    double t;
    int levels_behind;
};

// Ordered events plus contiguous alternating ON/OFF segments tiling
// [0, duration]. Every OFF segment starts at an event's t_req and ends at
// its t_ack_fall (the final segment may be cut at duration).
struct SimTrace {
    std::vector<CrossingEvent> events;
    std::vector<PowerSegment> power_segments;
    std::vector<OverloadError> overload_errors;
    double duration = 0.0;
    Level initial_level;
};

struct Crossing {
    double t;
    Direction direction;
};

inline constexpr double kCrossingTolS = 1e-12;

// Earliest strict exit from [v_minus, v_plus] in (t_from, t_to], located by
// a forward scan at step min(window/max_slope, max_scan_step)/4 followed by
// bisection to absolute time tolerance tol. The source must start inside
// the window at t_from.
std::optional<Crossing> find_next_crossing(const SignalSource& src, double v_minus,
                                           double v_plus, double t_from, double t_to,
                                           double tol, double max_scan_step);

// Event loop: track until the input leaves the window, apply the comparator
// decision delay, run the FSM/ACK handshake (comparators off from REQ+ to
// ACK-), move the window at the register load, and check for catch-up or
// overload at re-enable.
SimTrace simulate(const SignalSource& src, const AdcConfig& cfg, const ClockConfig& clk,
                  double duration);

}  // namespace lcadc

#endif
