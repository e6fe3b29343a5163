#include "lcadc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "lcadc/afsm.hpp"

namespace lcadc {

namespace {

constexpr int kMaxBisectIters = 256;

int levels_behind(double v, Level level, const AdcConfig& cfg) {
    double vc = std::clamp(v, 0.0, cfg.v_fs);
    int target = quantize(vc, cfg).code;
    return std::abs(target - level.code);
}

}  // namespace

std::optional<Crossing> find_next_crossing(const SignalSource& src, double v_minus,
                                           double v_plus, double t_from, double t_to,
                                           double tol, double max_scan_step) {
    if (!(t_from < t_to))
        throw std::invalid_argument("empty search interval");
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    if (!(max_scan_step > 0.0))
        throw std::invalid_argument("scan step must be positive");
    if (!(v_plus > v_minus))
        throw std::invalid_argument("window is empty");

    double v0 = src.eval(t_from);
    if (v0 < v_minus || v0 > v_plus)
        throw std::invalid_argument("source starts outside the window");

    // step small enough that the source cannot traverse the window between
    // two scan points
    double step = max_scan_step;
    double slope = src.max_slope();
    if (slope > 0.0)
        step = std::min(step, (v_plus - v_minus) / slope);
    step *= 0.25;

    double prev = t_from;
    while (prev < t_to) {
        double next = std::min(prev + step, t_to);
        double v = src.eval(next);
        if (v > v_plus || v < v_minus) {
            // bisect the first exit inside (prev, next]
            double lo = prev;
            double hi = next;
            bool up = v > v_plus;
            int iters = 0;
            while (hi - lo > tol) {
                if (++iters > kMaxBisectIters)
                    throw std::runtime_error("crossing bisection did not reach tolerance");
                double mid = lo + 0.5 * (hi - lo);
                double vm = src.eval(mid);
                if (vm > v_plus) {
                    hi = mid;
                    up = true;
                } else if (vm < v_minus) {
                    hi = mid;
                    up = false;
                } else {
                    lo = mid;
                }
            }
            return Crossing{hi, up ? Direction::Inc : Direction::Dec};
        }
        prev = next;
    }
    return std::nullopt;
}

SimTrace simulate(const SignalSource& src, const AdcConfig& cfg, const ClockConfig& clk,
                  double duration) {
    cfg.validate();
    clk.validate();
    if (!(duration > 0.0))
        throw std::invalid_argument("duration must be positive");
    double v0 = src.eval(0.0);
    if (v0 < 0.0 || v0 > cfg.v_fs)
        throw std::invalid_argument("input starts outside [0, v_fs]");

    SimTrace trace;
    trace.duration = duration;
    trace.initial_level = quantize(v0, cfg);

    Level level = trace.initial_level;
    auto [v_minus, v_plus] = window(level, cfg);

    AfsmSignals fsm;  // tracking: ON high, everything else low
    double on_since = 0.0;
    double t_search = 0.0;
    bool forced_catch_up = false;
    Direction forced_dir = Direction::Inc;

    while (true) {
        double t_cross;
        Direction dir;
        bool catch_up;
        if (forced_catch_up) {
            t_cross = t_search;
            dir = forced_dir;
            catch_up = true;
            forced_catch_up = false;
        } else {
            auto c = find_next_crossing(src, v_minus, v_plus, t_search, duration, kCrossingTolS,
                                        clk.t_clk_s);
            if (!c) {
                trace.power_segments.push_back({on_since, duration, PowerState::On});
                break;
            }
            t_cross = c->t;
            dir = c->direction;
            catch_up = false;
        }

        double t_req = t_cross + cfg.t_comp_s + cfg.t_dig_s;
        if (t_req >= duration) {
            // decision still in flight when the trace ends
            trace.power_segments.push_back({on_since, duration, PowerState::On});
            break;
        }

        // comparator fires: FSM drops ON, raises REQ (SEL tracks DEC)
        fsm = afsm_eval(fsm, dir == Direction::Inc, dir == Direction::Dec, false);
        if (fsm.on || !fsm.req || fsm.sel != (dir == Direction::Dec))
            throw std::logic_error("FSM: crossing must drop ON and raise REQ");
        // comparator outputs discharge as ON falls
        fsm = afsm_eval(fsm, false, false, false);
        if (fsm.on || !fsm.req)
            throw std::logic_error("FSM: REQ must hold until ACK");

        AckTimes ack = ack_times(t_req, clk);

        // the register captures the operand select just before ACK+
        bool sel_before_ack = fsm.sel;
        fsm = afsm_eval(fsm, false, false, true);
        if (!fsm.l || fsm.req || fsm.on)
            throw std::logic_error("FSM: ACK+ must load the register and clear REQ");
        Direction load_dir = sel_before_ack ? Direction::Dec : Direction::Inc;
        LevelUpdate upd = update_level(level, load_dir, cfg);

        fsm = afsm_eval(fsm, false, false, false);
        if (!fsm.on || fsm.l)
            throw std::logic_error("FSM: ACK- must re-enable tracking");

        trace.events.push_back({t_cross, t_req, ack.rise_s, ack.fall_s, load_dir, upd.level,
                                catch_up, upd.saturated});
        trace.power_segments.push_back({on_since, t_req, PowerState::On});

        level = upd.level;
        std::tie(v_minus, v_plus) = window(level, cfg);

        if (ack.fall_s >= duration) {
            trace.power_segments.push_back({t_req, duration, PowerState::Off});
            break;
        }
        trace.power_segments.push_back({t_req, ack.fall_s, PowerState::Off});
        on_since = ack.fall_s;
        t_search = ack.fall_s;

        // at re-enable the input may already be outside the moved window
        double v = src.eval(t_search);
        if (v > v_plus || v < v_minus) {
            forced_catch_up = true;
            forced_dir = v > v_plus ? Direction::Inc : Direction::Dec;
            int behind = levels_behind(v, level, cfg);
            if (behind >= 2)
                trace.overload_errors.push_back({t_search, behind});
        }
    }
    return trace;
}

}  // namespace lcadc
