#include "lcadc/ackgen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lcadc {

void ClockConfig::validate() const {
    if (!(t_clk_s > 0.0))
        throw std::invalid_argument("clock period must be positive");
    if (phase_s < 0.0 || phase_s >= t_clk_s)
        throw std::invalid_argument("clock phase must be in [0, t_clk)");
}

ClockConfig ClockConfig::with_random_phase(double t_clk_s, std::uint64_t seed) {
    if (!(t_clk_s > 0.0))
        throw std::invalid_argument("clock period must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, t_clk_s);
    ClockConfig clk{t_clk_s, u(rng), seed};
    if (clk.phase_s >= t_clk_s)
        clk.phase_s = 0.0;
    return clk;
}

AckTimes ack_times(double t_req, const ClockConfig& clk) {
    clk.validate();
    if (t_req < 0.0)
        throw std::invalid_argument("request time must be non-negative");

    double k = std::floor((t_req - clk.phase_s) / clk.t_clk_s) + 1.0;
    if (k < 0.0)
        k = 0.0;
    double rise = clk.phase_s + k * clk.t_clk_s;
    // strict tie-break: a request exactly on an edge waits for the next one
    while (rise <= t_req)
        rise += clk.t_clk_s;
    while (rise - clk.t_clk_s > t_req && rise - clk.t_clk_s >= clk.phase_s)
        rise -= clk.t_clk_s;
    return {rise, rise + clk.t_clk_s};
}

double expected_off_time(const ClockConfig& clk) {
    clk.validate();
    return 1.5 * clk.t_clk_s;
}

}  // namespace lcadc
