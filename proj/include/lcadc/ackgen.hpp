#ifndef LCADC_ACKGEN_HPP
#define LCADC_ACKGEN_HPP

#include <cstdint>

namespace lcadc {

// Free-running acknowledge clock with rising edges at phase + k*t_clk.
// The generator sits outside the converter model and answers REQ pulses.
struct ClockConfig {
    double t_clk_s = 1e-6;
    double phase_s = 0.0;  // time of the first rising edge, in [0, t_clk)
    std::uint64_t seed = 0;

    void validate() const;

    static ClockConfig with_random_phase(double t_clk_s, std::uint64_t seed);
};

struct AckTimes {
    double rise_s;
    double fall_s;
};

// ACK rises at the first clock edge strictly after t_req and falls exactly
// one period later (the second rising edge after REQ+). A request landing
// exactly on an edge waits for the next one.
AckTimes ack_times(double t_req, const ClockConfig& clk);

// Expected comparator-off span per handshake: half a period of waiting for
// the first edge plus a full period until the second, 3*t_clk/2.
double expected_off_time(const ClockConfig& clk);

}  // namespace lcadc

#endif
