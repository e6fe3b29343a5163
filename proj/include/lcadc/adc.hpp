#ifndef LCADC_ADC_HPP
#define LCADC_ADC_HPP

#include <string>
#include <utility>

namespace lcadc {

// Static converter parameters. The quantization step is derived from
// bits and v_fs, never stored, so it can't drift out of sync.
struct AdcConfig {
    int bits = 5;
    double v_fs = 1.0;
    double t_comp_s = 659.5e-9;  // comparator decision time
    double p_on_w = 12.2e-6;     // power while tracking (comparators on)
    double p_off_w = 6.7e-6;     // power while comparators are off
    double t_dig_s = 0.0;        // digital FSM/datapath propagation

    int num_codes() const { return 1 << bits; }
    int max_code() const { return num_codes() - 1; }
    double delta() const { return v_fs / static_cast<double>(num_codes()); }

    void validate() const;  // throws std::invalid_argument on a bad field
};

// Reads a JSON object with keys bits, v_fs, t_comp_s, p_on_w, p_off_w,
// t_dig_s. Missing keys keep their defaults; unknown keys are rejected.
AdcConfig load_adc_config(const std::string& path);

// Conversion level held in the output register.
struct Level {
    int code = 0;
    bool operator==(const Level&) const = default;
};

enum class Direction { Inc, Dec };

// Ideal code-to-voltage map, code * delta. Accepts codes 0..2^N inclusive
// since the upper window reference needs code+1.
double dac_voltage(int code, const AdcConfig& cfg);

// Window references (v_minus, v_plus) one LSB apart for a level.
std::pair<double, double> window(Level level, const AdcConfig& cfg);

// Largest code with code*delta <= v, clamped to the top code. v must be
// inside [0, v_fs].
Level quantize(double v, const AdcConfig& cfg);

struct LevelUpdate {
    Level level;
    bool saturated = false;  // pinned at a rail, no movement
};

// code +/- 1, saturating at [0, 2^N - 1].
LevelUpdate update_level(Level level, Direction dir, const AdcConfig& cfg);

}  // namespace lcadc

#endif
