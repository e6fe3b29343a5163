#include "lcadc/adc.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace lcadc {

void AdcConfig::validate() const {
    if (bits < 1 || bits > 30)
        throw std::invalid_argument("bits must be in [1, 30]");
    if (!(v_fs > 0.0))
        throw std::invalid_argument("v_fs must be positive");
    if (!(t_comp_s > 0.0))
        throw std::invalid_argument("t_comp_s must be positive");
    if (t_dig_s < 0.0)
        throw std::invalid_argument("t_dig_s must be non-negative");
    if (p_off_w < 0.0 || p_off_w > p_on_w)
        throw std::invalid_argument("power levels must satisfy 0 <= p_off <= p_on");
}

AdcConfig load_adc_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config " + path + ": " + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("config " + path + ": expected a JSON object");

    static const std::set<std::string> known = {"bits",   "v_fs",    "t_comp_s",
                                                "p_on_w", "p_off_w", "t_dig_s"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key()))
            throw std::runtime_error("config " + path + ": unknown key '" + item.key() + "'");
    }

    AdcConfig cfg;
    cfg.bits = j.value("bits", cfg.bits);
    cfg.v_fs = j.value("v_fs", cfg.v_fs);
    cfg.t_comp_s = j.value("t_comp_s", cfg.t_comp_s);
    cfg.p_on_w = j.value("p_on_w", cfg.p_on_w);
    cfg.p_off_w = j.value("p_off_w", cfg.p_off_w);
    cfg.t_dig_s = j.value("t_dig_s", cfg.t_dig_s);
    cfg.validate();
    return cfg;
}

double dac_voltage(int code, const AdcConfig& cfg) {
    if (code < 0 || code > cfg.num_codes())
        throw std::invalid_argument("DAC code out of range");
    return static_cast<double>(code) * cfg.delta();
}

std::pair<double, double> window(Level level, const AdcConfig& cfg) {
    if (level.code < 0 || level.code > cfg.max_code())
        throw std::invalid_argument("level out of range");
    return {dac_voltage(level.code, cfg), dac_voltage(level.code + 1, cfg)};
}

Level quantize(double v, const AdcConfig& cfg) {
    if (v < 0.0 || v > cfg.v_fs)
        throw std::invalid_argument("voltage outside [0, v_fs]");
    int code = static_cast<int>(std::floor(v / cfg.delta()));
    if (code > cfg.max_code())
        code = cfg.max_code();
    return Level{code};
}

LevelUpdate update_level(Level level, Direction dir, const AdcConfig& cfg) {
    if (level.code < 0 || level.code > cfg.max_code())
        throw std::invalid_argument("level out of range");
    if (dir == Direction::Inc) {
        if (level.code == cfg.max_code())
            return {level, true};
        return {Level{level.code + 1}, false};
    }
    if (level.code == 0)
        return {level, true};
    return {Level{level.code - 1}, false};
}

}  // namespace lcadc
