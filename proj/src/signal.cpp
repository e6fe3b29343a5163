#include "lcadc/signal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace lcadc {

namespace {

double clamp_opt(double v, bool clamped, double lo, double hi) {
    if (!clamped)
        return v;
    return std::clamp(v, lo, hi);
}

}  // namespace

SignalSource SignalSource::sine(double amplitude, double frequency, double offset) {
    if (amplitude < 0.0)
        throw std::invalid_argument("amplitude must be non-negative");
    if (!(frequency > 0.0))
        throw std::invalid_argument("frequency must be positive");
    SignalSource s;
    s.kind_ = Kind::Sine;
    s.amplitude_ = amplitude;
    s.frequency_ = frequency;
    s.offset_ = offset;
    return s;
}

SignalSource SignalSource::triangle(double amplitude, double frequency, double offset) {
    if (amplitude < 0.0)
        throw std::invalid_argument("amplitude must be non-negative");
    if (!(frequency > 0.0))
        throw std::invalid_argument("frequency must be positive");
    SignalSource s;
    s.kind_ = Kind::Triangle;
    s.amplitude_ = amplitude;
    s.frequency_ = frequency;
    s.offset_ = offset;
    return s;
}

SignalSource SignalSource::sampled(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("times/values size mismatch");
    if (times.size() < 2)
        throw std::invalid_argument("sampled source needs at least 2 samples");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("sample times must be strictly increasing");
    }
    SignalSource s;
    s.kind_ = Kind::Sampled;
    s.times_ = std::move(times);
    s.values_ = std::move(values);
    return s;
}

double SignalSource::eval(double t) const {
    switch (kind_) {
        case Kind::Sine: {
            double v = offset_ + amplitude_ * std::sin(2.0 * std::numbers::pi * frequency_ * t);
            return clamp_opt(v, clamped_, clamp_lo_, clamp_hi_);
        }
        case Kind::Triangle: {
            double period = 1.0 / frequency_;
            double u = std::fmod(t, period);
            if (u < 0.0)
                u += period;
            u /= period;  // phase in [0, 1)
            double v;
            if (u <= 0.25)
                v = offset_ + amplitude_ * (4.0 * u);
            else if (u <= 0.75)
                v = offset_ + amplitude_ * (2.0 - 4.0 * u);
            else
                v = offset_ + amplitude_ * (4.0 * u - 4.0);
            return clamp_opt(v, clamped_, clamp_lo_, clamp_hi_);
        }
        case Kind::Sampled: {
            if (t <= times_.front())
                return values_.front();
            if (t >= times_.back())
                return values_.back();
            auto it = std::upper_bound(times_.begin(), times_.end(), t);
            std::size_t i = static_cast<std::size_t>(it - times_.begin()) - 1;
            double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
            // v_i + w*(dv) returns v_i exactly when t hits a sample time
            return values_[i] + w * (values_[i + 1] - values_[i]);
        }
    }
    throw std::logic_error("unreachable");
}

double SignalSource::max_slope() const {
    switch (kind_) {
        case Kind::Sine:
            return 2.0 * std::numbers::pi * frequency_ * amplitude_;
        case Kind::Triangle:
            return 4.0 * amplitude_ * frequency_;
        case Kind::Sampled: {
            double m = 0.0;
            for (std::size_t i = 1; i < times_.size(); ++i) {
                double s = std::abs((values_[i] - values_[i - 1]) / (times_[i] - times_[i - 1]));
                m = std::max(m, s);
            }
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

double SignalSource::min_value() const {
    if (kind_ == Kind::Sampled)
        return *std::min_element(values_.begin(), values_.end());
    double v = offset_ - amplitude_;
    return clamp_opt(v, clamped_, clamp_lo_, clamp_hi_);
}

double SignalSource::max_value() const {
    if (kind_ == Kind::Sampled)
        return *std::max_element(values_.begin(), values_.end());
    double v = offset_ + amplitude_;
    return clamp_opt(v, clamped_, clamp_lo_, clamp_hi_);
}

double SignalSource::duration() const {
    if (kind_ == Kind::Sampled)
        return times_.back();
    return std::numeric_limits<double>::infinity();
}

namespace {

bool has_alpha(const std::string& s) {
    for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c)))
            return true;
    }
    return false;
}

std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(',', pos);
        if (next == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
}

double parse_number(const std::string& field, const std::string& path, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(field, &used);
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
            ++used;
        if (used != field.size())
            throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": cannot parse '" +
                                 field + "' as a number");
    }
}

}  // namespace

SignalSource load_record(const std::string& path, std::optional<double> sample_rate_hz) {
    if (sample_rate_hz && !(*sample_rate_hz > 0.0))
        throw std::invalid_argument("sample rate must be positive");

    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open record file: " + path);

    std::vector<double> times;
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!header_checked) {
            header_checked = true;
            if (has_alpha(line))
                continue;  // header row
        }
        auto fields = split_comma(line);
        if (sample_rate_hz) {
            if (fields.size() != 1)
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected a single value column");
            values.push_back(parse_number(fields[0], path, line_no));
            times.push_back(static_cast<double>(values.size() - 1) / *sample_rate_hz);
        } else {
            if (fields.size() != 2)
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected time_s,value columns");
            times.push_back(parse_number(fields[0], path, line_no));
            values.push_back(parse_number(fields[1], path, line_no));
        }
    }
    if (values.size() < 2)
        throw std::runtime_error(path + ": record needs at least 2 samples");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::runtime_error(path + ": time column must be strictly increasing");
    }
    return SignalSource::sampled(std::move(times), std::move(values));
}

SignalSource scale_to_full_scale(const SignalSource& src, double v_fs, double margin) {
    if (!(v_fs > 0.0))
        throw std::invalid_argument("v_fs must be positive");
    if (margin < 0.0 || margin >= 0.5)
        throw std::invalid_argument("margin must be in [0, 0.5)");

    double mn = src.min_value();
    double mx = src.max_value();
    if (!(mx > mn))
        throw std::invalid_argument("cannot scale a constant (zero-span) source");

    double lo = margin * v_fs;
    double hi = (1.0 - margin) * v_fs;
    double k = (hi - lo) / (mx - mn);

    SignalSource out = src;
    out.clamped_ = true;
    out.clamp_lo_ = lo;
    out.clamp_hi_ = hi;
    if (src.kind() == SignalSource::Kind::Sampled) {
        for (auto& v : out.values_)
            v = std::clamp(lo + (v - mn) * k, lo, hi);
    } else {
        // affine image of offset + A*wave is another source of the same kind
        out.amplitude_ = src.amplitude_ * k;
        out.offset_ = lo + (src.offset_ - mn) * k;
    }
    return out;
}

}  // namespace lcadc
