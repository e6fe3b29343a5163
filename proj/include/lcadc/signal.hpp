#ifndef LCADC_SIGNAL_HPP
#define LCADC_SIGNAL_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace lcadc {

// Continuous-time input source: analytic sine/triangle generators or a
// linearly interpolated sampled record. Immutable once constructed, so a
// single instance can be evaluated from concurrent simulation runs.
class SignalSource {
  public:
    enum class Kind { Sine, Triangle, Sampled };

    // offset + A*sin(2*pi*f*t)
    static SignalSource sine(double amplitude, double frequency, double offset);

    // Symmetric triangle, peak-to-peak 2A centered on offset, period 1/f,
    // rising from t = 0.
    static SignalSource triangle(double amplitude, double frequency, double offset);

    // Sampled record with strictly increasing times; evaluation clamps to
    // the first/last sample outside the record.
    static SignalSource sampled(std::vector<double> times, std::vector<double> values);

    double eval(double t) const;

    // Upper bound on |d/dt eval| (0 for a constant source).
    double max_slope() const;

    double min_value() const;
    double max_value() const;

    Kind kind() const { return kind_; }

    // Last sample time for records, +inf for analytic sources.
    double duration() const;

  private:
    SignalSource() = default;

    Kind kind_ = Kind::Sine;
    double amplitude_ = 0.0;
    double frequency_ = 0.0;
    double offset_ = 0.0;
    std::vector<double> times_;
    std::vector<double> values_;
    // Range clamp installed by full-scale scaling; keeps rounding of the
    // affine map from ever leaking outside the target range.
    bool clamped_ = false;
    double clamp_lo_ = 0.0;
    double clamp_hi_ = 0.0;

    friend SignalSource scale_to_full_scale(const SignalSource& src, double v_fs, double margin);
};

// CSV record loader. Accepts either two columns "time_s,value" with a
// header row, or a single "value" column plus an explicit sample rate.
SignalSource load_record(const std::string& path, std::optional<double> sample_rate_hz);

// Affine map sending [min, max] of the source onto
// [margin*v_fs, (1-margin)*v_fs]. Rejects constant (zero-span) sources.
SignalSource scale_to_full_scale(const SignalSource& src, double v_fs, double margin);

}  // namespace lcadc

#endif
