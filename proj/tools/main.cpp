// Command-line front end: simulate | sweep | ecg | bounds | check-afsm.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcadc/afsm.hpp"
#include "lcadc/ecg.hpp"
#include "lcadc/engine.hpp"
#include "lcadc/io.hpp"
#include "lcadc/metrics.hpp"
#include "lcadc/power.hpp"

namespace fs = std::filesystem;
using namespace lcadc;

namespace {

// flag/flag-combination problems that CLI11 cannot express; exit code 1
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::optional<int> bits;
    std::optional<double> v_fs, t_comp, p_on, p_off, t_dig;

    AdcConfig adc() const {
        AdcConfig cfg = config_path.empty() ? AdcConfig{} : load_adc_config(config_path);
        if (bits) cfg.bits = *bits;
        if (v_fs) cfg.v_fs = *v_fs;
        if (t_comp) cfg.t_comp_s = *t_comp;
        if (p_on) cfg.p_on_w = *p_on;
        if (p_off) cfg.p_off_w = *p_off;
        if (t_dig) cfg.t_dig_s = *t_dig;
        cfg.validate();
        return cfg;
    }

    fs::path out_path(const std::string& name) const {
        fs::create_directories(out_dir);
        return fs::path(out_dir) / name;
    }
};

struct SignalOpts {
    std::string kind;
    double freq = 0.0;
    std::optional<double> amp, offset;
    std::string record_path;
    std::optional<double> fs;
    double margin = 0.0;

    SignalSource build(const AdcConfig& cfg) const {
        if (kind == "sampled") {
            if (record_path.empty())
                throw UsageError("--record is required for --signal sampled");
            return scale_to_full_scale(load_record(record_path, fs), cfg.v_fs, margin);
        }
        if (!(freq > 0.0))
            throw UsageError("--freq is required for analytic signals");
        double a = amp.value_or(cfg.v_fs / 2.0);
        double o = offset.value_or(cfg.v_fs / 2.0);
        return kind == "sine" ? SignalSource::sine(a, freq, o)
                              : SignalSource::triangle(a, freq, o);
    }
};

struct ClockOpts {
    std::optional<double> period;
    double phase = 0.0;
    bool random_phase = false;

    ClockConfig build(std::uint64_t seed) const {
        if (!period)
            throw UsageError("--clock-period is required");
        if (random_phase)
            return ClockConfig::with_random_phase(*period, seed);
        return ClockConfig{*period, phase, seed};
    }
};

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1)
        throw UsageError("bad frequency grid");
    std::vector<double> g;
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < points; ++i)
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return g;
}

int check_overload_budget(std::size_t overloads, const std::optional<std::uint64_t>& budget) {
    if (budget && overloads > *budget) {
        std::cerr << "error: " << overloads << " overload events exceed the budget of "
                  << *budget << "\n";
        return 2;
    }
    return 0;
}

int run_simulate(const CommonOpts& common, const SignalOpts& sig_opts,
                 const ClockOpts& clk_opts, double duration, bool with_reconstruction,
                 const std::optional<std::uint64_t>& max_overloads) {
    AdcConfig cfg = common.adc();
    SignalSource src = sig_opts.build(cfg);
    ClockConfig clk = clk_opts.build(common.seed);

    SimTrace trace = simulate(src, cfg, clk, duration);
    PowerReport power = measured_power(trace, cfg);

    write_trace_csv(common.out_path("trace.csv").string(), trace);
    write_power_segments_csv(common.out_path("power_segments.csv").string(), trace);
    write_summary_json(common.out_path("summary.json").string(), trace, power, clk);

    if (with_reconstruction) {
        Reconstruction rec = reconstruct(trace, cfg);
        write_reconstruction_csv(common.out_path("reconstruction.csv").string(), rec);
        std::size_t n = std::clamp<std::size_t>(64 * (trace.events.size() + 1), 1000, 2000000);
        std::vector<double> grid(n);
        for (std::size_t i = 0; i < n; ++i)
            grid[i] = (static_cast<double>(i) + 0.5) * duration / static_cast<double>(n);
        write_metrics_json(common.out_path("metrics.json").string(),
                           tracking_error(src, rec, grid));
    }

    std::cout << "events=" << trace.events.size() << " off_fraction=" << power.off_fraction
              << " mean_power_w=" << power.mean_power_w
              << " overloads=" << trace.overload_errors.size() << "\n";
    return check_overload_budget(trace.overload_errors.size(), max_overloads);
}

int run_sweep(const CommonOpts& common, double fmin, double fmax, int points,
              std::vector<double> clk_factors, const std::vector<double>& clk_periods,
              bool empirical, double periods_per_point) {
    AdcConfig cfg = common.adc();
    std::vector<double> f_grid = log_grid(fmin, fmax, points);

    std::vector<SweepRow> rows;
    if (!clk_periods.empty())
        rows = sweep_off_fraction(f_grid, clk_periods, cfg);
    else
        rows = sweep_off_fraction_factors(f_grid, clk_factors, cfg);

    fs::path out = common.out_path("sweep.csv");
    if (!empirical) {
        write_sweep_csv(out.string(), rows);
    } else {
        std::vector<EmpiricalPoint> measured(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].feasible)
                continue;  // never simulated past the bound
            SignalSource src =
                SignalSource::sine(cfg.v_fs / 2.0, rows[i].f_in_hz, cfg.v_fs / 2.0);
            ClockConfig clk = ClockConfig::with_random_phase(rows[i].t_clk_s, common.seed + i);
            double duration = periods_per_point / rows[i].f_in_hz;
            PowerReport p = measured_power(simulate(src, cfg, clk, duration), cfg);
            measured[i] = {p.off_fraction, p.mean_power_w, true};
        }
        write_sweep_csv(out.string(), rows, measured);
    }
    std::cout << "wrote " << rows.size() << " sweep points to " << out.string() << "\n";
    return 0;
}

int run_ecg_cmd(const CommonOpts& common, const std::string& record_path,
                std::optional<double> fs, double margin, double bandwidth, double window,
                double phase, bool random_phase,
                const std::optional<std::uint64_t>& max_overloads) {
    AdcConfig cfg = common.adc();
    SignalSource record = scale_to_full_scale(load_record(record_path, fs), cfg.v_fs, margin);

    double clock_phase = phase;
    if (random_phase) {
        double t_clk = max_clock_period(bandwidth, cfg.v_fs / 2.0, cfg);
        clock_phase = ClockConfig::with_random_phase(t_clk, common.seed).phase_s;
    }
    EcgReport report = run_ecg(record, cfg, bandwidth, window, clock_phase);

    write_ecg_report_json(common.out_path("ecg_report.json").string(), report);
    write_ecg_windows_csv(common.out_path("ecg_windows.csv").string(), report);
    std::cout << ecg_report_json(report) << "\n";
    return check_overload_budget(report.overloads, max_overloads);
}

int run_bounds(const CommonOpts& common, double fin, std::optional<double> amp) {
    AdcConfig cfg = common.adc();
    double a = amp.value_or(cfg.v_fs / 2.0);
    nlohmann::json j;
    j["f_max_hz"] = max_tracking_frequency(cfg, a);
    j["t_clk_max_s"] = max_clock_period(fin, a, cfg);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_check_afsm(int depth, bool mutations) {
    EquivalenceReport base = check_equivalence(depth);
    std::cout << base.to_string() << "\n";
    if (!base.ok)
        return 2;
    if (!mutations)
        return 0;

    int killed = 0;
    int survived = 0;
    for (int literal = 0; literal < kEquationLiterals; ++literal) {
        for (MutationKind kind : {MutationKind::DropLiteral, MutationKind::NegateLiteral}) {
            EqMutation mut{kind, literal};
            EquivalenceReport r = check_equivalence(depth, mut);
            if (r.ok) {
                ++survived;
                std::cout << "SURVIVED: literal " << literal << " "
                          << (kind == MutationKind::DropLiteral ? "dropped" : "negated") << "\n";
            } else {
                ++killed;
            }
        }
    }
    std::cout << "mutations killed: " << killed << "/" << (killed + survived) << "\n";
    return survived == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Behavioral simulator of a floating-window level-crossing ADC whose tracking "
                 "comparators are powered off during each conversion update"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    app.add_option("--config", common.config_path, "JSON file with ADC parameters")
        ->check(CLI::ExistingFile);
    app.add_option("--out-dir", common.out_dir, "directory for output files");
    app.add_option("--seed", common.seed, "seed for randomized clock phase");
    app.add_option("--bits", common.bits, "resolution in bits");
    app.add_option("--v-fs", common.v_fs, "full-scale voltage [V]");
    app.add_option("--t-comp", common.t_comp, "comparator decision time [s]");
    app.add_option("--p-on", common.p_on, "tracking power [W]");
    app.add_option("--p-off", common.p_off, "comparator-off power [W]");
    app.add_option("--t-dig", common.t_dig, "digital propagation time [s]");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one simulation and dump trace/power/summary");
    SignalOpts sim_sig;
    ClockOpts sim_clk;
    double sim_duration = 0.0;
    bool sim_recon = false;
    std::optional<std::uint64_t> sim_max_overloads;
    sim->add_option("--signal", sim_sig.kind, "input kind")
        ->required()
        ->check(CLI::IsMember({"sine", "triangle", "sampled"}));
    sim->add_option("--freq", sim_sig.freq, "input frequency [Hz]");
    sim->add_option("--amp", sim_sig.amp, "amplitude [V] (default v_fs/2)");
    sim->add_option("--offset", sim_sig.offset, "DC offset [V] (default v_fs/2)");
    sim->add_option("--record", sim_sig.record_path, "CSV record for --signal sampled")
        ->check(CLI::ExistingFile);
    sim->add_option("--fs", sim_sig.fs, "sample rate for single-column records [Hz]");
    sim->add_option("--full-scale-margin", sim_sig.margin, "margin for record scaling");
    sim->add_option("--duration", sim_duration, "simulated time [s]")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--clock-period,--clock-period-s", sim_clk.period, "ACK clock period [s]")->required();
    auto* sim_phase = sim->add_option("--clock-phase,--clock-phase-s", sim_clk.phase, "first clock edge [s]");
    sim->add_flag("--random-phase", sim_clk.random_phase, "draw the clock phase from --seed")
        ->excludes(sim_phase);
    sim->add_flag("--reconstruction", sim_recon, "also emit reconstruction.csv and metrics.json");
    sim->add_option("--max-overloads", sim_max_overloads, "fail (exit 2) above this many");

    // sweep
    auto* swp = app.add_subcommand("sweep", "off-fraction table over frequency and clock grids");
    double swp_fmin = 10.0, swp_fmax = 1000.0;
    int swp_points = 25;
    std::vector<double> swp_factors{1.0, 0.5, 0.25};
    std::vector<double> swp_periods;
    bool swp_empirical = false;
    double swp_sim_periods = 20.0;
    swp->add_option("--fmin", swp_fmin, "lowest input frequency [Hz]");
    swp->add_option("--fmax", swp_fmax, "highest input frequency [Hz]");
    swp->add_option("--points", swp_points, "log-spaced frequency count");
    auto* swp_fac = swp->add_option("--clk-factors", swp_factors,
                                    "clock periods as fractions of the per-frequency bound");
    swp->add_option("--clk-periods", swp_periods, "absolute clock periods [s]")
        ->excludes(swp_fac);
    swp->add_flag("--empirical", swp_empirical,
                  "also simulate each feasible point and append measured columns");
    swp->add_option("--periods", swp_sim_periods, "input periods per empirical run");

    // ecg
    auto* ecg = app.add_subcommand("ecg", "full-record experiment with windowed reductions");
    std::string ecg_record;
    std::optional<double> ecg_fs;
    double ecg_margin = 0.0, ecg_bandwidth = 150.0, ecg_window = 0.05, ecg_phase = 0.0;
    bool ecg_random_phase = false;
    std::optional<std::uint64_t> ecg_max_overloads;
    ecg->add_option("--record", ecg_record, "CSV record")->required()->check(CLI::ExistingFile);
    ecg->add_option("--fs", ecg_fs, "sample rate for single-column records [Hz]");
    ecg->add_option("--margin", ecg_margin, "full-scale margin");
    ecg->add_option("--bandwidth", ecg_bandwidth, "band limit for the clock period [Hz]");
    ecg->add_option("--window", ecg_window, "peak-reduction window [s]");
    auto* ecg_ph = ecg->add_option("--clock-phase,--clock-phase-s", ecg_phase, "first clock edge [s]");
    ecg->add_flag("--random-phase", ecg_random_phase, "draw the clock phase from --seed")
        ->excludes(ecg_ph);
    ecg->add_option("--max-overloads", ecg_max_overloads, "fail (exit 2) above this many");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "print tracking-frequency and clock-period bounds");
    double bnd_fin = 0.0;
    std::optional<double> bnd_amp;
    bnd->add_option("--fin", bnd_fin, "input frequency [Hz]")
        ->required()
        ->check(CLI::PositiveNumber);
    bnd->add_option("--amp", bnd_amp, "amplitude [V] (default v_fs/2)");

    // check-afsm
    auto* chk = app.add_subcommand("check-afsm", "equation-vs-graph equivalence check");
    int chk_depth = 6;
    bool chk_mutations = false;
    chk->add_option("--depth", chk_depth, "burst-sequence depth")->check(CLI::PositiveNumber);
    chk->add_flag("--mutations", chk_mutations, "also verify single-literal mutants are caught");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed())
            return run_simulate(common, sim_sig, sim_clk, sim_duration, sim_recon,
                                sim_max_overloads);
        if (swp->parsed())
            return run_sweep(common, swp_fmin, swp_fmax, swp_points, swp_factors, swp_periods,
                             swp_empirical, swp_sim_periods);
        if (ecg->parsed())
            return run_ecg_cmd(common, ecg_record, ecg_fs, ecg_margin, ecg_bandwidth, ecg_window,
                               ecg_phase, ecg_random_phase, ecg_max_overloads);
        if (bnd->parsed())
            return run_bounds(common, bnd_fin, bnd_amp);
        if (chk->parsed())
            return run_check_afsm(chk_depth, chk_mutations);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
