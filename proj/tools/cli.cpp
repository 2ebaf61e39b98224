// Copyright 2026 The corrspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "corrspec/correlations.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"
#include "corrspec/spectroscopy.hpp"

namespace corrspec::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidInput("not a number: '" + std::string(text) + "'");
    }
    return value;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

bool flag_given(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
}

// Expands `--config FILE` into flags. The file holds flat key=value lines
// whose keys are long flag names without the dashes; flags given on the
// command line take precedence.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
    std::string path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
        if (args[k].starts_with("--config=")) path = args[k].substr(9);
    }
    if (path.empty()) return args;
    const auto sub_pos = std::find_if(args.begin(), args.end(),
                                      [&](const std::string& a) { return app.get_subcommand_no_throw(a) != nullptr; });
    if (sub_pos == args.end()) return args;
    const CLI::App* sub = app.get_subcommand_no_throw(*sub_pos);

    std::ifstream file(path);
    if (!file) throw IoError("cannot read config '" + path + "'");
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_config(file);
    } catch (const CLI::ParseError& e) {
        throw InvalidInput("config '" + path + "': " + e.what());
    }
    std::vector<std::string> injected;
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;
        if (!item.parents.empty() && item.parents != std::vector<std::string>{sub->get_name()}) continue;
        if (item.name == "config") throw InvalidInput("config files cannot include other config files");
        const std::string flag = "--" + item.name;
        if (sub->get_option_no_throw(flag) == nullptr) throw InvalidInput("unknown config key '" + item.name + "'");
        if (flag_given(args, flag)) continue;
        std::string joined;
        for (const auto& v : item.inputs) joined += (joined.empty() ? "" : ",") + v;
        injected.push_back(flag + "=" + joined);
    }
    args.insert(sub_pos + 1, injected.begin(), injected.end());
    return args;
}

std::string csv_row(std::initializer_list<double> values) {
    std::string row;
    bool first = true;
    for (double v : values) {
        if (!first) row += ',';
        row += format_double(v);
        first = false;
    }
    row += '\n';
    return row;
}

std::vector<ModeIndex> parse_modes(const std::string& text) {
    std::vector<ModeIndex> modes;
    if (text.empty()) return modes;
    for (double v : parse_list(text)) {
        if (v != std::floor(v) || v < 1) throw InvalidInput("input modes are 1-based integers");
        modes.push_back(static_cast<ModeIndex>(v) - 1);
    }
    return modes;
}

void apply_thread_env() {
    if (const char* env = std::getenv(kThreadsEnvVar.data())) {
        if (!parse_thread_count(env)) {
            throw InvalidInput(std::string(kThreadsEnvVar) + " must be a positive integer");
        }
    }
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_double(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> parse_grid(std::string_view text) {
    text = trim(text);
    if (text.find(':') == std::string_view::npos) return parse_list(text);
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw InvalidInput("grid must be 'min:max:steps' or a comma list");
    }
    const double lo = parse_double(text.substr(0, c1));
    const double hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double steps = parse_double(text.substr(c2 + 1));
    if (!std::isfinite(lo) || !std::isfinite(hi) || steps < 1 || steps != std::floor(steps)) {
        throw InvalidInput("grid 'min:max:steps' needs finite bounds and a positive integer step count");
    }
    const auto count = static_cast<std::size_t>(steps);
    if (count == 1) {
        if (lo != hi) throw InvalidInput("a single-point grid needs min == max");
        return {lo};
    }
    std::vector<double> grid(count);
    for (std::size_t p = 0; p < count; ++p) {
        grid[p] = lo + (hi - lo) * static_cast<double>(p) / static_cast<double>(count - 1);
    }
    grid.back() = hi;
    return grid;
}

namespace {

struct HomScanArgs {
    int n = 0;
    int m = 0;
    double delta_omega = 1.0;
    std::string dt_grid;
    int trials = 100;
    std::string circuit = "fixed-haar";
    std::uint64_t seed = 0;
    std::string input_modes;
    std::string out;
};

int cmd_hom_scan(const HomScanArgs& a, std::ostream& out) {
    HomScanConfig cfg;
    cfg.photon_count = a.n;
    cfg.mode_count = a.m;
    cfg.spectral_width = a.delta_omega;
    cfg.dt_grid = parse_grid(a.dt_grid);
    cfg.trials_per_point = a.trials;
    cfg.circuit = a.circuit == "fourier"      ? CircuitMode::kFourier
                  : a.circuit == "fresh-haar" ? CircuitMode::kFreshHaar
                                              : CircuitMode::kFixedHaar;
    cfg.seed = a.seed;
    cfg.input_modes = parse_modes(a.input_modes);

    const SweepResult r = hom_scan(cfg);
    std::string csv = "delta_t,nm_emp,nm_emp_stderr,nm_rmt,cv_emp,cv_emp_stderr,cv_rmt\n";
    for (std::size_t g = 0; g < r.size(); ++g) {
        csv += csv_row({r.abscissa[g], r.empirical_nm[g], r.stderr_nm[g], r.analytic_nm[g], r.empirical_cv[g],
                        r.stderr_cv[g], r.analytic_cv[g]});
    }
    emit(a.out, csv, out);
    return kOk;
}

struct SpectroscopyArgs {
    int m = 0;
    double delta_omega = 1.0;
    std::string fixed_times;
    std::string probe_grid;
    int circuits = 1;
    std::string circuit_type = "haar";
    std::uint64_t seed = 0;
    std::string input_modes;
    std::string dip_column = "analytic";
    double dip_threshold = -1.0;
    std::string out;
    std::string dips_out;
};

int cmd_spectroscopy(const SpectroscopyArgs& a, std::ostream& out) {
    spectroscopy::SpectroscopyConfig cfg;
    cfg.mode_count = a.m;
    cfg.spectral_width = a.delta_omega;
    cfg.fixed_times = parse_list(a.fixed_times);
    cfg.probe_grid = a.probe_grid.empty() ? spectroscopy::default_probe_grid(cfg.fixed_times, a.delta_omega)
                                          : parse_grid(a.probe_grid);
    if (a.circuit_type == "fourier") {
        cfg.circuit = spectroscopy::FourierCircuit{};
    } else {
        cfg.circuit = spectroscopy::HaarCircuits{a.seed, a.circuits};
    }
    cfg.input_modes = parse_modes(a.input_modes);

    const PredictionCurve curve = spectroscopy::spectroscopy_scan(cfg);
    std::string csv = "tau,nm_emp,nm_emp_stderr,nm_analytic\n";
    for (std::size_t g = 0; g < curve.size(); ++g) {
        csv += csv_row({curve.abscissa[g], curve.empirical_nm[g], curve.stderr_nm[g], curve.analytic_nm[g]});
    }
    emit(a.out, csv, out);

    if (!a.dips_out.empty()) {
        const int n = static_cast<int>(cfg.fixed_times.size()) + 1;
        spectroscopy::DipOptions opts;
        opts.column = a.dip_column == "empirical" ? spectroscopy::DipColumn::kEmpirical
                                                  : spectroscopy::DipColumn::kAnalytic;
        opts.min_depth = a.dip_threshold >= 0.0 ? a.dip_threshold : spectroscopy::default_dip_threshold(n, a.m);
        const auto report = spectroscopy::detect_dips(curve, a.delta_omega, opts);
        std::string dips = "estimated_time,depth\n";
        for (std::size_t d = 0; d < report.estimated_times.size(); ++d) {
            dips += csv_row({report.estimated_times[d], report.dip_depths[d]});
        }
        emit(a.dips_out, dips, out);
    }
    return kOk;
}

struct ScalingArgs {
    int n_min = 2;
    int n_max = 30;
    std::string rule = "3n";
    std::string out;
};

int cmd_scaling(const ScalingArgs& a, std::ostream& out) {
    const auto rule = a.rule == "3n2" ? rmt::ScalingRule::kQuadratic : rmt::ScalingRule::kLinear;
    std::string csv = "n,m,v_nm,v_cv\n";
    for (const auto& row : rmt::scaling_curves(a.n_min, a.n_max, rule)) {
        csv += std::to_string(row.photon_count) + ',' + std::to_string(row.mode_count) + ',' +
               format_double(row.v.nm) + ',' + format_double(row.v.cv) + '\n';
    }
    emit(a.out, csv, out);
    return kOk;
}

struct ValidateArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    int trials = 10000;
    std::string json_out = "validate_report.json";
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
    if (a.trials < 2) throw InvalidInput("--trials must be >= 2");
    std::vector<std::pair<std::string, std::vector<Check>>> suites;
    if (a.suite == "fock" || a.suite == "all") suites.emplace_back("fock", fock_suite(a.seed));
    if (a.suite == "haar" || a.suite == "all") suites.emplace_back("haar", haar_suite(a.seed, a.trials));
    if (a.suite == "time" || a.suite == "all") suites.emplace_back("time", time_suite(a.seed, a.trials));

    nlohmann::json report;
    report["seed"] = a.seed;
    report["trials"] = a.trials;
    report["suites"] = nlohmann::json::array();
    bool passed = true;
    for (const auto& [name, checks] : suites) {
        out << "== " << name << " ==\n";
        for (const auto& c : checks) {
            out << '[' << c.status << "] " << c.name << ": observed " << format_double(c.observed)
                << ", expected " << format_double(c.expected) << ", tolerance " << format_double(c.tolerance);
            if (c.extra.contains("exact_integral")) {
                out << ", exact integral " << format_double(c.extra["exact_integral"].get<double>()) << " (supports "
                    << c.extra["supports"].get<std::string>() << ')';
            }
            out << '\n';
        }
        auto j = checks_to_json(name, checks);
        passed = passed && j["passed"].get<bool>();
        report["suites"].push_back(std::move(j));
    }
    report["passed"] = passed;
    out << (passed ? "all checks passed\n" : "some checks FAILED\n");
    emit(a.json_out, report.dump(2) + "\n", out);
    return passed ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-point correlation statistics of partially distinguishable photons", "corrspec"};
    app.require_subcommand(1);
    std::string config_path;

    HomScanArgs hom;
    auto* hom_cmd = app.add_subcommand("hom-scan", "NM/CV of the C-dataset versus arrival-time scatter");
    hom_cmd->add_option("--config", config_path, "flat key=value file mirroring the flag names");
    hom_cmd->add_option("--n", hom.n, "photon count")->required()->check(CLI::PositiveNumber);
    hom_cmd->add_option("--m", hom.m, "mode count")->required()->check(CLI::Range(2, 1 << 20));
    hom_cmd->add_option("--delta-omega", hom.delta_omega, "spectral width")->capture_default_str();
    hom_cmd->add_option("--dt-grid", hom.dt_grid, "min:max:steps or comma list (inf allowed)")->required();
    hom_cmd->add_option("--trials", hom.trials, "time draws per grid point")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    hom_cmd->add_option("--circuit", hom.circuit)
        ->capture_default_str()
        ->check(CLI::IsMember({"fixed-haar", "fresh-haar", "fourier"}));
    hom_cmd->add_option("--seed", hom.seed)->capture_default_str();
    hom_cmd->add_option("--input-modes", hom.input_modes, "1-based comma list (default 1..n)");
    hom_cmd->add_option("--out", hom.out, "CSV path (default stdout)");

    SpectroscopyArgs spec;
    auto* spec_cmd = app.add_subcommand("spectroscopy", "NM versus probe-photon delay, with dip detection");
    spec_cmd->add_option("--config", config_path, "flat key=value file mirroring the flag names");
    spec_cmd->add_option("--m", spec.m, "mode count")->required()->check(CLI::Range(2, 1 << 20));
    spec_cmd->add_option("--delta-omega", spec.delta_omega)->capture_default_str();
    spec_cmd->add_option("--fixed-times", spec.fixed_times, "comma list of fixed injection times")->required();
    spec_cmd->add_option("--probe-grid", spec.probe_grid, "min:max:steps or comma list");
    spec_cmd->add_option("--circuits", spec.circuits, "Haar circuits to average")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    spec_cmd->add_option("--circuit-type", spec.circuit_type)
        ->capture_default_str()
        ->check(CLI::IsMember({"haar", "fourier"}));
    spec_cmd->add_option("--seed", spec.seed)->capture_default_str();
    spec_cmd->add_option("--input-modes", spec.input_modes, "1-based comma list, probe last");
    spec_cmd->add_option("--dip-column", spec.dip_column)
        ->capture_default_str()
        ->check(CLI::IsMember({"analytic", "empirical"}));
    spec_cmd->add_option("--dip-threshold", spec.dip_threshold, "minimum dip depth (default: 25% of one resonance)");
    spec_cmd->add_option("--out", spec.out, "CSV path (default stdout)");
    spec_cmd->add_option("--dips-out", spec.dips_out, "dip report CSV path");

    ScalingArgs scaling;
    auto* scaling_cmd = app.add_subcommand("scaling", "NM/CV visibilities versus photon number");
    scaling_cmd->add_option("--config", config_path, "flat key=value file mirroring the flag names");
    scaling_cmd->add_option("--n-min", scaling.n_min)->capture_default_str();
    scaling_cmd->add_option("--n-max", scaling.n_max)->capture_default_str();
    scaling_cmd->add_option("--rule", scaling.rule)->capture_default_str()->check(CLI::IsMember({"3n", "3n2"}));
    scaling_cmd->add_option("--out", scaling.out, "CSV path (default stdout)");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle suites");
    validate_cmd->add_option("--config", config_path, "flat key=value file mirroring the flag names");
    validate_cmd->add_option("--suite", validate.suite)
        ->capture_default_str()
        ->check(CLI::IsMember({"fock", "haar", "time", "all"}));
    validate_cmd->add_option("--seed", validate.seed)->capture_default_str();
    validate_cmd->add_option("--trials", validate.trials)->capture_default_str();
    validate_cmd->add_option("--json-out", validate.json_out)->capture_default_str();

    std::vector<std::string> expanded;
    try {
        expanded = expand_config(app, args);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    }
    std::vector<std::string> argv_store{"corrspec"};
    argv_store.insert(argv_store.end(), expanded.begin(), expanded.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidFlags;
    }

    try {
        apply_thread_env();
        if (hom_cmd->parsed()) return cmd_hom_scan(hom, out);
        if (spec_cmd->parsed()) return cmd_spectroscopy(spec, out);
        if (scaling_cmd->parsed()) return cmd_scaling(scaling, out);
        if (validate_cmd->parsed()) return cmd_validate(validate, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kInvalidFlags;
}

}  // namespace corrspec::cli
