// Copyright 2026 The catruler Authors
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

// catruler command-line front end.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "catruler/errors.h"
#include "catruler/ideal_circuit.h"
#include "catruler/physical_realization.h"
#include "catruler/validation.h"
#include "json.hpp"

namespace {

using catruler::NormalizationMode;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kDigits = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, kDigits);
    return std::string(buf, end);
}

// JSON writes the shortest repr, so round-trip through 12 digits first.
double rounded(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    std::string s = format_number(x);
    double out = 0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

json rounded_array(const std::vector<double> &xs) {
    json a = json::array();
    for (double x : xs) {
        a.push_back(rounded(x));
    }
    return a;
}

struct Global {
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    std::string normalization = "conditional";
    bool quiet = false;
    int threads = 0;
    std::string config_path;

    NormalizationMode mode() const { return catruler::parse_normalization_mode(normalization); }
    int worker_count() const {
        return threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
};

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path &path, const std::vector<std::string> &columns) : path_(path) {
        body_ << "# schema=1\n";
        for (size_t k = 0; k < columns.size(); ++k) {
            body_ << (k ? "," : "") << columns[k];
        }
        body_ << '\n';
    }

    void row(const std::vector<double> &values) {
        for (size_t k = 0; k < values.size(); ++k) {
            body_ << (k ? "," : "") << format_number(values[k]);
        }
        body_ << '\n';
    }

    void commit() const {
        std::ofstream f(path_, std::ios::binary);
        f << body_.str();
        if (!f) {
            throw UsageError("cannot write " + path_.string());
        }
    }

  private:
    std::filesystem::path path_;
    std::ostringstream body_;
};

void write_json(const std::filesystem::path &path, const json &doc) {
    std::ofstream f(path, std::ios::binary);
    f << doc.dump(2) << '\n';
    if (!f) {
        throw UsageError("cannot write " + path.string());
    }
}

std::filesystem::path prepare_out(const Global &g) {
    std::error_code ec;
    std::filesystem::create_directories(g.out_dir, ec);
    if (ec) {
        throw UsageError("cannot create output directory " + g.out_dir + ": " + ec.message());
    }
    return g.out_dir;
}

void say(const Global &g, const std::string &line) {
    if (!g.quiet) {
        std::cout << line << '\n';
    }
}

void require_positive(const std::vector<double> &xs, const char *what) {
    if (xs.empty()) {
        throw UsageError(std::string(what) + " list is empty");
    }
    for (double x : xs) {
        if (!(x > 0) || !std::isfinite(x)) {
            throw UsageError(std::string(what) + " values must be positive");
        }
    }
}

// ---- fringe ----

struct FringeOptions {
    std::vector<double> alphas{5, 10, 20};
    std::string theta_span = "auto";
    int points = 801;
};

std::pair<double, double> parse_span(const std::string &text, double alpha) {
    if (text == "auto") {
        return catruler::auto_theta_span(alpha);
    }
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--theta-span must be 'auto' or 'MIN,MAX'");
    }
    double lo = 0;
    double hi = 0;
    std::string a = text.substr(0, comma);
    std::string b = text.substr(comma + 1);
    auto ra = std::from_chars(a.data(), a.data() + a.size(), lo);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), hi);
    if (ra.ec != std::errc() || rb.ec != std::errc() || ra.ptr != a.data() + a.size() ||
        rb.ptr != b.data() + b.size() || !(lo < hi)) {
        throw UsageError("--theta-span must be 'auto' or 'MIN,MAX' with MIN < MAX");
    }
    return {lo, hi};
}

int run_fringe(const Global &g, const FringeOptions &o) {
    require_positive(o.alphas, "alpha");
    if (o.points < 2) {
        throw UsageError("--points must be at least 2");
    }
    auto dir = prepare_out(g);
    for (double alpha : o.alphas) {
        auto [lo, hi] = parse_span(o.theta_span, alpha);
        auto curve = catruler::fringe_scan(alpha, lo, hi, o.points, catruler::QuadratureConvention::standard(),
                                           g.mode(), g.worker_count());
        auto path = dir / ("fringe_alpha_" + format_number(alpha) + ".csv");
        CsvWriter csv(path, {"theta", "p_plus", "p_minus", "fringe", "fringe_complement", "leakage"});
        for (const auto &s : curve.samples) {
            csv.row({s.theta, s.p_plus, s.p_minus, s.fringe, s.fringe_complement, s.leakage});
        }
        csv.commit();
        say(g, "wrote " + path.string());
    }
    return 0;
}

// ---- width-scaling ----

struct WidthOptions {
    std::vector<double> alphas{5, 10, 20};
    int points = 801;
};

int run_width(const Global &g, const WidthOptions &o) {
    require_positive(o.alphas, "alpha");
    if (o.points < 3) {
        throw UsageError("--points must be at least 3");
    }
    auto dir = prepare_out(g);
    auto w = catruler::width_scaling(o.alphas, o.points, g.mode(), g.worker_count());
    json doc;
    doc["schema"] = 1;
    doc["normalization"] = catruler::to_string(g.mode());
    doc["points"] = o.points;
    doc["alphas"] = rounded_array(w.alphas);
    doc["widths"] = rounded_array(w.widths);
    if (w.alphas.size() >= 2) {
        doc["ratios"] = rounded_array(w.ratios);
        doc["exponent"] = rounded(w.exponent);
    }
    write_json(dir / "width_scaling.json", doc);
    say(g, doc.dump(2));
    return 0;
}

// ---- snr ----

struct SnrOptions {
    std::vector<double> n_bars{50, 100, 200, 400, 1000};
    double v_theta = 1e-6;
};

int run_snr(const Global &g, const SnrOptions &o) {
    require_positive(o.n_bars, "n-bar");
    if (!(o.v_theta >= 0)) {
        throw UsageError("--v-theta must be non-negative");
    }
    auto dir = prepare_out(g);
    CsvWriter csv(dir / "snr.csv", {"n_bar", "snr_ideal", "snr_squeezed", "ratio", "resource_adjusted_ratio"});
    for (double n : o.n_bars) {
        auto c = catruler::compare_snr(n, o.v_theta);
        csv.row({c.n_bar, c.snr_ideal, c.snr_squeezed, c.ratio, c.resource_adjusted_ratio});
        say(g, "n_bar=" + format_number(n) + " ratio=" + format_number(c.ratio) +
                   " resource_adjusted_ratio=" + format_number(c.resource_adjusted_ratio));
    }
    csv.commit();
    return 0;
}

// ---- ruler ----

struct RulerOptions {
    double alpha = 20;
    double wavelength = 1e-6;
    int points = 801;
    bool no_scan = false;
};

int run_ruler(const Global &g, const RulerOptions &o) {
    if (!(o.alpha > 0) || !(o.wavelength > 0)) {
        throw UsageError("--alpha and --wavelength must be positive");
    }
    auto dir = prepare_out(g);
    json doc;
    doc["schema"] = 1;
    doc["alpha"] = rounded(o.alpha);
    doc["wavelength"] = rounded(o.wavelength);
    doc["standard_interval"] = rounded(o.wavelength / 2);
    doc["ruler_interval"] = rounded(catruler::fringe_spacing_physical(o.alpha, o.wavelength));
    int status = 0;
    if (!o.no_scan) {
        try {
            auto r = catruler::quantum_ruler(o.alpha, o.wavelength, o.points, g.worker_count());
            doc["scan_spacing"] = rounded(r.scan_spacing);
            doc["scan_period"] = rounded(r.scan_period);
            doc["relative_deviation"] = rounded(r.relative_deviation);
        } catch (const catruler::NumericalError &e) {
            doc["scan_error"] = e.what();
            status = kExitNumerical;
        }
    }
    write_json(dir / "ruler.json", doc);
    say(g, doc.dump(2));
    return status;
}

// ---- oracle ----

struct OracleOptions {
    double max_alpha = 3;
    int cases = 50;
    double inject_bug = 0;
};

int run_oracle(const Global &g, const OracleOptions &o) {
    if (o.cases <= 0) {
        throw UsageError("--cases must be positive; an empty case list validates nothing");
    }
    if (!(o.max_alpha > 0)) {
        throw UsageError("--max-alpha must be positive");
    }
    auto dir = prepare_out(g);
    auto cases = catruler::random_oracle_cases(o.cases, o.max_alpha, g.seed);
    auto v = catruler::validate_against_oracle(cases, o.inject_bug);
    json doc;
    doc["schema"] = 1;
    doc["seed"] = g.seed;
    doc["cases"] = o.cases;
    doc["max_alpha"] = rounded(o.max_alpha);
    doc["checks"] = {
        {"probabilities",
         {{"pass", v.probabilities_pass},
          {"max_deviation", rounded(v.max_probability_deviation)},
          {"tolerance", catruler::kOracleProbabilityTolerance}}},
        {"weight_closure",
         {{"pass", v.closure_pass},
          {"max_deviation", rounded(v.max_closure)},
          {"tolerance", catruler::kClosureTolerance}}},
    };
    doc["max_weight_deviation"] = rounded(v.max_weight_deviation);
    doc["max_oracle_norm_defect"] = rounded(v.max_oracle_norm_defect);
    json rows = json::array();
    for (const auto &c : v.cases) {
        rows.push_back({{"alpha", rounded(c.config.alpha)},
                        {"theta", rounded(c.config.theta)},
                        {"truncation", c.truncation},
                        {"joint_deviation", rounded(c.joint_deviation)},
                        {"conditional_deviation", rounded(c.conditional_deviation)},
                        {"weight_deviation", rounded(c.weight_deviation)}});
    }
    doc["case_reports"] = rows;
    doc["pass"] = v.passed();
    write_json(dir / "oracle.json", doc);
    say(g, std::string("oracle validation ") + (v.passed() ? "passed" : "FAILED") +
               ": max |dP| = " + format_number(v.max_probability_deviation) +
               ", max closure = " + format_number(v.max_closure));
    return v.passed() ? 0 : kExitNumerical;
}

// ---- phase-error ----

struct PhaseErrorOptions {
    std::vector<double> alpha_range{1, 20, 20};
    std::vector<double> theta_range{-0.01, 0.01, 41};
};

std::vector<double> grid(const std::vector<double> &range, const char *what) {
    if (range.size() != 3 || !(range[2] >= 1) || range[2] != std::floor(range[2]) ||
        !(range[0] <= range[1])) {
        throw UsageError(std::string(what) + " must be MIN,MAX,COUNT with MIN <= MAX and COUNT >= 1");
    }
    int n = static_cast<int>(range[2]);
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        out.push_back(n == 1 ? range[0] : range[0] + (range[1] - range[0]) * k / (n - 1));
    }
    return out;
}

int run_phase_error(const Global &g, const PhaseErrorOptions &o) {
    auto alphas = grid(o.alpha_range, "--alpha-range");
    auto thetas = grid(o.theta_range, "--theta-range");
    if (alphas.front() < 0) {
        throw UsageError("alpha values must be non-negative");
    }
    auto dir = prepare_out(g);
    CsvWriter csv(dir / "phase_error.csv", {"alpha", "theta", "theta2_alpha2", "error"});
    for (double a : alphas) {
        for (double t : thetas) {
            csv.row({a, t, t * t * a * a, catruler::phase_gate_error(a, t)});
        }
    }
    csv.commit();
    say(g, "wrote " + (dir / "phase_error.csv").string());
    return 0;
}

// ---- config ----

template <typename T>
void take(const json &cfg, const char *key, T &target, const CLI::Option *flag) {
    if (cfg.contains(key) && (flag == nullptr || flag->count() == 0)) {
        target = cfg.at(key).get<T>();
    }
}

void apply_config(const std::string &path, Global &g, CLI::App &app, FringeOptions &fringe, WidthOptions &width) {
    std::ifstream f(path);
    if (!f) {
        throw UsageError("cannot open config file " + path);
    }
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    static const char *known[] = {"alpha", "theta_range", "points", "normalization", "out", "seed"};
    for (const auto &[key, _] : cfg.items()) {
        if (std::find_if(std::begin(known), std::end(known), [&](const char *k) { return key == k; }) ==
            std::end(known)) {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    try {
        take(cfg, "out", g.out_dir, app.get_option("--out"));
        take(cfg, "seed", g.seed, app.get_option("--seed"));
        take(cfg, "normalization", g.normalization, app.get_option("--normalization"));
        auto *fringe_cmd = app.get_subcommand("fringe");
        auto *width_cmd = app.get_subcommand("width-scaling");
        take(cfg, "alpha", fringe.alphas, fringe_cmd->get_option("--alpha"));
        take(cfg, "alpha", width.alphas, width_cmd->get_option("--alpha"));
        take(cfg, "points", fringe.points, fringe_cmd->get_option("--points"));
        take(cfg, "points", width.points, width_cmd->get_option("--points"));
        if (cfg.contains("theta_range") && fringe_cmd->get_option("--theta-span")->count() == 0) {
            const json &r = cfg.at("theta_range");
            if (r.is_string()) {
                fringe.theta_span = r.get<std::string>();
            } else if (r.is_array() && r.size() == 3) {
                fringe.theta_span = format_number(r[0].get<double>()) + "," + format_number(r[1].get<double>());
                if (fringe_cmd->get_option("--points")->count() == 0) {
                    fringe.points = r[2].get<int>();
                }
            } else {
                throw UsageError("theta_range must be \"auto\" or [min, max, n_points]");
            }
        }
    } catch (const json::exception &e) {
        throw UsageError(std::string("config value has the wrong type: ") + e.what());
    }
}

}  // namespace

int main(int argc, char **argv) {
    std::ios::sync_with_stdio(false);
    std::cout.imbue(std::locale::classic());

    CLI::App app{"catruler: cat-state interferometry sweeps and checks"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--out", g.out_dir, "Output directory")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--normalization", g.normalization, "Outcome normalization")
        ->check(CLI::IsMember({"conditional", "joint"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress console output");
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--config", g.config_path, "JSON config file")->check(CLI::ExistingFile);

    FringeOptions fringe;
    auto *fringe_cmd = app.add_subcommand("fringe", "Fringe scans, one CSV per alpha");
    fringe_cmd->add_option("--alpha", fringe.alphas, "Cat amplitudes")->delimiter(',');
    fringe_cmd->add_option("--theta-span", fringe.theta_span, "'auto' or MIN,MAX")->capture_default_str();
    fringe_cmd->add_option("--points", fringe.points, "Samples per scan")->capture_default_str();

    WidthOptions width;
    auto *width_cmd = app.add_subcommand("width-scaling", "Central fringe widths and power-law fit");
    width_cmd->add_option("--alpha", width.alphas, "Cat amplitudes")->delimiter(',');
    width_cmd->add_option("--points", width.points, "Samples per scan")->capture_default_str();

    SnrOptions snr;
    auto *snr_cmd = app.add_subcommand("snr", "Cat versus squeezed-light signal to noise");
    snr_cmd->add_option("--n-bar", snr.n_bars, "Mean photon numbers")->delimiter(',');
    snr_cmd->add_option("--v-theta", snr.v_theta, "Phase fluctuation power (rad^2)")->capture_default_str();

    RulerOptions ruler;
    auto *ruler_cmd = app.add_subcommand("ruler", "Quantum-ruler interval");
    ruler_cmd->add_option("--alpha", ruler.alpha)->capture_default_str();
    ruler_cmd->add_option("--wavelength", ruler.wavelength, "Wavelength in metres")->capture_default_str();
    ruler_cmd->add_option("--points", ruler.points)->capture_default_str();
    ruler_cmd->add_flag("--no-scan", ruler.no_scan, "Closed form only");

    OracleOptions oracle;
    auto *oracle_cmd = app.add_subcommand("oracle", "Cross-check against the number-basis oracle");
    oracle_cmd->add_option("--max-alpha", oracle.max_alpha)->capture_default_str();
    oracle_cmd->add_option("--cases", oracle.cases)->capture_default_str();
    oracle_cmd->add_option("--inject-bug", oracle.inject_bug)->group("");

    PhaseErrorOptions phase;
    auto *phase_cmd = app.add_subcommand("phase-error", "Phase-gate approximation error over a grid");
    phase_cmd->add_option("--alpha-range", phase.alpha_range, "MIN,MAX,COUNT")->delimiter(',')->expected(3);
    phase_cmd->add_option("--theta-range", phase.theta_range, "MIN,MAX,COUNT")->delimiter(',')->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (!g.config_path.empty()) {
            apply_config(g.config_path, g, app, fringe, width);
        }
        g.mode();
        if (*fringe_cmd) {
            return run_fringe(g, fringe);
        }
        if (*width_cmd) {
            return run_width(g, width);
        }
        if (*snr_cmd) {
            return run_snr(g, snr);
        }
        if (*ruler_cmd) {
            return run_ruler(g, ruler);
        }
        if (*oracle_cmd) {
            return run_oracle(g, oracle);
        }
        if (*phase_cmd) {
            return run_phase_error(g, phase);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const catruler::NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}
