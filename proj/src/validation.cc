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

#include "catruler/validation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "catruler/fock_oracle.h"
#include "catruler/ideal_circuit.h"
#include "catruler/squeezed_baseline.h"

namespace catruler {

std::vector<OracleCase> random_oracle_cases(int count, double max_alpha, std::uint64_t seed) {
    if (count < 0 || !(max_alpha > 0)) {
        throw std::invalid_argument("need count >= 0 and max_alpha > 0");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> alpha_dist(std::min(1.0, max_alpha / 2), max_alpha);
    std::uniform_real_distribution<double> theta_dist(0.0, 2 * std::numbers::pi);
    std::vector<OracleCase> out;
    for (int k = 0; k < count; ++k) {
        double alpha = alpha_dist(rng);
        out.push_back({alpha, theta_dist(rng)});
    }
    return out;
}

OracleValidation validate_against_oracle(const std::vector<OracleCase> &cases, double coefficient_perturbation) {
    OracleValidation v;
    for (const auto &c : cases) {
        RealizationParams p = RealizationParams::with_default_mix(c.alpha, c.theta);
        ConditionalOutput out = output_state(p);

        std::vector<CoherentTerm> plus_terms(out.plus_state.terms().begin(), out.plus_state.terms().end());
        plus_terms[0].coefficient *= 1 + coefficient_perturbation;
        CoherentSuperposition plus_joint = CoherentSuperposition(std::move(plus_terms)).scaled(std::sqrt(out.plus_weight));
        CoherentSuperposition minus_joint = out.minus_state.scaled(std::sqrt(out.minus_weight));
        double threshold = c.alpha / 2;
        double pp = threshold_probability(plus_joint, threshold);
        double pm = threshold_probability(minus_joint, threshold);

        OracleResult o = end_to_end_oracle(p);
        OracleCaseReport r{};
        r.config = c;
        r.truncation = o.truncation;
        r.joint_deviation = std::max(std::abs(pp - o.p_plus), std::abs(pm - o.p_minus));
        r.conditional_deviation = std::max(std::abs(pp / out.plus_weight - o.p_plus_conditional),
                                           std::abs(pm / out.minus_weight - o.p_minus_conditional));
        r.weight_deviation = std::max({std::abs(out.plus_weight - o.plus_weight),
                                       std::abs(out.minus_weight - o.minus_weight), std::abs(out.leakage - o.leakage)});
        r.analytic_closure = std::abs(out.plus_weight + out.minus_weight + out.leakage - 1);
        r.oracle_norm_defect = std::abs(o.plus_weight + o.minus_weight + o.leakage - 1);

        v.max_probability_deviation =
            std::max({v.max_probability_deviation, r.joint_deviation, r.conditional_deviation});
        v.max_weight_deviation = std::max(v.max_weight_deviation, r.weight_deviation);
        v.max_closure = std::max(v.max_closure, r.analytic_closure);
        v.max_oracle_norm_defect = std::max(v.max_oracle_norm_defect, r.oracle_norm_defect);
        v.cases.push_back(r);
    }
    v.probabilities_pass = !cases.empty() && v.max_probability_deviation < kOracleProbabilityTolerance;
    v.closure_pass = !cases.empty() && v.max_closure < kClosureTolerance;
    return v;
}

std::pair<double, double> auto_theta_span(double alpha) {
    double half = 3 * phase_gate_period(alpha);
    return {-half, half};
}

double fit_power_law_exponent(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("power-law fit needs at least two (x, y) pairs");
    }
    double n = static_cast<double>(x.size());
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0) || !(y[k] > 0)) {
            throw std::invalid_argument("power-law fit needs positive data");
        }
        double lx = std::log(x[k]);
        double ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) {
        throw std::invalid_argument("power-law fit needs distinct x values");
    }
    return (n * sxy - sx * sy) / denom;
}

WidthScaling width_scaling(const std::vector<double> &alphas, int n_points, NormalizationMode mode, int threads) {
    if (alphas.empty()) {
        throw std::invalid_argument("width scaling needs at least one alpha");
    }
    WidthScaling w;
    w.alphas = alphas;
    for (double alpha : alphas) {
        auto [lo, hi] = auto_theta_span(alpha);
        FringeCurve curve = fringe_scan(alpha, lo, hi, n_points, QuadratureConvention::standard(), mode, threads);
        w.widths.push_back(central_fringe_width(curve));
    }
    for (size_t k = 0; k + 1 < w.widths.size(); ++k) {
        w.ratios.push_back(w.widths[k] / w.widths[k + 1]);
    }
    if (alphas.size() >= 2) {
        w.exponent = fit_power_law_exponent(w.alphas, w.widths);
    }
    return w;
}

RulerReport quantum_ruler(double alpha, double wavelength, int n_points, int threads) {
    RulerReport r{};
    r.alpha = alpha;
    r.wavelength = wavelength;
    r.standard_interval = wavelength / 2;
    r.ruler_interval = fringe_spacing_physical(alpha, wavelength);
    auto [lo, hi] = auto_theta_span(alpha);
    FringeCurve curve = fringe_scan(alpha, lo, hi, n_points, QuadratureConvention::standard(),
                                    NormalizationMode::kConditional, threads);
    double to_length = wavelength / (2 * std::numbers::pi);
    r.scan_spacing = fringe_extremum_spacing(curve) * to_length;
    r.scan_period = fringe_period(curve) * to_length;
    r.relative_deviation = std::abs(r.scan_spacing - r.ruler_interval) / r.ruler_interval;
    return r;
}

SnrComparison compare_snr(double n_bar, double v_theta) {
    SnrComparison c{};
    c.n_bar = n_bar;
    c.snr_ideal = snr_ideal(v_theta, std::sqrt(2 * n_bar));
    SqueezedBaselineParams matched = equal_power_params(n_bar);
    matched.v_theta = v_theta;
    c.snr_squeezed = snr_squeezed(matched);
    SqueezedBaselineParams doubled = equal_power_params(2 * n_bar);
    doubled.v_theta = v_theta;
    double doubled_snr = snr_squeezed(doubled);
    // 0/0 at v_theta = 0; report zeros rather than NaN.
    c.ratio = c.snr_squeezed > 0 ? c.snr_ideal / c.snr_squeezed : 0;
    c.resource_adjusted_ratio = doubled_snr > 0 ? c.snr_ideal / doubled_snr : 0;
    return c;
}

}  // namespace catruler
