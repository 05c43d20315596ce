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

#include "catruler/physical_realization.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catruler/errors.h"
#include "catruler/ideal_circuit.h"

namespace catruler {

namespace {

struct CatNorms {
    double plus;
    double minus;
};

CatNorms cat_norms(double alpha) {
    double e = std::exp(-alpha * alpha / 2);
    return {std::sqrt(2 + 2 * e), std::sqrt(2 - 2 * e)};
}

// Normalized-cat overlaps (<0| +- <alpha|) |kappa> / N+-.
std::pair<Complex, Complex> project_on_cats(double alpha, Complex kappa) {
    CatNorms n = cat_norms(alpha);
    Complex vac = overlap(0.0, kappa);
    Complex coh = overlap(alpha, kappa);
    return {(vac + coh) / n.plus, (vac - coh) / n.minus};
}

std::array<Complex, 4> mode_c_amplitudes(const RealizationParams &p) {
    auto state = pre_measurement_state(p);
    std::array<Complex, 4> out;
    for (size_t k = 0; k < 4; ++k) {
        out[k] = state.terms()[k].amplitude_c;
    }
    return out;
}

CatCoefficients coefficients_against(double alpha, const std::array<Complex, 4> &amplitudes) {
    CatCoefficients out;
    for (size_t k = 0; k < 4; ++k) {
        auto [plus, minus] = project_on_cats(alpha, amplitudes[k]);
        out.plus[k] = plus;
        out.minus[k] = minus;
    }
    return out;
}

}  // namespace

RealizationParams RealizationParams::with_default_mix(double alpha, double theta) {
    RealizationParams p{alpha, 0.0, theta};
    p.validate();
    p.phi = std::numbers::pi / (2 * alpha * alpha);
    return p;
}

void RealizationParams::validate() const {
    if (!(alpha > 0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be positive and finite");
    }
    if (!std::isfinite(phi) || !std::isfinite(theta)) {
        throw std::invalid_argument("phi and theta must be finite");
    }
}

TwoModeCoherentSum::TwoModeCoherentSum(std::vector<TwoModeTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("two-mode sum needs at least one term");
    }
}

double norm_squared(const TwoModeCoherentSum &s) {
    Complex total = 0;
    double scale = 0;
    for (const auto &a : s.terms()) {
        scale += std::abs(a.coefficient);
        for (const auto &b : s.terms()) {
            total += std::conj(a.coefficient) * b.coefficient * overlap(a.amplitude_c, b.amplitude_c) *
                     overlap(a.amplitude_d, b.amplitude_d);
        }
    }
    scale = std::max(1.0, scale * scale);
    if (std::abs(total.imag()) > 1e-9 * scale) {
        throw NumericalError("two-mode norm has an imaginary residue");
    }
    if (total.real() < 0) {
        if (total.real() < -1e-12 * scale) {
            throw NumericalError("two-mode Gram-matrix norm is negative beyond rounding tolerance");
        }
        return 0;
    }
    return total.real();
}

TwoModeCoherentSum pre_measurement_state(const RealizationParams &p) {
    p.validate();
    CoherentSuperposition first = propagate_exact(prepare_plus_cat(p.alpha, true), p.theta);
    CoherentSuperposition second = prepare_plus_cat(p.alpha, true);
    std::vector<TwoModeTerm> terms;
    for (const auto &a : first.terms()) {
        for (const auto &b : second.terms()) {
            auto [c, d] = beamsplitter(a.amplitude, b.amplitude, p.phi);
            terms.push_back({a.coefficient * b.coefficient, c, d});
        }
    }
    // Outer loop over the first cat gives (0,0), (0,alpha), (ae,0), (ae,alpha);
    // swap to the documented (0,0), (ae,0), (0,alpha), (ae,alpha) order.
    std::swap(terms[1], terms[2]);
    return TwoModeCoherentSum(std::move(terms));
}

CatCoefficients cat_coefficients(const RealizationParams &p) {
    return coefficients_against(p.alpha, mode_c_amplitudes(p));
}

CatCoefficients cat_coefficients_as_printed(const RealizationParams &p) {
    p.validate();
    const Complex i(0, 1);
    Complex e = std::polar(1.0, p.theta);
    double c = std::cos(p.phi);
    double s = std::sin(p.phi);
    std::array<Complex, 4> printed = {
        0.0,
        p.alpha * c * e,
        i * p.alpha * s,
        p.alpha * (c + i * s * e),
    };
    return coefficients_against(p.alpha, printed);
}

std::array<Complex, 4> mode_d_amplitudes(const RealizationParams &p) {
    auto state = pre_measurement_state(p);
    std::array<Complex, 4> out;
    for (size_t k = 0; k < 4; ++k) {
        out[k] = state.terms()[k].amplitude_d;
    }
    return out;
}

ConditionalOutput output_state(const RealizationParams &p) {
    TwoModeCoherentSum state = pre_measurement_state(p);
    CatCoefficients coeffs = cat_coefficients(p);
    CatNorms norms = cat_norms(p.alpha);

    std::vector<CoherentTerm> plus;
    std::vector<CoherentTerm> minus;
    std::vector<TwoModeTerm> residual(state.terms().begin(), state.terms().end());
    for (size_t k = 0; k < 4; ++k) {
        const auto &t = state.terms()[k];
        Complex cp = t.coefficient * coeffs.plus[k];
        Complex cm = t.coefficient * coeffs.minus[k];
        plus.push_back({cp, t.amplitude_d});
        minus.push_back({cm, t.amplitude_d});
        // Subtract |+cat>|out+> + |-cat>|out->, expanded over the cat terms.
        residual.push_back({-cp / norms.plus, 0.0, t.amplitude_d});
        residual.push_back({-cp / norms.plus, p.alpha, t.amplitude_d});
        residual.push_back({-cm / norms.minus, 0.0, t.amplitude_d});
        residual.push_back({cm / norms.minus, p.alpha, t.amplitude_d});
    }
    CoherentSuperposition plus_joint(std::move(plus));
    CoherentSuperposition minus_joint(std::move(minus));
    double plus_weight = norm_squared(plus_joint);
    double minus_weight = norm_squared(minus_joint);
    double leakage = norm_squared(TwoModeCoherentSum(std::move(residual)));
    if (plus_weight <= 0 || minus_weight <= 0) {
        throw NumericalError("a cat outcome has zero probability; conditional state undefined");
    }
    return ConditionalOutput{
        plus_joint.scaled(1 / std::sqrt(plus_weight)),
        minus_joint.scaled(1 / std::sqrt(minus_weight)),
        plus_weight,
        minus_weight,
        leakage,
        p.approximation_parameter() > kApproximationWarningLevel,
    };
}

const char *to_string(NormalizationMode mode) {
    return mode == NormalizationMode::kConditional ? "conditional" : "joint";
}

NormalizationMode parse_normalization_mode(const std::string &text) {
    if (text == "conditional") {
        return NormalizationMode::kConditional;
    }
    if (text == "joint") {
        return NormalizationMode::kJoint;
    }
    throw std::invalid_argument("normalization must be 'conditional' or 'joint', got '" + text + "'");
}

MeasurementProbabilities measurement_probabilities(const RealizationParams &p, const QuadratureConvention &conv,
                                                   NormalizationMode mode, IntegrationMethod method) {
    ConditionalOutput out = output_state(p);
    double threshold = p.alpha / 2;
    if (mode == NormalizationMode::kConditional) {
        return {threshold_probability(out.plus_state, threshold, conv, method),
                threshold_probability(out.minus_state, threshold, conv, method)};
    }
    return {threshold_probability(out.plus_state.scaled(std::sqrt(out.plus_weight)), threshold, conv, method),
            threshold_probability(out.minus_state.scaled(std::sqrt(out.minus_weight)), threshold, conv, method)};
}

double fringe_function(double p_plus, double p_minus) { return (p_minus - p_plus + 1) / 2; }

double fringe_complement(double p_plus, double p_minus) { return (p_plus - p_minus + 1) / 2; }

FringeSample fringe_point(double alpha, double theta, const QuadratureConvention &conv, NormalizationMode mode) {
    RealizationParams p = RealizationParams::with_default_mix(alpha, theta);
    ConditionalOutput out = output_state(p);
    double threshold = alpha / 2;
    double pp = threshold_probability(out.plus_state, threshold, conv);
    double pm = threshold_probability(out.minus_state, threshold, conv);
    if (mode == NormalizationMode::kJoint) {
        pp *= out.plus_weight;
        pm *= out.minus_weight;
    }
    pp = std::clamp(pp, 0.0, 1.0);
    pm = std::clamp(pm, 0.0, 1.0);
    return {theta, pp, pm, fringe_function(pp, pm), fringe_complement(pp, pm), out.leakage};
}

FringeCurve fringe_scan(double alpha, double theta_min, double theta_max, int n_points,
                        const QuadratureConvention &conv, NormalizationMode mode, int threads) {
    if (n_points < 2) {
        throw std::invalid_argument("a fringe scan needs at least two points");
    }
    if (!(theta_min < theta_max) || !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
        throw std::invalid_argument("fringe scan needs finite theta_min < theta_max");
    }
    if (!(alpha > 0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    FringeCurve curve{alpha, mode, std::vector<FringeSample>(static_cast<size_t>(n_points))};
    double step = (theta_max - theta_min) / (n_points - 1);
    auto theta_at = [&](int k) { return k == n_points - 1 ? theta_max : theta_min + k * step; };

    std::vector<std::string> failures(static_cast<size_t>(n_points));
    auto run = [&](int begin, int stride) {
        for (int k = begin; k < n_points; k += stride) {
            double theta = theta_at(k);
            try {
                curve.samples[k] = fringe_point(alpha, theta, conv, mode);
            } catch (const NumericalError &e) {
                std::ostringstream msg;
                msg << "fringe scan failed at theta=" << theta << ": " << e.what();
                failures[k] = msg.str();
            }
        }
    };
    int workers = std::clamp(threads, 1, n_points);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run, w, workers);
        }
    }
    for (const auto &f : failures) {
        if (!f.empty()) {
            throw NumericalError(f);
        }
    }
    return curve;
}

double central_fringe_width(const FringeCurve &curve) {
    const auto &s = curve.samples;
    if (s.size() < 3 || s.front().theta > 0 || s.back().theta < 0) {
        throw NumericalError("width undefined: scan does not bracket theta = 0");
    }
    size_t center = 0;
    for (size_t k = 1; k < s.size(); ++k) {
        if (std::abs(s[k].theta) < std::abs(s[center].theta)) {
            center = k;
        }
    }
    double mean = 0;
    for (const auto &x : s) {
        mean += x.fringe;
    }
    mean /= static_cast<double>(s.size());
    // Orient so the central extremum is a minimum of `v`.
    double sign = s[center].fringe <= mean ? 1.0 : -1.0;
    auto v = [&](size_t k) { return sign * s[k].fringe; };

    while (center > 0 && v(center - 1) < v(center)) {
        --center;
    }
    while (center + 1 < s.size() && v(center + 1) < v(center)) {
        ++center;
    }
    size_t right_peak = center;
    while (right_peak + 1 < s.size() && v(right_peak + 1) >= v(right_peak)) {
        ++right_peak;
    }
    size_t left_peak = center;
    while (left_peak > 0 && v(left_peak - 1) >= v(left_peak)) {
        --left_peak;
    }
    if (left_peak == 0 || right_peak + 1 == s.size()) {
        throw NumericalError("width undefined: scan window ends before the neighbouring fringe peaks");
    }
    double peak = (v(left_peak) + v(right_peak)) / 2;
    double level = (v(center) + peak) / 2;
    if (!(peak > v(center))) {
        throw NumericalError("width undefined: central fringe has no contrast");
    }

    auto crossing = [&](size_t inner, size_t outer) {
        double t0 = s[inner].theta;
        double t1 = s[outer].theta;
        double f0 = v(inner);
        double f1 = v(outer);
        return t0 + (level - f0) / (f1 - f0) * (t1 - t0);
    };
    double right = std::nan("");
    for (size_t k = center + 1; k <= right_peak && k < s.size(); ++k) {
        if (v(k) >= level) {
            right = crossing(k - 1, k);
            break;
        }
    }
    double left = std::nan("");
    for (size_t k = center; k-- > left_peak;) {
        if (v(k) >= level) {
            left = crossing(k + 1, k);
            break;
        }
    }
    if (std::isnan(left) || std::isnan(right)) {
        throw NumericalError("width undefined: no half-amplitude crossing inside the scan window");
    }
    return right - left;
}

namespace {

// Interior local extrema of the fringe column with parabolic refinement.
// Minima must lie below the mid level and maxima above it, which drops
// shallow ripples that are not fringes.
struct Extremum {
    double theta;
    bool is_minimum;
};

std::vector<Extremum> fringe_extrema(const FringeCurve &curve) {
    const auto &s = curve.samples;
    if (s.size() < 5) {
        throw NumericalError("fringe extrema need a longer scan");
    }
    double lo = s[0].fringe;
    double hi = s[0].fringe;
    for (const auto &x : s) {
        lo = std::min(lo, x.fringe);
        hi = std::max(hi, x.fringe);
    }
    double mid = (lo + hi) / 2;
    std::vector<Extremum> out;
    for (size_t k = 1; k + 1 < s.size(); ++k) {
        double f0 = s[k - 1].fringe;
        double f1 = s[k].fringe;
        double f2 = s[k + 1].fringe;
        bool minimum = f1 < f0 && f1 <= f2 && f1 < mid;
        bool maximum = f1 > f0 && f1 >= f2 && f1 > mid;
        if (!minimum && !maximum) {
            continue;
        }
        double denom = f0 - 2 * f1 + f2;
        double offset = denom != 0 ? 0.5 * (f0 - f2) / denom : 0.0;
        double step = s[k + 1].theta - s[k].theta;
        out.push_back({s[k].theta + offset * step, minimum});
    }
    return out;
}

}  // namespace

double fringe_period(const FringeCurve &curve) {
    std::vector<double> minima;
    for (const auto &e : fringe_extrema(curve)) {
        if (e.is_minimum) {
            minima.push_back(e.theta);
        }
    }
    if (minima.size() < 2) {
        throw NumericalError("fringe period undefined: fewer than two fringe minima in the scan");
    }
    return (minima.back() - minima.front()) / static_cast<double>(minima.size() - 1);
}

double fringe_extremum_spacing(const FringeCurve &curve) {
    auto extrema = fringe_extrema(curve);
    if (extrema.size() < 2) {
        throw NumericalError("fringe spacing undefined: fewer than two fringe extrema in the scan");
    }
    for (size_t k = 1; k < extrema.size(); ++k) {
        if (extrema[k].is_minimum == extrema[k - 1].is_minimum) {
            throw NumericalError("fringe extrema do not alternate; scan too coarse for spacing extraction");
        }
    }
    return (extrema.back().theta - extrema.front().theta) / static_cast<double>(extrema.size() - 1);
}

double correlation_lag(std::span<const double> a, std::span<const double> b, double step, double max_lag) {
    if (a.size() != b.size() || a.size() < 4 || !(step > 0) || !(max_lag > 0)) {
        throw std::invalid_argument("correlation_lag needs equal-length series, step > 0, max_lag > 0");
    }
    size_t max_k = static_cast<size_t>(std::ceil(max_lag / step));
    if (max_k + 2 >= a.size()) {
        throw std::invalid_argument("max_lag is too long for the series");
    }
    auto correlation = [&](size_t k) {
        size_t n = a.size() - k;
        double ma = 0;
        double mb = 0;
        for (size_t i = 0; i < n; ++i) {
            ma += a[i];
            mb += b[i + k];
        }
        ma /= static_cast<double>(n);
        mb /= static_cast<double>(n);
        double sab = 0;
        double saa = 0;
        double sbb = 0;
        for (size_t i = 0; i < n; ++i) {
            double da = a[i] - ma;
            double db = b[i + k] - mb;
            sab += da * db;
            saa += da * da;
            sbb += db * db;
        }
        return sab / std::sqrt(saa * sbb);
    };
    std::vector<double> c(max_k + 1);
    for (size_t k = 0; k <= max_k; ++k) {
        c[k] = correlation(k);
    }
    size_t best = 0;
    for (size_t k = 1; k < max_k; ++k) {
        if (c[k] > c[best]) {
            best = k;
        }
    }
    double offset = 0;
    if (best > 0 && best < max_k) {
        double denom = c[best - 1] - 2 * c[best] + c[best + 1];
        if (denom < 0) {
            offset = 0.5 * (c[best - 1] - c[best + 1]) / denom;
        }
    }
    return (static_cast<double>(best) + offset) * step;
}

double phase_gate_period(double alpha) { return 2 * std::numbers::pi / (alpha * alpha); }

double fringe_spacing_physical(double alpha, double wavelength) {
    if (!(alpha > 0) || !(wavelength > 0)) {
        throw std::invalid_argument("alpha and wavelength must be positive");
    }
    return wavelength / (2 * alpha * alpha);
}

double two_cat_photon_number(double alpha) { return alpha * alpha; }

}  // namespace catruler
