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

#include "catruler/ideal_circuit.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace catruler {

namespace {

void require_positive_alpha(double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be positive and finite");
    }
}

}  // namespace

CoherentSuperposition LogicalQubit::to_superposition() const {
    return CoherentSuperposition({{c0, 0.0}, {c1, alpha}});
}

PropagationSetting PropagationSetting::from_lengths(double delta, double wavelength) {
    if (!(wavelength > 0)) {
        throw std::invalid_argument("wavelength must be positive");
    }
    return {2 * std::numbers::pi * delta / wavelength, delta, wavelength};
}

double phase_variance_from_length_variance(double length_variance, double wavelength) {
    if (!(wavelength > 0) || length_variance < 0) {
        throw std::invalid_argument("need wavelength > 0 and a non-negative length variance");
    }
    double k = 2 * std::numbers::pi / wavelength;
    return k * k * length_variance;
}

LogicalQubit hadamard(const LogicalQubit &q) {
    const double r = std::numbers::sqrt2 / 2;
    return {r * (q.c0 + q.c1), r * (q.c0 - q.c1), q.alpha};
}

CoherentSuperposition prepare_plus_cat(double alpha, bool exact_norm) {
    require_positive_alpha(alpha);
    double c = exact_norm ? 1 / std::sqrt(2 + 2 * std::exp(-alpha * alpha / 2)) : std::numbers::sqrt2 / 2;
    return CoherentSuperposition({{c, 0.0}, {c, alpha}});
}

CoherentSuperposition propagate_exact(const CoherentSuperposition &s, double theta) {
    Complex rotation = std::polar(1.0, theta);
    std::vector<CoherentTerm> out(s.terms().begin(), s.terms().end());
    for (auto &t : out) {
        t.amplitude *= rotation;
    }
    return CoherentSuperposition(std::move(out));
}

double phase_gate_error(double beta, double theta) {
    if (beta < 0) {
        throw std::invalid_argument("beta must be non-negative");
    }
    double b2 = beta * beta;
    // 1 - cos(theta) = 2 sin^2(theta/2) keeps precision at small theta.
    double s = std::sin(theta / 2);
    Complex exact = std::exp(Complex(-b2 * 2 * s * s, b2 * std::sin(theta)));
    Complex approx = std::polar(1.0, theta * b2);
    return std::abs(exact - approx);
}

LogicalQubit ideal_output(double alpha, double theta) {
    require_positive_alpha(alpha);
    Complex phase = std::polar(1.0, theta * alpha * alpha);
    return {(1.0 + phase) / 2.0, (1.0 - phase) / 2.0, alpha};
}

double snr_ideal(double v_theta, double alpha) {
    require_positive_alpha(alpha);
    if (v_theta < 0) {
        throw std::invalid_argument("v_theta must be non-negative");
    }
    double n_bar = alpha * alpha / 2;
    return v_theta * n_bar * n_bar;
}

double detection_ratio(const LogicalQubit &q, bool exact_overlaps) {
    if (!exact_overlaps) {
        return std::norm(q.c1) / std::norm(q.c0);
    }
    CoherentSuperposition phi = q.to_superposition();
    double signal = std::norm(inner_product(CoherentSuperposition::coherent(q.alpha), phi));
    double noise = std::norm(inner_product(CoherentSuperposition::coherent(0.0), phi));
    return signal / noise;
}

double monte_carlo_snr_ideal(double v_theta, double alpha, int draws, std::uint64_t seed) {
    if (draws <= 0) {
        throw std::invalid_argument("draws must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> theta_dist(0.0, std::sqrt(v_theta));
    double total = 0;
    for (int k = 0; k < draws; ++k) {
        total += detection_ratio(ideal_output(alpha, theta_dist(rng)), true);
    }
    return total / draws;
}

}  // namespace catruler
