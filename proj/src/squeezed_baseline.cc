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

#include "catruler/squeezed_baseline.h"

#include <cmath>
#include <random>
#include <stdexcept>

namespace catruler {

namespace {

struct Sampler {
    explicit Sampler(const SqueezedBaselineParams &p, std::uint64_t seed)
        : rng(seed), amplitude(p.beta, 1.0), squeezed(0.0, std::sqrt(p.v_b_minus)) {
    }

    double draw(double theta) {
        double xa = amplitude(rng);
        double xb = squeezed(rng);
        return xa * theta / 2 + xb;
    }

    std::mt19937_64 rng;
    std::normal_distribution<double> amplitude;
    std::normal_distribution<double> squeezed;
};

double sample_variance(const std::vector<double> &xs) {
    double mean = 0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double acc = 0;
    for (double x : xs) {
        acc += (x - mean) * (x - mean);
    }
    return acc / static_cast<double>(xs.size() - 1);
}

}  // namespace

void SqueezedBaselineParams::validate() const {
    if (!(beta >= 0) || !(v_b_minus > 0) || !(v_theta >= 0) || !std::isfinite(beta) || !std::isfinite(v_b_minus) ||
        !std::isfinite(v_theta)) {
        throw std::invalid_argument("squeezed baseline needs beta >= 0, v_b_minus > 0, v_theta >= 0");
    }
}

double homodyne_sample(const SqueezedBaselineParams &p, double theta, std::uint64_t rng_seed) {
    p.validate();
    Sampler sampler(p, rng_seed);
    return sampler.draw(theta);
}

std::vector<double> homodyne_samples(const SqueezedBaselineParams &p, double theta, std::uint64_t rng_seed,
                                     size_t count) {
    p.validate();
    Sampler sampler(p, rng_seed);
    std::vector<double> out(count);
    for (auto &x : out) {
        x = sampler.draw(theta);
    }
    return out;
}

double snr_squeezed(const SqueezedBaselineParams &p) {
    p.validate();
    return (p.beta * p.beta + 1) * p.v_theta / (4 * p.v_b_minus);
}

double monte_carlo_snr_squeezed(const SqueezedBaselineParams &p, size_t samples, std::uint64_t seed) {
    p.validate();
    if (samples < 2) {
        throw std::invalid_argument("need at least two samples");
    }
    Sampler sampler(p, seed);
    std::normal_distribution<double> theta_dist(0.0, std::sqrt(p.v_theta));
    std::vector<double> quiet(samples);
    std::vector<double> driven(samples);
    for (size_t k = 0; k < samples; ++k) {
        quiet[k] = sampler.draw(0.0);
        driven[k] = sampler.draw(theta_dist(sampler.rng));
    }
    double noise = sample_variance(quiet);
    return (sample_variance(driven) - noise) / noise;
}

SqueezedBaselineParams equal_power_params(double n_bar) {
    if (!(n_bar > 0) || !std::isfinite(n_bar)) {
        throw std::invalid_argument("n_bar must be positive");
    }
    double sinh_r = std::sqrt(n_bar / 2);
    double r = std::asinh(sinh_r);
    return {std::sqrt(n_bar / 2), std::exp(-2 * r), 0.0};
}

}  // namespace catruler
