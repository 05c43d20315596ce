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

#ifndef CATRULER_SQUEEZED_BASELINE_H
#define CATRULER_SQUEEZED_BASELINE_H

#include <cstdint>
#include <vector>

namespace catruler {

/// Inputs of the squeezed-vacuum interferometer benchmark: a coherent beam
/// of real amplitude beta in one port and a phase-squeezed vacuum of
/// squeezed-quadrature noise power v_b_minus in the other, sensing phase
/// fluctuations of power v_theta (radians^2).
///
/// Quadrature units: vacuum noise power is 1. The null-port phase quadrature
/// is linearized as
///
///     X- = X_a+ * theta / 2 + X_b-,
///
/// with X_a+ ~ N(beta, 1) and X_b- ~ N(0, v_b_minus). The signal power is then
/// E[(X_a+ theta/2)^2] = (beta^2 + 1) v_theta / 4 and the noise power is
/// v_b_minus, which is exactly the closed form returned by snr_squeezed().
/// This normalization is inferred from that closed form; it places the
/// amplitude-quadrature mean at beta rather than 2 beta.
struct SqueezedBaselineParams {
    double beta = 0;
    double v_b_minus = 1;
    double v_theta = 0;

    /// Throws std::invalid_argument unless beta >= 0, 0 < v_b_minus and
    /// v_theta >= 0.
    void validate() const;
};

/// One draw of X- at fixed theta. Identical seeds give identical draws.
double homodyne_sample(const SqueezedBaselineParams &p, double theta, std::uint64_t rng_seed);

/// `count` independent draws of X- at fixed theta from one seeded stream.
std::vector<double> homodyne_samples(const SqueezedBaselineParams &p, double theta, std::uint64_t rng_seed,
                                     size_t count);

/// (beta^2 + 1) v_theta / (4 v_b_minus).
double snr_squeezed(const SqueezedBaselineParams &p);

/// Sampled estimate of snr_squeezed: the excess variance of X- when theta
/// fluctuates as N(0, v_theta), relative to the variance at theta = 0.
double monte_carlo_snr_squeezed(const SqueezedBaselineParams &p, size_t samples, std::uint64_t seed);

/// Splits n_bar photons equally: beta^2 = n_bar/2 and a pure squeezed vacuum
/// with sinh^2(r) = n_bar/2, giving v_b_minus = exp(-2r). v_theta is left 0.
SqueezedBaselineParams equal_power_params(double n_bar);

}  // namespace catruler

#endif
