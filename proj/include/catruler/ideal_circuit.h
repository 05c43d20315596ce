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

#ifndef CATRULER_IDEAL_CIRCUIT_H
#define CATRULER_IDEAL_CIRCUIT_H

#include <cstdint>

#include "catruler/coherent_algebra.h"

namespace catruler {

/// Qubit in the coherent-state encoding |0>_L = |0> (vacuum), |1>_L = |alpha>.
///
/// The logical layer treats the two basis states as orthogonal, which is exact
/// only as alpha grows; non-orthogonality is handled by converting to a
/// CoherentSuperposition.
struct LogicalQubit {
    Complex c0;
    Complex c1;
    double alpha;

    static LogicalQubit zero(double alpha) { return {1.0, 0.0, alpha}; }
    static LogicalQubit one(double alpha) { return {0.0, 1.0, alpha}; }

    /// c0|0> + c1|alpha> as an explicit coherent superposition.
    CoherentSuperposition to_superposition() const;
};

/// Path phase theta = 2 pi delta / wavelength.
struct PropagationSetting {
    double theta;
    double delta;
    double wavelength;

    static PropagationSetting from_lengths(double delta, double wavelength);
};

/// Converts a path-length fluctuation power (length^2) to the phase power in
/// radians^2 used by the signal-to-noise laws.
double phase_variance_from_length_variance(double length_variance, double wavelength);

/// (c0, c1) -> ((c0 + c1)/sqrt2, (c0 - c1)/sqrt2).
LogicalQubit hadamard(const LogicalQubit &q);

/// Cat state |0> + |alpha> after the first Hadamard.
///
/// With `exact_norm` false the coefficients are 1/sqrt2 each, which ignores
/// <0|alpha>; with `exact_norm` true they are 1/sqrt(2 + 2 exp(-alpha^2/2)).
CoherentSuperposition prepare_plus_cat(double alpha, bool exact_norm = true);

/// exp(i theta a^dagger a): every amplitude gamma becomes gamma e^{i theta}.
CoherentSuperposition propagate_exact(const CoherentSuperposition &s, double theta);

/// |exp(-b^2 (1 - cos t - i sin t)) - exp(i t b^2)|, the distance between the
/// exact single-amplitude propagation overlap and its phase-gate limit.
double phase_gate_error(double beta, double theta);

/// H U(theta) H |0>_L in the phase-gate approximation:
/// ((1 + e^{i theta a^2})/2) |0>_L + ((1 - e^{i theta a^2})/2) |1>_L.
LogicalQubit ideal_output(double alpha, double theta);

/// Signal-to-noise of the ideal circuit, v_theta * nbar^2 with nbar = alpha^2/2.
double snr_ideal(double v_theta, double alpha);

/// Signal probability over noise probability for an output state.
/// `exact_overlaps` false uses |c1|^2/|c0|^2 (orthogonal limit); true uses
/// |<alpha|phi>|^2 / |<0|phi>|^2 with exact coherent overlaps.
double detection_ratio(const LogicalQubit &q, bool exact_overlaps);

/// Mean of detection_ratio(ideal_output(alpha, theta), true) over `draws`
/// phases theta ~ N(0, v_theta).
double monte_carlo_snr_ideal(double v_theta, double alpha, int draws, std::uint64_t seed);

}  // namespace catruler

#endif
