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

#ifndef CATRULER_PHYSICAL_REALIZATION_H
#define CATRULER_PHYSICAL_REALIZATION_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "catruler/coherent_algebra.h"

namespace catruler {

/// Cat amplitude alpha, beamsplitter mixing angle phi (reflectivity cos^2 phi)
/// and path phase theta.
struct RealizationParams {
    double alpha = 0;
    double phi = 0;
    double theta = 0;

    /// Parameters with the sign-gate mixing angle phi = pi / (2 alpha^2).
    static RealizationParams with_default_mix(double alpha, double theta);

    /// phi^2 alpha^2; the sign-gate behaviour needs this to be small.
    double approximation_parameter() const { return phi * phi * alpha * alpha; }

    void validate() const;
};

/// output_state() flags runs with approximation_parameter() above this.
inline constexpr double kApproximationWarningLevel = 0.1;

/// One product term c |amp_c>_c |amp_d>_d.
struct TwoModeTerm {
    Complex coefficient;
    Complex amplitude_c;
    Complex amplitude_d;
};

/// Finite sum of products of coherent states on output modes (c, d).
class TwoModeCoherentSum {
   public:
    explicit TwoModeCoherentSum(std::vector<TwoModeTerm> terms);
    std::span<const TwoModeTerm> terms() const { return terms_; }

   private:
    std::vector<TwoModeTerm> terms_;
};

double norm_squared(const TwoModeCoherentSum &s);

/// Two-mode state after the beamsplitter: the phase-shifted cat in mode a and
/// the reference cat in mode b, both exactly normalized, mixed term by term.
/// Mode c is the measured port (the a output), mode d carries the homodyne.
/// Terms are ordered (a, b) = (0, 0), (alpha e^{i theta}, 0), (0, alpha),
/// (alpha e^{i theta}, alpha).
TwoModeCoherentSum pre_measurement_state(const RealizationParams &p);

/// Mode-c overlaps of the normalized plus and minus cats with the four mode-c
/// components of pre_measurement_state(), in the same term order (A, B, C, D).
struct CatCoefficients {
    std::array<Complex, 4> plus;
    std::array<Complex, 4> minus;
};

/// Derived from the beamsplitter expansion.
CatCoefficients cat_coefficients(const RealizationParams &p);

/// The same coefficients evaluated against the mode-c arguments in their
/// commonly quoted printed form, where the D term's argument is
/// alpha (cos phi + i sin phi e^{i theta}). It agrees with
/// cat_coefficients() for A, B, C at every theta and for D only when
/// e^{i theta} = 1; kept to quantify that discrepancy.
CatCoefficients cat_coefficients_as_printed(const RealizationParams &p);

/// Mode-d amplitudes of the four terms.
std::array<Complex, 4> mode_d_amplitudes(const RealizationParams &p);

/// Mode-d states conditioned on finding the plus or minus cat in mode c.
///
/// The projection is onto the two orthonormal cats; whatever lies outside that
/// span is reported as `leakage` (computed from the explicit residual state,
/// not as 1 minus the weights).
struct ConditionalOutput {
    CoherentSuperposition plus_state;   // normalized
    CoherentSuperposition minus_state;  // normalized
    double plus_weight;
    double minus_weight;
    double leakage;
    bool approximation_warning;
};

/// Throws std::invalid_argument for alpha <= 0.
ConditionalOutput output_state(const RealizationParams &p);

enum class NormalizationMode {
    kConditional,  // P(x < alpha/2 | cat outcome)
    kJoint,        // P(x < alpha/2 and cat outcome), the unnormalized states
};

const char *to_string(NormalizationMode mode);
/// Parses "conditional" or "joint"; throws std::invalid_argument otherwise.
NormalizationMode parse_normalization_mode(const std::string &text);

struct MeasurementProbabilities {
    double p_plus;
    double p_minus;
};

/// Probability of a "0" result (amplitude quadrature of mode d below the
/// midpoint alpha/2 between the means of |0> and |alpha>) in each cat bin.
MeasurementProbabilities measurement_probabilities(
    const RealizationParams &p, const QuadratureConvention &conv = QuadratureConvention::standard(),
    NormalizationMode mode = NormalizationMode::kConditional,
    IntegrationMethod method = IntegrationMethod::kAdaptive);

/// (p_minus - p_plus + 1) / 2, the bit-flip corrected fringe.
double fringe_function(double p_plus, double p_minus);
/// (p_plus - p_minus + 1) / 2.
double fringe_complement(double p_plus, double p_minus);

struct FringeSample {
    double theta;
    double p_plus;
    double p_minus;
    double fringe;
    double fringe_complement;
    double leakage;
};

struct FringeCurve {
    double alpha = 0;
    NormalizationMode mode = NormalizationMode::kConditional;
    std::vector<FringeSample> samples;
};

/// Single scan point, exactly as stored by fringe_scan().
FringeSample fringe_point(double alpha, double theta, const QuadratureConvention &conv, NormalizationMode mode);

/// `n_points` uniformly spaced phases over [theta_min, theta_max] with the
/// default mixing angle. Points are independent; `threads` > 1 evaluates them
/// concurrently and the result is identical to a serial scan. A failing point
/// is reported as NumericalError naming its theta.
FringeCurve fringe_scan(double alpha, double theta_min, double theta_max, int n_points,
                        const QuadratureConvention &conv = QuadratureConvention::standard(),
                        NormalizationMode mode = NormalizationMode::kConditional, int threads = 1);

/// Full width of the fringe extremum nearest theta = 0, measured at half the
/// amplitude between it and the neighbouring opposite extrema, with linear
/// interpolation between samples. Throws NumericalError if a half-amplitude
/// crossing is missing on either side.
double central_fringe_width(const FringeCurve &curve);

/// Mean spacing in theta between successive fringe minima of the scan
/// (parabolic refinement around each sampled minimum). Needs two minima.
double fringe_period(const FringeCurve &curve);

/// Mean spacing in theta between successive fringe extrema, minima and
/// maxima alike: half of fringe_period() for a regular fringe pattern. This
/// is the interval that can be stepped off with the interferometer.
double fringe_extremum_spacing(const FringeCurve &curve);

/// Lag in [0, max_lag) maximizing the correlation between a[i] and b[i + lag],
/// for series sampled at uniform `step`. Parabolic refinement on the peak.
double correlation_lag(std::span<const double> a, std::span<const double> b, double step, double max_lag);

/// 2 pi / alpha^2, the period of the e^{i theta alpha^2} phase-gate factor.
double phase_gate_period(double alpha);

/// wavelength / (2 alpha^2): the length interval stepped off by one fringe
/// of the cat interferometer (wavelength / 2 for alpha = 1).
double fringe_spacing_physical(double alpha, double wavelength);

/// Photons consumed per run: two cats, each with mean alpha^2 / 2.
double two_cat_photon_number(double alpha);

}  // namespace catruler

#endif
