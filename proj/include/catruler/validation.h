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

#ifndef CATRULER_VALIDATION_H
#define CATRULER_VALIDATION_H

#include <cstdint>
#include <utility>
#include <vector>

#include "catruler/physical_realization.h"

namespace catruler {

/// One randomized interferometer configuration for oracle comparison.
struct OracleCase {
    double alpha;
    double theta;
};

/// `count` cases with alpha uniform in [min(1, max_alpha/2), max_alpha] and
/// theta uniform in [0, 2 pi), from a seeded stream.
std::vector<OracleCase> random_oracle_cases(int count, double max_alpha, std::uint64_t seed);

struct OracleCaseReport {
    OracleCase config;
    double joint_deviation;        // max |dP+|, |dP-| of joint probabilities
    double conditional_deviation;  // same for conditional probabilities
    double weight_deviation;       // max |dw+|, |dw-|, |d leakage|
    double analytic_closure;       // |w+ + w- + leakage - 1|, analytic path
    double oracle_norm_defect;     // |<psi|psi> - 1| after the Fock beamsplitter
    int truncation;
};

struct OracleValidation {
    std::vector<OracleCaseReport> cases;
    double max_probability_deviation = 0;
    double max_weight_deviation = 0;
    double max_closure = 0;
    double max_oracle_norm_defect = 0;
    bool probabilities_pass = false;
    bool closure_pass = false;
    bool passed() const { return probabilities_pass && closure_pass; }
};

inline constexpr double kOracleProbabilityTolerance = 1e-6;
inline constexpr double kClosureTolerance = 1e-9;

/// Runs each case through the analytic pipeline and the Fock oracle.
/// `coefficient_perturbation` scales the first plus-outcome coefficient of
/// the analytic state by (1 + perturbation); nonzero values exist only to
/// check that the comparison detects a corrupted pipeline.
OracleValidation validate_against_oracle(const std::vector<OracleCase> &cases,
                                         double coefficient_perturbation = 0);

/// Symmetric scan window of three phase-gate periods on each side of zero.
std::pair<double, double> auto_theta_span(double alpha);

/// Least-squares slope of log(y) against log(x).
double fit_power_law_exponent(const std::vector<double> &x, const std::vector<double> &y);

struct WidthScaling {
    std::vector<double> alphas;
    std::vector<double> widths;
    std::vector<double> ratios;  // width(alphas[k]) / width(alphas[k+1])
    double exponent = 0;         // only meaningful with two or more alphas
};

WidthScaling width_scaling(const std::vector<double> &alphas, int n_points,
                           NormalizationMode mode = NormalizationMode::kConditional, int threads = 1);

struct RulerReport {
    double alpha;
    double wavelength;
    double standard_interval;  // wavelength / 2
    double ruler_interval;     // wavelength / (2 alpha^2)
    double scan_spacing;       // extremum spacing of a scan, as a length
    double scan_period;        // full fringe period of the same scan, as a length
    double relative_deviation;  // |scan_spacing - ruler_interval| / ruler_interval
};

/// Compares the closed-form ruler interval with the spacing between
/// successive fringe extrema of an auto-span scan, converted to length by
/// delta = theta lambda / 2pi. As in a standard interferometer, where a 2 pi
/// fringe period steps off wavelength / 2, the stepped interval is the
/// extremum spacing, half of the full period.
RulerReport quantum_ruler(double alpha, double wavelength, int n_points = 801, int threads = 1);

struct SnrComparison {
    double n_bar;
    double snr_ideal;     // single cat with alpha^2 / 2 = n_bar
    double snr_squeezed;  // equal_power_params(n_bar)
    double ratio;
    // The two-cat realization spends 2 n_bar photons; compare against the
    // squeezed scheme given the same total.
    double resource_adjusted_ratio;
};

SnrComparison compare_snr(double n_bar, double v_theta);

}  // namespace catruler

#endif
