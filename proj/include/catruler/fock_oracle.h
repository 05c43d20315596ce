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

#ifndef CATRULER_FOCK_ORACLE_H
#define CATRULER_FOCK_ORACLE_H

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "catruler/coherent_algebra.h"
#include "catruler/physical_realization.h"

namespace catruler {

/// Single-mode state in the number basis |0>..|n_max>.
class FockVector {
   public:
    /// `tail_mass` records the probability of the intended state beyond n_max.
    explicit FockVector(std::vector<Complex> coefficients, double tail_mass = 0);

    int truncation() const { return static_cast<int>(coefficients_.size()) - 1; }
    std::span<const Complex> coefficients() const { return coefficients_; }
    Complex operator[](int n) const { return coefficients_[static_cast<size_t>(n)]; }
    double tail_mass() const { return tail_mass_; }
    double norm_squared() const;

   private:
    std::vector<Complex> coefficients_;
    double tail_mass_;
};

Complex inner_product(const FockVector &a, const FockVector &b);
double mean_photon_number(const FockVector &v);

/// Per-mode truncation max(30, ceil(g^2 + 8 g + 20)) for largest amplitude g.
int truncation_for_amplitude(double max_abs_amplitude);

/// e^{-|g|^2/2} g^n / sqrt(n!) for n <= n_max. Throws TruncationError if the
/// mass beyond n_max exceeds `max_tail`.
FockVector coherent_to_fock(Complex gamma, int n_max, double max_tail = 1e-8);

/// Sum of coherent_to_fock over the terms of `s`.
FockVector superposition_to_fock(const CoherentSuperposition &s, int n_max, double max_tail = 1e-8);

/// exp(i theta a^dagger a).
FockVector phase_shift_fock(const FockVector &v, double theta);

/// Two-mode state with amplitudes at(m, n) for |m>_a |n>_b, 0 <= m, n <= n_max.
class TwoModeFockTensor {
   public:
    explicit TwoModeFockTensor(int n_max);
    static TwoModeFockTensor product(const FockVector &a, const FockVector &b);

    int truncation() const { return n_max_; }
    Complex &at(int m, int n) { return data_[index(m, n)]; }
    Complex at(int m, int n) const { return data_[index(m, n)]; }
    double norm_squared() const;
    /// <photons in a + photons in b>.
    double mean_total_photons() const;

   private:
    size_t index(int m, int n) const { return static_cast<size_t>(m) * (n_max_ + 1) + n; }
    int n_max_;
    std::vector<Complex> data_;
};

/// exp(i mix_angle (a^dagger b + a b^dagger)) restricted to the sector with
/// `total` photons, basis ordered by the photon number in mode a. Computed by
/// scaling and squaring of the Taylor series; throws NumericalError if the
/// result is not unitary to 1e-12.
Eigen::MatrixXcd mixing_block_exponential(int total, double mix_angle);

/// Beamsplitter unitary matching the coherent-state relation
/// |g>|b> -> |cos t g + i sin t b>|cos t b + i sin t g>. Throws
/// TruncationError if more than 1e-8 of the norm leaves the grid.
TwoModeFockTensor beamsplitter_fock(const TwoModeFockTensor &state, double mix_angle);

struct ParityDistribution {
    double p_even;
    double p_odd;
};

/// Even and odd photon-number probabilities, normalized by the vector norm.
ParityDistribution parity_distribution(const FockVector &v);

/// Oscillator eigenfunctions <x|n>, n = 0..n_max, in the given quadrature
/// convention, by upward recurrence with running rescaling so that large |x|
/// and large n neither overflow nor lose the Gaussian factor.
std::vector<double> oscillator_eigenfunctions(int n_max, double x,
                                              const QuadratureConvention &conv = QuadratureConvention::standard());

/// Probability mass of the quadrature distribution of `v` below `threshold`
/// (amplitude units, as in threshold_probability). Integrated on a composite
/// Gauss-Legendre grid refined until successive results agree; throws
/// NumericalError if they do not.
double quadrature_cdf_fock(const FockVector &v, double threshold,
                           const QuadratureConvention &conv = QuadratureConvention::standard());

struct OracleResult {
    double p_plus;  // joint: cat outcome and quadrature below alpha/2
    double p_minus;
    double p_plus_conditional;
    double p_minus_conditional;
    double plus_weight;
    double minus_weight;
    double leakage;
    int truncation;
};

/// The interferometer computed entirely in the number basis: cat (x) cat,
/// phase on mode a, beamsplitter unitary, projection of mode c onto the exact
/// cats, quadrature threshold on mode d. `n_max` <= 0 picks the truncation
/// from truncation_for_amplitude().
OracleResult end_to_end_oracle(const RealizationParams &p, int n_max = 0,
                               const QuadratureConvention &conv = QuadratureConvention::standard());

}  // namespace catruler

#endif
