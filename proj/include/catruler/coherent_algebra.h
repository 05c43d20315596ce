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

#ifndef CATRULER_COHERENT_ALGEBRA_H
#define CATRULER_COHERENT_ALGEBRA_H

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace catruler {

using Complex = std::complex<double>;

/// One term c|gamma> of a coherent-state superposition.
struct CoherentTerm {
    Complex coefficient;
    Complex amplitude;
};

/// A finite weighted sum of coherent states of a single optical mode.
///
/// The terms are not assumed orthogonal; norms and probabilities are computed
/// from the exact coherent-state Gram matrix.
class CoherentSuperposition {
   public:
    /// Throws std::invalid_argument if `terms` is empty or contains a
    /// non-finite coefficient or amplitude.
    explicit CoherentSuperposition(std::vector<CoherentTerm> terms);
    CoherentSuperposition(std::initializer_list<CoherentTerm> terms);

    /// The single coherent state |amplitude>.
    static CoherentSuperposition coherent(Complex amplitude);

    std::span<const CoherentTerm> terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    CoherentSuperposition scaled(Complex factor) const;

   private:
    std::vector<CoherentTerm> terms_;
};

/// Position-space convention for the measured amplitude quadrature x.
///
/// A coherent state |gamma> has quadrature mean `mean_scale * Re(gamma)` and
/// variance `variance`. Only conventions with variance == mean_scale^2 / 4 are
/// consistent with the coherent-state overlap formula; every function taking a
/// convention rejects anything else.
struct QuadratureConvention {
    double mean_scale = 1.0;
    double variance = 0.25;

    static constexpr QuadratureConvention standard() { return {1.0, 0.25}; }
    bool is_self_consistent() const;
};

/// <tau|gamma> = exp(-(|tau|^2 + |gamma|^2)/2 + conj(tau) gamma).
Complex overlap(Complex tau, Complex gamma);

/// <s|t> for two superpositions.
Complex inner_product(const CoherentSuperposition &s, const CoherentSuperposition &t);

/// <s|s>. Values in [-1e-12, 0) are clamped to zero; a more negative value or
/// an imaginary residue above 1e-9 throws NumericalError.
double norm_squared(const CoherentSuperposition &s);

/// s / sqrt(<s|s>). Throws NumericalError for a zero-norm state.
CoherentSuperposition normalized(const CoherentSuperposition &s);

/// Applies the displacement operator D(d). Each term (c, gamma) becomes
/// (c * exp((d conj(gamma) - conj(d) gamma) / 2), gamma + d).
CoherentSuperposition displace(const CoherentSuperposition &s, Complex d);

/// Beamsplitter action on a product of coherent states:
/// |g>_a |b>_b -> |cos(t) g + i sin(t) b>_a |cos(t) b + i sin(t) g>_b.
std::pair<Complex, Complex> beamsplitter(Complex gamma_a, Complex gamma_b, double mix_angle);

/// Quadrature wave function <x|gamma> in the given convention.
///
/// In the standard convention this is
///   (2/pi)^(1/4) exp(-(x - Re g)^2 + 2i Im(g) x - i Re(g) Im(g)),
/// the phase choice that makes integral conj(psi_tau) psi_gamma dx equal
/// overlap(tau, gamma) exactly.
Complex quadrature_wavefunction(Complex gamma, double x,
                                const QuadratureConvention &conv = QuadratureConvention::standard());

enum class IntegrationMethod {
    kAdaptive,    // adaptive Gauss-Kronrod in x
    kClosedForm,  // pairwise Gaussian integrals through the complex error function
};

/// Probability mass of the quadrature distribution of `s` below `threshold`:
///   integral_{-inf}^{T} |sum_k c_k psi_{gamma_k}(x)|^2 dx,
/// with T = conv.mean_scale * threshold, so `threshold` is expressed in
/// amplitude units (the mean of |gamma> sits at Re(gamma)). The state is not
/// normalized first; the result lies in [0, norm_squared(s)].
///
/// Throws NumericalError if the adaptive path cannot reach relative accuracy
/// 1e-9.
double threshold_probability(const CoherentSuperposition &s, double threshold,
                             const QuadratureConvention &conv = QuadratureConvention::standard(),
                             IntegrationMethod method = IntegrationMethod::kAdaptive);

}  // namespace catruler

#endif
