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

#include "catruler/coherent_algebra.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "catruler/errors.h"
#include "catruler/faddeeva.h"

namespace catruler {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_self_consistent(const QuadratureConvention &conv) {
    if (!conv.is_self_consistent()) {
        std::ostringstream msg;
        msg << "quadrature convention (mean_scale=" << conv.mean_scale << ", variance=" << conv.variance
            << ") is not consistent with coherent-state overlaps; variance must equal mean_scale^2/4";
        throw std::invalid_argument(msg.str());
    }
}

// Sum of |c_k| squared, the natural magnitude scale for Gram-matrix residues.
double coefficient_scale(const CoherentSuperposition &s) {
    double total = 0;
    for (const auto &t : s.terms()) {
        total += std::abs(t.coefficient);
    }
    return total * total;
}

double closed_form_cdf(const CoherentSuperposition &s, double threshold) {
    // Pairwise integral of conj(psi_k) psi_l up to T in the standard convention:
    //   1/2 exp(2 m^2 - a^2 - b^2 + i(p a - q b)) erfc(-sqrt(2) (T - m)),
    // with m = (a + b + i(q - p)) / 2 the complex centre of the product.
    const Complex i(0, 1);
    Complex total = 0;
    for (const auto &k : s.terms()) {
        double a = k.amplitude.real();
        double p = k.amplitude.imag();
        for (const auto &l : s.terms()) {
            double b = l.amplitude.real();
            double q = l.amplitude.imag();
            Complex m = 0.5 * Complex(a + b, q - p);
            Complex shift = 2.0 * m * m - a * a - b * b + i * (p * a - q * b);
            Complex z = -std::sqrt(2.0) * (threshold - m);
            total += std::conj(k.coefficient) * l.coefficient * 0.5 * scaled_erfc(z, shift);
        }
    }
    return total.real();
}

}  // namespace

CoherentSuperposition::CoherentSuperposition(std::vector<CoherentTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("coherent superposition needs at least one term");
    }
    for (const auto &t : terms_) {
        if (!is_finite(t.coefficient) || !is_finite(t.amplitude)) {
            throw std::invalid_argument("coherent superposition has a non-finite coefficient or amplitude");
        }
    }
}

CoherentSuperposition::CoherentSuperposition(std::initializer_list<CoherentTerm> terms)
    : CoherentSuperposition(std::vector<CoherentTerm>(terms)) {
}

CoherentSuperposition CoherentSuperposition::coherent(Complex amplitude) {
    return CoherentSuperposition({CoherentTerm{1.0, amplitude}});
}

CoherentSuperposition CoherentSuperposition::scaled(Complex factor) const {
    std::vector<CoherentTerm> out(terms_.begin(), terms_.end());
    for (auto &t : out) {
        t.coefficient *= factor;
    }
    return CoherentSuperposition(std::move(out));
}

bool QuadratureConvention::is_self_consistent() const {
    return mean_scale > 0 && variance > 0 && std::isfinite(mean_scale) &&
           std::abs(variance - mean_scale * mean_scale / 4) <= 1e-12 * std::max(1.0, variance);
}

Complex overlap(Complex tau, Complex gamma) {
    return std::exp(-0.5 * (std::norm(tau) + std::norm(gamma)) + std::conj(tau) * gamma);
}

Complex inner_product(const CoherentSuperposition &s, const CoherentSuperposition &t) {
    Complex total = 0;
    for (const auto &a : s.terms()) {
        for (const auto &b : t.terms()) {
            total += std::conj(a.coefficient) * b.coefficient * overlap(a.amplitude, b.amplitude);
        }
    }
    return total;
}

double norm_squared(const CoherentSuperposition &s) {
    Complex gram = inner_product(s, s);
    double scale = std::max(1.0, coefficient_scale(s));
    if (std::abs(gram.imag()) > 1e-9 * scale) {
        throw NumericalError("norm has an imaginary residue; coefficients are corrupted");
    }
    double value = gram.real();
    if (value < 0) {
        if (value < -1e-12 * scale) {
            throw NumericalError("Gram-matrix norm is negative beyond rounding tolerance");
        }
        return 0;
    }
    return value;
}

CoherentSuperposition normalized(const CoherentSuperposition &s) {
    double n2 = norm_squared(s);
    if (n2 <= 0) {
        throw NumericalError("cannot normalize a zero-norm superposition");
    }
    return s.scaled(1 / std::sqrt(n2));
}

CoherentSuperposition displace(const CoherentSuperposition &s, Complex d) {
    std::vector<CoherentTerm> out;
    out.reserve(s.size());
    for (const auto &t : s.terms()) {
        Complex phase = std::exp(0.5 * (d * std::conj(t.amplitude) - std::conj(d) * t.amplitude));
        out.push_back({t.coefficient * phase, t.amplitude + d});
    }
    return CoherentSuperposition(std::move(out));
}

std::pair<Complex, Complex> beamsplitter(Complex gamma_a, Complex gamma_b, double mix_angle) {
    const Complex i(0, 1);
    double c = std::cos(mix_angle);
    double s = std::sin(mix_angle);
    return {c * gamma_a + i * s * gamma_b, c * gamma_b + i * s * gamma_a};
}

Complex quadrature_wavefunction(Complex gamma, double x, const QuadratureConvention &conv) {
    require_self_consistent(conv);
    double u = x / conv.mean_scale;
    double x0 = gamma.real();
    double p0 = gamma.imag();
    double amplitude = std::pow(2 / std::numbers::pi, 0.25) / std::sqrt(conv.mean_scale);
    return amplitude * std::exp(Complex(-(u - x0) * (u - x0), 2 * p0 * u - x0 * p0));
}

double threshold_probability(const CoherentSuperposition &s, double threshold, const QuadratureConvention &conv,
                             IntegrationMethod method) {
    require_self_consistent(conv);
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("threshold must be finite");
    }
    if (method == IntegrationMethod::kClosedForm) {
        return std::max(0.0, closed_form_cdf(s, threshold));
    }

    double lo_mean = std::numeric_limits<double>::infinity();
    double hi_mean = -std::numeric_limits<double>::infinity();
    for (const auto &t : s.terms()) {
        lo_mean = std::min(lo_mean, t.amplitude.real());
        hi_mean = std::max(hi_mean, t.amplitude.real());
    }
    double sigma = std::sqrt(conv.variance);
    double lower = conv.mean_scale * lo_mean - 12 * sigma;
    double upper = std::min(conv.mean_scale * threshold, conv.mean_scale * hi_mean + 12 * sigma);
    if (upper <= lower) {
        return 0;
    }

    auto density = [&](double x) {
        Complex psi = 0;
        for (const auto &t : s.terms()) {
            psi += t.coefficient * quadrature_wavefunction(t.amplitude, x, conv);
        }
        return std::norm(psi);
    };
    double error = 0;
    double l1 = 0;
    double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(density, lower, upper, 20, 1e-11,
                                                                                 &error, &l1);
    double norm_floor = 1e-15 * std::max(norm_squared(s), std::numeric_limits<double>::min());
    if (!(error <= 1e-9 * l1 + norm_floor)) {
        std::ostringstream msg;
        msg << "adaptive quadrature did not converge below threshold " << threshold << " (estimated error "
            << error << " on integral " << value << ")";
        throw NumericalError(msg.str());
    }
    return value;
}

}  // namespace catruler
