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

#include "catruler/fock_oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "catruler/errors.h"
#include "catruler/ideal_circuit.h"

namespace catruler {

namespace {

constexpr double kBlockSkipMass = 1e-30;
constexpr double kMaxNormLoss = 1e-8;

void require_truncation(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("Fock truncation must be at least 1");
    }
}

FockVector cat_in_fock(double alpha, double sign, int n_max) {
    double e = std::exp(-alpha * alpha / 2);
    double norm = std::sqrt(2 + 2 * sign * e);
    return superposition_to_fock(CoherentSuperposition({{1 / norm, 0.0}, {sign / norm, alpha}}), n_max);
}

}  // namespace

FockVector::FockVector(std::vector<Complex> coefficients, double tail_mass)
    : coefficients_(std::move(coefficients)), tail_mass_(tail_mass) {
    if (coefficients_.size() < 2) {
        throw std::invalid_argument("Fock vector needs truncation >= 1");
    }
}

double FockVector::norm_squared() const {
    double total = 0;
    for (auto c : coefficients_) {
        total += std::norm(c);
    }
    return total;
}

Complex inner_product(const FockVector &a, const FockVector &b) {
    int n = std::min(a.truncation(), b.truncation());
    Complex total = 0;
    for (int k = 0; k <= n; ++k) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double mean_photon_number(const FockVector &v) {
    double total = 0;
    for (int n = 0; n <= v.truncation(); ++n) {
        total += n * std::norm(v[n]);
    }
    return total / v.norm_squared();
}

int truncation_for_amplitude(double max_abs_amplitude) {
    double g = std::abs(max_abs_amplitude);
    return std::max(30, static_cast<int>(std::ceil(g * g + 8 * g + 20)));
}

FockVector coherent_to_fock(Complex gamma, int n_max, double max_tail) {
    require_truncation(n_max);
    std::vector<Complex> c(static_cast<size_t>(n_max) + 1, 0.0);
    double r = std::abs(gamma);
    if (r == 0) {
        c[0] = 1;
        return FockVector(std::move(c), 0);
    }
    double log_r = std::log(r);
    double arg = std::arg(gamma);
    double mass = 0;
    for (int n = 0; n <= n_max; ++n) {
        double log_mag = -r * r / 2 + n * log_r - 0.5 * std::lgamma(n + 1.0);
        c[n] = std::polar(std::exp(log_mag), n * arg);
        mass += std::norm(c[n]);
    }
    double tail = std::max(0.0, 1 - mass);
    if (tail > max_tail) {
        std::ostringstream msg;
        msg << "truncation " << n_max << " leaves tail mass " << tail << " for |gamma| = " << r;
        throw TruncationError(msg.str());
    }
    return FockVector(std::move(c), tail);
}

FockVector superposition_to_fock(const CoherentSuperposition &s, int n_max, double max_tail) {
    std::vector<Complex> c(static_cast<size_t>(n_max) + 1, 0.0);
    double tail = 0;
    for (const auto &t : s.terms()) {
        FockVector v = coherent_to_fock(t.amplitude, n_max, max_tail);
        for (int n = 0; n <= n_max; ++n) {
            c[n] += t.coefficient * v[n];
        }
        tail = std::max(tail, v.tail_mass());
    }
    return FockVector(std::move(c), tail);
}

FockVector phase_shift_fock(const FockVector &v, double theta) {
    std::vector<Complex> c(v.coefficients().begin(), v.coefficients().end());
    for (size_t n = 0; n < c.size(); ++n) {
        c[n] *= std::polar(1.0, theta * static_cast<double>(n));
    }
    return FockVector(std::move(c), v.tail_mass());
}

TwoModeFockTensor::TwoModeFockTensor(int n_max)
    : n_max_(n_max), data_(static_cast<size_t>(n_max + 1) * (n_max + 1), 0.0) {
    require_truncation(n_max);
}

TwoModeFockTensor TwoModeFockTensor::product(const FockVector &a, const FockVector &b) {
    if (a.truncation() != b.truncation()) {
        throw std::invalid_argument("product of Fock vectors needs equal truncations");
    }
    TwoModeFockTensor t(a.truncation());
    for (int m = 0; m <= t.n_max_; ++m) {
        for (int n = 0; n <= t.n_max_; ++n) {
            t.at(m, n) = a[m] * b[n];
        }
    }
    return t;
}

double TwoModeFockTensor::norm_squared() const {
    double total = 0;
    for (auto c : data_) {
        total += std::norm(c);
    }
    return total;
}

double TwoModeFockTensor::mean_total_photons() const {
    double total = 0;
    for (int m = 0; m <= n_max_; ++m) {
        for (int n = 0; n <= n_max_; ++n) {
            total += (m + n) * std::norm(at(m, n));
        }
    }
    return total / norm_squared();
}

Eigen::MatrixXcd mixing_block_exponential(int total, double mix_angle) {
    if (total < 0) {
        throw std::invalid_argument("photon-number sector must be non-negative");
    }
    const int dim = total + 1;
    Eigen::MatrixXcd generator = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 0; m < total; ++m) {
        double element = std::sqrt(static_cast<double>(m + 1) * (total - m));
        generator(m + 1, m) = element;
        generator(m, m + 1) = element;
    }
    Eigen::MatrixXcd a = Complex(0, mix_angle) * generator;

    double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = norm1 > 0.25 ? static_cast<int>(std::ceil(std::log2(norm1 / 0.25))) : 0;
    a /= std::ldexp(1.0, squarings);

    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 40; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }

    double defect =
        (result.adjoint() * result - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > 1e-12) {
        std::ostringstream msg;
        msg << "mixing exponential in sector " << total << " is not unitary (defect " << defect << ")";
        throw NumericalError(msg.str());
    }
    return result;
}

TwoModeFockTensor beamsplitter_fock(const TwoModeFockTensor &state, double mix_angle) {
    const int n_max = state.truncation();
    TwoModeFockTensor out(n_max);
    double lost = 0;
    for (int total = 0; total <= 2 * n_max; ++total) {
        int lo = std::max(0, total - n_max);
        int hi = std::min(total, n_max);
        Eigen::VectorXcd block = Eigen::VectorXcd::Zero(total + 1);
        for (int m = lo; m <= hi; ++m) {
            block(m) = state.at(m, total - m);
        }
        double mass = block.squaredNorm();
        if (mass < kBlockSkipMass) {
            lost += mass;
            continue;
        }
        Eigen::VectorXcd mixed = mixing_block_exponential(total, mix_angle) * block;
        for (int m = 0; m <= total; ++m) {
            if (m >= lo && m <= hi) {
                out.at(m, total - m) = mixed(m);
            } else {
                lost += std::norm(mixed(m));
            }
        }
    }
    if (lost > kMaxNormLoss) {
        std::ostringstream msg;
        msg << "beamsplitter at truncation " << n_max << " lost norm " << lost;
        throw TruncationError(msg.str());
    }
    return out;
}

ParityDistribution parity_distribution(const FockVector &v) {
    double even = 0;
    double odd = 0;
    for (int n = 0; n <= v.truncation(); ++n) {
        (n % 2 == 0 ? even : odd) += std::norm(v[n]);
    }
    double total = even + odd;
    if (!(total > 0)) {
        throw std::invalid_argument("parity of a zero vector");
    }
    return {even / total, odd / total};
}

std::vector<double> oscillator_eigenfunctions(int n_max, double x, const QuadratureConvention &conv) {
    if (!conv.is_self_consistent()) {
        throw std::invalid_argument("quadrature convention is not self-consistent");
    }
    // Normalized Hermite functions h_n(u), u = sqrt2 x / s, with
    // h_{n+1} = sqrt(2/(n+1)) u h_n - sqrt(n/(n+1)) h_{n-1}; <x|n> = (2^(1/4)/sqrt s) h_n(u).
    constexpr double kRescale = 1e150;
    const double u = std::numbers::sqrt2 * x / conv.mean_scale;
    std::vector<double> mantissa(static_cast<size_t>(n_max) + 1);
    std::vector<double> log_scale(static_cast<size_t>(n_max) + 1);
    double running_log = -u * u / 2;
    double prev = 0;
    double cur = std::pow(std::numbers::pi, -0.25);
    mantissa[0] = cur;
    log_scale[0] = running_log;
    for (int n = 0; n < n_max; ++n) {
        double next = std::sqrt(2.0 / (n + 1)) * u * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            running_log += std::log(kRescale);
        }
        mantissa[n + 1] = cur;
        log_scale[n + 1] = running_log;
    }
    const double prefactor = std::pow(2.0, 0.25) / std::sqrt(conv.mean_scale);
    std::vector<double> out(mantissa.size());
    for (size_t n = 0; n < out.size(); ++n) {
        out[n] = prefactor * mantissa[n] * std::exp(log_scale[n]);
    }
    return out;
}

double quadrature_cdf_fock(const FockVector &v, double threshold, const QuadratureConvention &conv) {
    if (!conv.is_self_consistent()) {
        throw std::invalid_argument("quadrature convention is not self-consistent");
    }
    const int n_max = v.truncation();
    // Eigenfunctions up to n_max vanish (below 1e-30) beyond this reach.
    const double reach = conv.mean_scale * (std::sqrt(n_max + 0.5) + 6.5);
    const double lower = -reach;
    const double upper = std::min(conv.mean_scale * threshold, reach);
    if (upper <= lower) {
        return 0;
    }
    auto density = [&](double x) {
        auto phi = oscillator_eigenfunctions(n_max, x, conv);
        Complex psi = 0;
        for (int n = 0; n <= n_max; ++n) {
            psi += v[n] * phi[n];
        }
        return std::norm(psi);
    };
    auto composite = [&](int panels) {
        double width = (upper - lower) / panels;
        double total = 0;
        for (int k = 0; k < panels; ++k) {
            double a = lower + k * width;
            total += boost::math::quadrature::gauss<double, 20>::integrate(density, a, a + width);
        }
        return total;
    };
    int panels = std::max(4, static_cast<int>(std::ceil((upper - lower) / (0.5 * conv.mean_scale))));
    double previous = composite(panels);
    for (int refinement = 0; refinement < 5; ++refinement) {
        panels *= 2;
        double current = composite(panels);
        if (std::abs(current - previous) <= 1e-12 * std::max(1.0, v.norm_squared())) {
            return current;
        }
        previous = current;
    }
    throw NumericalError("quadrature grid did not resolve the Fock-state quadrature distribution");
}

OracleResult end_to_end_oracle(const RealizationParams &p, int n_max, const QuadratureConvention &conv) {
    p.validate();
    if (n_max <= 0) {
        double reach = p.alpha * (std::abs(std::cos(p.phi)) + std::abs(std::sin(p.phi)));
        n_max = truncation_for_amplitude(std::max(p.alpha, reach));
    }
    FockVector reference_cat = cat_in_fock(p.alpha, 1.0, n_max);
    FockVector path_cat = phase_shift_fock(reference_cat, p.theta);
    TwoModeFockTensor mixed = beamsplitter_fock(TwoModeFockTensor::product(path_cat, reference_cat), p.phi);

    FockVector plus_cat = cat_in_fock(p.alpha, 1.0, n_max);
    FockVector minus_cat = cat_in_fock(p.alpha, -1.0, n_max);
    std::vector<Complex> d_plus(static_cast<size_t>(n_max) + 1, 0.0);
    std::vector<Complex> d_minus(static_cast<size_t>(n_max) + 1, 0.0);
    for (int m = 0; m <= n_max; ++m) {
        Complex cp = std::conj(plus_cat[m]);
        Complex cm = std::conj(minus_cat[m]);
        for (int n = 0; n <= n_max; ++n) {
            d_plus[n] += cp * mixed.at(m, n);
            d_minus[n] += cm * mixed.at(m, n);
        }
    }
    FockVector out_plus(std::move(d_plus));
    FockVector out_minus(std::move(d_minus));
    OracleResult r{};
    r.truncation = n_max;
    r.plus_weight = out_plus.norm_squared();
    r.minus_weight = out_minus.norm_squared();
    r.leakage = mixed.norm_squared() - r.plus_weight - r.minus_weight;
    double threshold = p.alpha / 2;
    r.p_plus = quadrature_cdf_fock(out_plus, threshold, conv);
    r.p_minus = quadrature_cdf_fock(out_minus, threshold, conv);
    r.p_plus_conditional = r.p_plus / r.plus_weight;
    r.p_minus_conditional = r.p_minus / r.minus_weight;
    return r;
}

}  // namespace catruler
