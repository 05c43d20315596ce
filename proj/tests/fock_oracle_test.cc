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

#include <cmath>
#include <numbers>

#include "catruler/errors.h"
#include "catruler/physical_realization.h"
#include "gtest/gtest.h"

using namespace catruler;

namespace {

FockVector cat(double alpha, double sign, int n_max) {
    double e = std::exp(-alpha * alpha / 2);
    double c = 1 / std::sqrt(2 + 2 * sign * e);
    return superposition_to_fock(CoherentSuperposition({{c, 0.0}, {sign * c, alpha}}), n_max);
}

FockVector displaced_cat(double alpha, double sign, int n_max) {
    double e = std::exp(-alpha * alpha / 2);
    double c = 1 / std::sqrt(2 + 2 * sign * e);
    return superposition_to_fock(CoherentSuperposition({{c, -alpha / 2}, {sign * c, alpha / 2}}), n_max);
}

}  // namespace

TEST(CoherentToFock, vacuum_and_poisson_moments) {
    auto v = coherent_to_fock(0.0, 10);
    EXPECT_EQ(v[0], Complex(1, 0));
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(v[n], Complex(0, 0));
    }
    auto g = coherent_to_fock(2.0, 60);
    EXPECT_NEAR(mean_photon_number(g), 4, 1e-8);
    EXPECT_NEAR(g.norm_squared() + g.tail_mass(), 1, 1e-14);
    EXPECT_LT(g.tail_mass(), 1e-14);
}

TEST(CoherentToFock, inner_products_match_overlap_formula) {
    EXPECT_NEAR(std::abs(inner_product(coherent_to_fock(0.0, 60), coherent_to_fock(2.0, 60)) - std::exp(-2.0)), 0,
                1e-10);
    Complex a(1.2, -0.7);
    Complex b(-0.4, 2.1);
    EXPECT_NEAR(std::abs(inner_product(coherent_to_fock(a, 60), coherent_to_fock(b, 60)) - overlap(a, b)), 0, 1e-12);
}

TEST(CoherentToFock, large_amplitudes_do_not_overflow) {
    auto v = coherent_to_fock(12.0, truncation_for_amplitude(12));
    EXPECT_NEAR(v.norm_squared(), 1, 1e-10);
    EXPECT_NEAR(mean_photon_number(v), 144, 1e-6);
}

TEST(CoherentToFock, truncation_errors) {
    EXPECT_THROW(coherent_to_fock(3.0, 10), TruncationError);
    EXPECT_THROW(coherent_to_fock(0.0, 0), std::invalid_argument);
}

TEST(TruncationHeuristic, floor_and_growth) {
    EXPECT_EQ(truncation_for_amplitude(0), 30);
    EXPECT_EQ(truncation_for_amplitude(3), 53);
    EXPECT_EQ(truncation_for_amplitude(5), 85);
}

TEST(BeamsplitterFock, zero_angle_is_identity) {
    auto in = TwoModeFockTensor::product(coherent_to_fock(Complex(1, 0.5), 40), coherent_to_fock(-0.8, 40));
    auto out = beamsplitter_fock(in, 0.0);
    for (int m = 0; m <= 40; ++m) {
        for (int n = 0; n <= 40; ++n) {
            EXPECT_NEAR(std::abs(out.at(m, n) - in.at(m, n)), 0, 1e-12);
        }
    }
}

TEST(BeamsplitterFock, maps_coherent_products_like_amplitudes) {
    const int n_max = 50;
    Complex gamma = 1.5;
    Complex beta = 1.0;
    double theta = 0.3;
    auto out = beamsplitter_fock(
        TwoModeFockTensor::product(coherent_to_fock(gamma, n_max), coherent_to_fock(beta, n_max)), theta);
    auto [c, d] = beamsplitter(gamma, beta, theta);
    auto expected = TwoModeFockTensor::product(coherent_to_fock(c, n_max), coherent_to_fock(d, n_max));
    Complex ip = 0;
    for (int m = 0; m <= n_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            ip += std::conj(expected.at(m, n)) * out.at(m, n);
        }
    }
    EXPECT_GE(std::norm(ip), 1 - 1e-8);
    EXPECT_NEAR(out.mean_total_photons(), std::norm(gamma) + std::norm(beta), 1e-8);
    EXPECT_NEAR(out.norm_squared(), 1, 1e-8);
}

TEST(BeamsplitterFock, generator_blocks_are_unitary) {
    for (int total : {0, 1, 7, 40}) {
        Eigen::MatrixXcd u = mixing_block_exponential(total, 0.9);
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(total + 1, total + 1);
        EXPECT_LT((u.adjoint() * u - id).norm(), 1e-12) << total;
    }
    // Single photon in mode a: cos(phi)|1,0> + i sin(phi)|0,1>.
    Eigen::MatrixXcd u1 = mixing_block_exponential(1, 0.4);
    Complex to_a = u1(1, 1);  // ordering by photons in mode a
    Complex to_b = u1(0, 1);
    EXPECT_NEAR(std::abs(to_a - std::cos(0.4)), 0, 1e-14);
    EXPECT_NEAR(std::abs(to_b - Complex(0, std::sin(0.4))), 0, 1e-14);
}

TEST(BeamsplitterFock, reports_excessive_truncation_loss) {
    // |g>|-ig> at a balanced split sends everything to |sqrt(2) g> in one mode.
    auto in = TwoModeFockTensor::product(coherent_to_fock(2.5, 30), coherent_to_fock(Complex(0, -2.5), 30));
    EXPECT_THROW(beamsplitter_fock(in, std::numbers::pi / 4), TruncationError);
}

TEST(Parity, vacuum_and_displaced_cats) {
    auto vac = parity_distribution(coherent_to_fock(0.0, 20));
    EXPECT_EQ(vac.p_even, 1);
    EXPECT_EQ(vac.p_odd, 0);
    for (double alpha : {1.0, 2.0, 3.0}) {
        auto plus = parity_distribution(displaced_cat(alpha, 1, 60));
        auto minus = parity_distribution(displaced_cat(alpha, -1, 60));
        EXPECT_LT(plus.p_odd, 1e-10) << alpha;
        EXPECT_LT(minus.p_even, 1e-10) << alpha;
        EXPECT_NEAR(plus.p_even + plus.p_odd, 1, 1e-12);
    }
}

TEST(Parity, symmetric_superpositions_are_even) {
    for (Complex g : {Complex(0.5, 0.5), Complex(-2, 1), Complex(0, 3)}) {
        auto v = superposition_to_fock(normalized(CoherentSuperposition({{1.0, g}, {1.0, -g}})), 60);
        EXPECT_LT(parity_distribution(v).p_odd, 1e-10);
    }
}

TEST(OscillatorEigenfunctions, orthonormal_on_a_grid) {
    const int n_max = 120;
    const double lo = -16;
    const double hi = 16;
    const int steps = 8000;
    double h = (hi - lo) / steps;
    std::vector<double> gram(5 * 5, 0.0);
    const int picks[5] = {0, 1, 37, 100, 120};
    for (int k = 0; k <= steps; ++k) {
        double w = (k == 0 || k == steps) ? h / 2 : h;
        auto psi = oscillator_eigenfunctions(n_max, lo + k * h);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                gram[i * 5 + j] += w * psi[picks[i]] * psi[picks[j]];
            }
        }
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            EXPECT_NEAR(gram[i * 5 + j], i == j ? 1.0 : 0.0, 1e-9) << picks[i] << "," << picks[j];
        }
    }
}

TEST(OscillatorEigenfunctions, ground_state_matches_vacuum_wavefunction) {
    for (double x : {-1.0, 0.0, 0.4, 2.0}) {
        EXPECT_NEAR(oscillator_eigenfunctions(3, x)[0], quadrature_wavefunction(0.0, x).real(), 1e-15);
    }
    auto far = oscillator_eigenfunctions(200, 30.0);
    for (double v : far) {
        EXPECT_TRUE(std::isfinite(v));
    }
}

TEST(QuadratureCdfFock, symmetry_examples) {
    EXPECT_NEAR(quadrature_cdf_fock(coherent_to_fock(0.0, 30), 0.0), 0.5, 1e-12);
    EXPECT_NEAR(quadrature_cdf_fock(coherent_to_fock(2.0, 60), 2.0), 0.5, 1e-6);
}

TEST(QuadratureCdfFock, matches_analytic_threshold_probability) {
    auto s = normalized(CoherentSuperposition({{1.0, Complex(0.3, 1.0)}, {Complex(0.5, -0.5), Complex(2.5, -1.0)}}));
    auto v = superposition_to_fock(s, 80);
    for (double t : {-0.5, 0.7, 1.3, 3.0}) {
        EXPECT_NEAR(quadrature_cdf_fock(v, t), threshold_probability(s, t), 1e-6) << t;
    }
    auto plus = cat(2, 1, 60);
    EXPECT_NEAR(quadrature_cdf_fock(plus, 1.0),
                threshold_probability(normalized(CoherentSuperposition({{1.0, 0.0}, {1.0, 2.0}})), 1.0), 1e-6);
}

TEST(EndToEndOracle, matches_analytic_pipeline) {
    const double pi = std::numbers::pi;
    for (double theta : {0.0, pi / 8}) {
        auto p = RealizationParams::with_default_mix(2, theta);
        auto o = end_to_end_oracle(p);
        auto out = output_state(p);
        auto joint = measurement_probabilities(p, QuadratureConvention::standard(), NormalizationMode::kJoint);
        EXPECT_NEAR(o.p_plus, joint.p_plus, 1e-6);
        EXPECT_NEAR(o.p_minus, joint.p_minus, 1e-6);
        EXPECT_NEAR(o.plus_weight, out.plus_weight, 1e-6);
        EXPECT_NEAR(o.leakage, out.leakage, 1e-6);
        EXPECT_NEAR(o.plus_weight + o.minus_weight + o.leakage, 1, 1e-9);
    }
}
