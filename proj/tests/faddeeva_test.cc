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

#include "catruler/faddeeva.h"

#include <complex>

#include "gtest/gtest.h"

using namespace catruler;
using C = std::complex<double>;

namespace {

void expect_close(C actual, C expected, double rel) {
    EXPECT_LE(std::abs(actual - expected), rel * std::abs(expected)) << actual << " vs " << expected;
}

}  // namespace

// Reference values from scipy.special.wofz.
TEST(Faddeeva, matches_reference_values) {
    expect_close(faddeeva_w(C(0, 0)), C(1, 0), 1e-13);
    expect_close(faddeeva_w(C(1, 1)), C(0.30474420525691254, 0.2082189382028316), 1e-13);
    expect_close(faddeeva_w(C(-2, 0.5)), C(0.10335882374136668, -0.28478588475009387), 1e-13);
    expect_close(faddeeva_w(C(3, -2)), C(-0.081339079928627461, 0.12108616246299858), 1e-12);
    expect_close(faddeeva_w(C(0.1, 6)), C(0.092752429318341906, 0.0015056529933895409), 1e-13);
    expect_close(faddeeva_w(C(10, 0.01)), C(5.7287116224900793e-05, 0.05670533605480961), 1e-13);
    expect_close(faddeeva_w(C(-0.5, -0.5)), C(1.2220084158685705, -1.1893393085928645), 1e-13);
}

// Reference values from mpmath.erfc.
TEST(Faddeeva, complex_erfc) {
    expect_close(erfc(C(0.3, 0.2)), C(0.65876251852786138, -0.20852883788276888), 1e-13);
    expect_close(erfc(C(-1.5, 2)), C(0.89495071022598249, -0.69951168616312442), 1e-12);
    expect_close(erfc(C(2, -1)), C(-0.0036063427256517507, -0.011259006028815025), 1e-12);
}

TEST(Faddeeva, real_axis_agrees_with_std_erfc) {
    for (double x = -6; x <= 6; x += 0.37) {
        EXPECT_NEAR(erfc(C(x, 0)).real(), std::erfc(x), 1e-14 * std::max(1.0, std::erfc(x)));
        EXPECT_NEAR(erfc(C(x, 0)).imag(), 0, 1e-14);
    }
}

TEST(Faddeeva, scaled_erfc_survives_large_cancelling_exponents) {
    // exp(900) * erfc(30) is about 0.0188; both factors alone are out of range.
    C z(30, 0);
    C value = scaled_erfc(z, 900.0);
    double expected = faddeeva_w(C(0, 30)).real();  // exp(-z^2) erfc(z) * exp(z^2)
    EXPECT_NEAR(value.real(), expected, 1e-14);
    EXPECT_TRUE(std::isfinite(value.real()));
}
