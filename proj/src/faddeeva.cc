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

#include <array>
#include <cmath>
#include <numbers>

namespace catruler {

namespace {

constexpr int kTerms = 40;

struct WeidemanTable {
    double scale;
    std::array<double, kTerms> coefficients;  // coefficient of Z^j at index j
};

WeidemanTable build_table() {
    using std::numbers::pi;
    const int m = 2 * kTerms;
    const int n_fft = 2 * m;
    WeidemanTable table{};
    table.scale = std::sqrt(kTerms / std::sqrt(2.0));
    const double l = table.scale;

    // Samples of exp(-t^2)(L^2 + t^2) on the mapped grid t = L tan(theta/2),
    // stored already in fftshift order.
    std::array<double, n_fft> samples{};
    for (int k = -m + 1; k <= m - 1; ++k) {
        double theta = k * pi / m;
        double t = l * std::tan(theta / 2);
        double value = std::exp(-t * t) * (l * l + t * t);
        int unshifted = k + m;  // index in [0] + [k = -m+1 .. m-1] layout
        samples[(unshifted + m) % n_fft] = value;
    }
    for (int j = 1; j <= kTerms; ++j) {
        double acc = 0;
        for (int i = 0; i < n_fft; ++i) {
            acc += samples[i] * std::cos(2 * pi * static_cast<double>(i) * j / n_fft);
        }
        table.coefficients[j - 1] = acc / n_fft;
    }
    return table;
}

const WeidemanTable &table() {
    static const WeidemanTable t = build_table();
    return t;
}

// Valid for Im(z) >= 0.
std::complex<double> faddeeva_upper(std::complex<double> z) {
    const auto &t = table();
    const std::complex<double> i(0, 1);
    std::complex<double> denom = t.scale - i * z;
    std::complex<double> zz = (t.scale + i * z) / denom;
    std::complex<double> p = 0;
    for (int j = kTerms - 1; j >= 0; --j) {
        p = p * zz + t.coefficients[j];
    }
    return 2.0 * p / (denom * denom) + (1 / std::sqrt(std::numbers::pi)) / denom;
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (z.imag() >= 0) {
        return faddeeva_upper(z);
    }
    return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

std::complex<double> scaled_erfc(std::complex<double> z, std::complex<double> shift) {
    const std::complex<double> i(0, 1);
    if (z.real() >= 0) {
        return std::exp(shift - z * z) * faddeeva_upper(i * z);
    }
    return 2.0 * std::exp(shift) - std::exp(shift - z * z) * faddeeva_upper(-i * z);
}

}  // namespace catruler
