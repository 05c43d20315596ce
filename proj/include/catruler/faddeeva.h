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

#ifndef CATRULER_FADDEEVA_H
#define CATRULER_FADDEEVA_H

#include <complex>

namespace catruler {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Uses Weideman's rational approximation with 40 terms in the upper half
/// plane (relative error around 2e-14) and the reflection
/// w(z) = 2 exp(-z^2) - w(-z) below the real axis.
std::complex<double> faddeeva_w(std::complex<double> z);

/// exp(shift) * erfc(z), evaluated without forming the two factors
/// separately so that large cancelling exponents do not overflow.
std::complex<double> scaled_erfc(std::complex<double> z, std::complex<double> shift);

inline std::complex<double> erfc(std::complex<double> z) { return scaled_erfc(z, 0.0); }

}  // namespace catruler

#endif
