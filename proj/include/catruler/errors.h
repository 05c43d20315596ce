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

#ifndef CATRULER_ERRORS_H
#define CATRULER_ERRORS_H

#include <stdexcept>
#include <string>

namespace catruler {

/// Raised when a numerical procedure cannot reach its stated accuracy:
/// quadrature that does not converge, a Fock truncation that loses too much
/// probability mass, or a fringe feature that cannot be located in a scan.
/// Invalid arguments are reported with std::invalid_argument instead.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Truncated number-basis representation is too small for the requested state.
class TruncationError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

}  // namespace catruler

#endif
