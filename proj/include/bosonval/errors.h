// Copyright 2026 The bosonval Authors
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

#ifndef BOSONVAL_ERRORS_H
#define BOSONVAL_ERRORS_H

#include <stdexcept>
#include <string>

namespace bosonval {

/// Matrix shape does not fit the operation (non-square, too large for an oracle, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mode index or configuration falls outside the ambient mode range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A loaded or supplied matrix failed a unitarity / finiteness check.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Circuit decomposition left a residual above tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every raw weight of a distribution vanished, so it cannot be normalized.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two distributions (or a log and a distribution) live on different supports.
struct SupportError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An observed event has zero probability under a model it is being scored against.
struct ProbabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed input file or configuration. Carries the offending line when known.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bosonval

#endif
