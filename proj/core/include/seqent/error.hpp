// Copyright 2026 The seqent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace seqent {

// Precondition violations surface as std::invalid_argument. The types below
// cover failures that happen after the inputs were accepted.

/// A decomposition did not converge or produced values outside roundoff.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fit could not produce the requested quantity (e.g. no interior peak).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace seqent
