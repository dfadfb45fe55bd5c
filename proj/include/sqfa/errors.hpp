// Copyright 2026 The sqfa Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sqfa {

// Bad parameters and dimension mismatches use std::invalid_argument.

/// A machine description violates a structural invariant (missing table
/// entry, head leaving the tape, non-unitary gate, ...).
struct IllFormedMachine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The machine is well formed but outside what an analysis routine handles.
struct UnsupportedMachine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterated machine whose halting probability per iteration is zero.
struct NonterminationDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Randomized construction ran out of its retry budget.
struct ConstructionFailed : std::runtime_error {
    ConstructionFailed(const std::string& what, double best)
        : std::runtime_error(what), best_error(best) {}
    double best_error;
};

/// Machine document rejected by the loader. `location` is a JSON-pointer-like
/// path to the offending element.
struct LoadError : std::runtime_error {
    LoadError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what),
          location(std::move(where)) {}
    std::string location;
};

}  // namespace sqfa
