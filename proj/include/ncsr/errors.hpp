// Copyright 2026 The ncsr Authors
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
#include <string>

namespace ncsr {

/// Malformed or inconsistent caller input (shape mismatch, bad index,
/// non-finite entries, unparsable file, ...).
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// A vector family that fails the lower frame bound (does not generate
/// the module).
class NotAFrameError : public InvalidInputError {
 public:
  explicit NotAFrameError(const std::string& what) : InvalidInputError(what) {}
};

/// Backend numerical failure (factorization did not converge, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A certified property was contradicted by a constructive check.  Indicates
/// an implementation bug, never a property of the input.
class FatalInconsistencyError : public std::logic_error {
 public:
  explicit FatalInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ncsr
