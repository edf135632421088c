// Copyright 2026 The polardeg Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polardeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation called outside its domain (dimension or degree mismatch,
/// non-homogeneous input where homogeneity is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A singularity profile whose formulas produce impossible values
/// (negative polar degree, negative Milnor jump, ...).
class InconsistentProfile : public Error {
 public:
  using Error::Error;
};

/// Profile document does not match the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Lower-bound style operations need sectional Milnor numbers.
class MissingSectionalData : public Error {
 public:
  using Error::Error;
};

/// Requested oracle run needs more paths than the supported budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace polardeg
