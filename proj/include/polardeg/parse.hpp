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
#include <string>
#include <string_view>

#include "polardeg/polynomial.hpp"

namespace polardeg {

/// Parses a polynomial in the variables x0..x{nvars-1}.
///
///   expr     := sign? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var ('^' uint)?
///   var      := 'x' uint | 'x' | 'y' | 'z' | 'w' | 't'
///   rational := uint ('/' uint)?
///
/// The letters x, y, z, w, t alias x0..x4. Whitespace between tokens is
/// ignored. Throws ParseError on bad syntax or an out-of-range variable.
Polynomial parse(std::string_view text, std::size_t nvars);

/// Canonical text: graded-lex order, explicit '*', '^' only for exponents
/// of 2 or more, no spaces. parse(to_string(f), f.nvars()) == f.
std::string to_string(const Polynomial& f);

}  // namespace polardeg
