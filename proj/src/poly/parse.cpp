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

#include "polardeg/parse.hpp"

#include <cctype>
#include <string>

#include "polardeg/error.hpp"

namespace polardeg {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse_expr() {
    Polynomial result(nvars_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    Polynomial t = parse_term();
    result += negative ? -t : t;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+', '-' or '*'");
      get();
      skip_ws();
      Polynomial next = parse_term();
      if (op == '+') {
        result += next;
      } else {
        result -= next;
      }
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
      term *= parse_factor();
    }
    return term;
  }

  Polynomial parse_factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(parse_uint_text());
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        const std::size_t at = pos_;
        mpz_class den(parse_uint_text());
        if (den == 0) fail_at("zero denominator", at);
        value /= Rational(den);
      }
      return Polynomial::constant(nvars_, value);
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == 't') {
      const std::size_t var_pos = pos_;
      get();
      std::size_t index = 0;
      if (c == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::string digits = parse_uint_text();
        if (digits.size() > 6) fail_at("variable index too large", var_pos);
        index = std::stoul(digits);
      } else {
        index = std::string_view("xyzwt").find(c);
      }
      if (index >= nvars_) {
        fail_at("variable index " + std::to_string(index) + " out of range for " +
                    std::to_string(nvars_) + " variables",
                var_pos);
      }
      unsigned exponent = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        const std::size_t at = pos_;
        const std::string digits = parse_uint_text();
        if (digits.size() > 4) fail_at("exponent too large", at);
        exponent = static_cast<unsigned>(std::stoul(digits));
      }
      return Polynomial::monomial(Monomial::variable(nvars_, index, exponent), 1);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string parse_uint_text() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (pos_ == start) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (m[i] >= 2) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace

Polynomial parse(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DomainError("parse needs at least one variable");
  return Parser(text, nvars).parse_expr();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    const Rational magnitude = abs(c);
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str();
      out += '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace polardeg
