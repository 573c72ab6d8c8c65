// Copyright 2026 The pigames Authors
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

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pigames {

// All cost arithmetic is exact. Every equality and inequality in this
// library is decided without tolerances.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Renders a rational losslessly: plain integer when the denominator is 1,
/// "num/den" otherwise.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses an exact rational from "num/den", an integer, or a finite decimal
/// (optionally with exponent, e.g. "2.5e-1"). Decimals are read in base 10,
/// so "0.1" is exactly 1/10.
inline Rat parse_rational(std::string_view text) {
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  auto peek = [&]() -> int { return pos < text.size() ? text[pos] : -1; };
  auto read_digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
  };

  bool negative = false;
  if (peek() == '+' || peek() == '-') {
    negative = (text[pos] == '-');
    ++pos;
  }

  std::string int_part;
  read_digits(int_part);

  if (peek() == '/') {
    ++pos;
    std::string den_part;
    read_digits(den_part);
    if (int_part.empty() || den_part.empty() || pos != text.size()) return fail();
    Int den(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(Int(int_part), den);
    return negative ? Rat(-r) : r;
  }

  std::string frac_part;
  if (peek() == '.') {
    ++pos;
    read_digits(frac_part);
  }
  if (int_part.empty() && frac_part.empty()) return fail();

  long long exponent = 0;
  if (peek() == 'e' || peek() == 'E') {
    ++pos;
    bool exp_neg = false;
    if (peek() == '+' || peek() == '-') {
      exp_neg = (text[pos] == '-');
      ++pos;
    }
    std::string exp_part;
    read_digits(exp_part);
    if (exp_part.empty() || exp_part.size() > 6) return fail();
    exponent = std::stoll(exp_part);
    if (exp_neg) exponent = -exponent;
  }
  if (pos != text.size()) return fail();

  Int num(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) num = num * 10 + (c - '0');
  long long scale = exponent - static_cast<long long>(frac_part.size());

  Rat r(num);
  if (scale > 0) {
    Int pow10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(scale));
    r *= Rat(pow10);
  } else if (scale < 0) {
    Int pow10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(-scale));
    r /= Rat(pow10);
  }
  return negative ? Rat(-r) : r;
}

}  // namespace pigames
