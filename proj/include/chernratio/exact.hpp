// Copyright 2026 The chernratio Authors
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

#ifndef CHERNRATIO_EXACT_HPP
#define CHERNRATIO_EXACT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chernratio
{

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational built from numerator / denominator.
Rational make_rational(const Integer &num, const Integer &den);

Integer floor_of(const Rational &q);
Integer ceil_of(const Rational &q);

// Binomial coefficient; zero when n < k or k < 0.
Integer binomial(const Integer &n, long k);

// floor(base^(p/q)) for base >= 0 and a non-negative rational exponent p/q.
Integer floor_power(const Integer &base, const Rational &exponent);

// "p/q", or "p" when the denominator is 1.
std::string fraction_string(const Rational &q);

// Round to `digits` significant decimal digits using exact arithmetic
// (half away from zero). Formatting follows printf's %g conventions.
std::string decimal_string(const Rational &q, int digits = 12);

// Accepts "p", "p/q", or a finite decimal literal such as "-0.125".
// Throws ParameterError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

double to_double(const Rational &q);

// Throws OverflowError when the value does not fit.
std::int64_t to_int64(const Integer &z);

} // namespace chernratio

#endif
