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

#include <chernratio/exact.hpp>

#include <cctype>
#include <limits>

#include <chernratio/errors.hpp>

namespace chernratio
{

namespace
{

Integer pow10(long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// 10^e as a rational, e of either sign.
Rational pow10q(long e)
{
    return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e));
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw ParameterError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_of(const Rational &q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational &q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer binomial(const Integer &n, long k)
{
    if (k < 0 || n < k) {
        return 0;
    }
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer floor_power(const Integer &base, const Rational &exponent)
{
    if (base < 0 || exponent < 0) {
        throw ParameterError("floor_power needs a non-negative base and exponent");
    }
    if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p()) {
        throw OverflowError("exponent " + fraction_string(exponent) + " is too large");
    }
    Integer raised;
    mpz_pow_ui(raised.get_mpz_t(), base.get_mpz_t(), exponent.get_num().get_ui());
    Integer r;
    mpz_root(r.get_mpz_t(), raised.get_mpz_t(), exponent.get_den().get_ui());
    return r;
}

std::string fraction_string(const Rational &q)
{
    return q.get_str();
}

std::string decimal_string(const Rational &q, int digits)
{
    if (digits < 1) {
        throw ParameterError("decimal_string needs at least one digit");
    }
    if (q == 0) {
        return "0";
    }
    const bool negative = q < 0;
    const Rational a = abs(q);

    // Decimal exponent: 10^e <= a < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10))
             - static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (pow10q(e) > a) {
        --e;
    }
    while (pow10q(e + 1) <= a) {
        ++e;
    }

    const Rational scaled = a * pow10q(digits - 1 - e);
    Integer n = floor_of(scaled + Rational(1, 2));
    if (n == pow10(digits)) {
        n = pow10(digits - 1);
        ++e;
    }
    std::string mantissa = n.get_str();

    std::string out = negative ? "-" : "";
    if (e < -4 || e >= digits) {
        std::string frac = mantissa.substr(1);
        while (!frac.empty() && frac.back() == '0') {
            frac.pop_back();
        }
        out += mantissa.substr(0, 1);
        if (!frac.empty()) {
            out += "." + frac;
        }
        const long abs_e = e < 0 ? -e : e;
        out += e < 0 ? "e-" : "e+";
        if (abs_e < 10) {
            out += "0";
        }
        out += std::to_string(abs_e);
        return out;
    }

    std::string int_part;
    std::string frac_part;
    if (e >= 0) {
        int_part = mantissa.substr(0, static_cast<std::size_t>(e + 1));
        frac_part = mantissa.substr(static_cast<std::size_t>(e + 1));
    } else {
        int_part = "0";
        frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
    }
    while (!frac_part.empty() && frac_part.back() == '0') {
        frac_part.pop_back();
    }
    out += int_part;
    if (!frac_part.empty()) {
        out += "." + frac_part;
    }
    return out;
}

Integer parse_integer(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw ParameterError("malformed integer '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text)
{
    const auto exp_pos = text.find_first_of("eE");
    if (exp_pos != std::string_view::npos) {
        const Rational mantissa = parse_rational(text.substr(0, exp_pos));
        if (text.substr(0, exp_pos).find('/') != std::string_view::npos) {
            throw ParameterError("malformed number '" + std::string(text) + "'");
        }
        const Integer e = parse_integer(text.substr(exp_pos + 1));
        if (!e.fits_slong_p() || abs(e) > 100000) {
            throw ParameterError("exponent out of range in '" + std::string(text) + "'");
        }
        return mantissa * pow10q(e.get_si());
    }
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw ParameterError("malformed fraction '" + std::string(text) + "'");
        }
        return make_rational(num, Integer(std::string(den_text), 10));
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
        negative = whole.front() == '-';
        whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
        || (!frac.empty() && !all_digits(frac))) {
        throw ParameterError("malformed number '" + std::string(text) + "'");
    }
    const std::string digits = std::string(whole) + std::string(frac);
    Rational q = make_rational(Integer(digits, 10), pow10(static_cast<long>(frac.size())));
    return negative ? Rational(-q) : q;
}

double to_double(const Rational &q)
{
    return q.get_d();
}

std::int64_t to_int64(const Integer &z)
{
    if (!z.fits_slong_p() || sizeof(long) < sizeof(std::int64_t)) {
        // Fallback for platforms with 32-bit long.
        Integer lo = Integer(std::to_string(std::numeric_limits<std::int64_t>::min()));
        Integer hi = Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
        if (z < lo || z > hi) {
            throw OverflowError("integer " + z.get_str() + " does not fit in 64 bits");
        }
        return std::stoll(z.get_str());
    }
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace chernratio
