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

#ifndef CHERNRATIO_CHOW_HPP
#define CHERNRATIO_CHOW_HPP

#include <array>
#include <string>

#include <chernratio/exact.hpp>
#include <chernratio/invariants.hpp>

namespace chernratio
{

/// Element q0 + q1 h + q2 h^2 + q3 h^3 of Q[h]/(h^4).
///
/// For a 3-fold X in P^5 with h the hyperplane class, integrating a degree-3
/// class against [X] multiplies its h^3 coefficient by d = deg X.
class GradedClass
{
public:
    static constexpr std::size_t size = 4;

    GradedClass() = default;
    GradedClass(Rational q0, Rational q1 = 0, Rational q2 = 0, Rational q3 = 0);

    static GradedClass one();
    // 1 + a h
    static GradedClass linear(const Rational &a);

    const Rational &operator[](std::size_t i) const { return m_q[i]; }
    Rational &operator[](std::size_t i) { return m_q[i]; }

    GradedClass &operator+=(const GradedClass &other);
    GradedClass &operator-=(const GradedClass &other);
    GradedClass &operator*=(const Rational &c);

    friend GradedClass operator+(GradedClass a, const GradedClass &b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass &b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const Rational &c) { return a *= c; }
    friend GradedClass operator*(const GradedClass &a, const GradedClass &b);

    friend bool operator==(const GradedClass &a, const GradedClass &b) { return a.m_q == b.m_q; }

    std::string str() const;

private:
    std::array<Rational, size> m_q{};
};

// Product truncated at degree 3.
GradedClass class_multiply(const GradedClass &u, const GradedClass &v);
// Throws NonUnitError when q0 == 0.
GradedClass class_invert(const GradedClass &u);
GradedClass class_power(const GradedClass &u, unsigned n);

/// X = V(f_a1, f_a2) in P^5, stored with a1 <= a2.
struct CompleteIntersection {
    long a1;
    long a2;

    Integer degree() const { return Integer(a1) * a2; }
};

// Normalizes the order; throws ParameterError unless both degrees are >= 2.
CompleteIntersection make_ci(long a1, long a2);

// c(X) = (1+h)^6 / ((1 + a1 h)(1 + a2 h)).
GradedClass ci_total_chern(const CompleteIntersection &ci);

// K = (a1 + a2 - 6)H; chi from K^3 = (d-15)H^2K - 6HK^2 - 24chi; s = a1.
InvariantTuple ci_invariants(const CompleteIntersection &ci);

// c3(X) evaluated on [X]; throws InvalidTupleError if q3*d is not integral.
Integer euler_from_chern(const GradedClass &c, const Integer &d);

// (c1^3, c1c2, c3) read straight off the total Chern class.
ChernNumbers chern_numbers_from_class(const GradedClass &c, const Integer &d);

/// Chern data of N(-1), N the normal bundle of X in P^5, plus its two
/// Segre numbers. c1(N(-1)) = 4H + K and c2(N(-1)) = (d-5)H^2 - HK are kept
/// as coefficients in the monomial basis of H and K.
struct TwistedNormalData {
    struct Linear {
        Integer h;
        Integer k;
    };
    struct Quadratic {
        Integer hh;
        Integer hk;
        Integer kk;
    };
    Linear c1N;
    Quadratic c2N;
    // (c1^2 - c2) . H
    Integer s2H;
    // c1^3 - 2 c1 c2
    Integer s3;
};

TwistedNormalData twisted_normal_segre(const InvariantTuple &t);

struct SegreNumbers {
    Integer s2H;
    Integer s3;

    friend bool operator==(const SegreNumbers &, const SegreNumbers &) = default;
};

// N(-1) = O(a1-1) + O(a2-1) expanded as graded classes, independent of
// the tuple expressions in twisted_normal_segre.
SegreNumbers ci_twisted_normal_direct(const CompleteIntersection &ci);

struct DpfReport {
    CompleteIntersection ci;
    ChernNumbers direct;
    ChernNumbers via_invariants;
    bool c1cubed_match;
    bool c1c2_match;
    bool c3_match;

    bool all_match() const { return c1cubed_match && c1c2_match && c3_match; }
};

DpfReport verify_dpf(const CompleteIntersection &ci);

} // namespace chernratio

#endif
