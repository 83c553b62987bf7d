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

#include <chernratio/chow.hpp>

#include <sstream>

#include <chernratio/errors.hpp>

namespace chernratio
{

GradedClass::GradedClass(Rational q0, Rational q1, Rational q2, Rational q3)
    : m_q{std::move(q0), std::move(q1), std::move(q2), std::move(q3)}
{
}

GradedClass GradedClass::one()
{
    return GradedClass(1);
}

GradedClass GradedClass::linear(const Rational &a)
{
    return GradedClass(1, a);
}

GradedClass &GradedClass::operator+=(const GradedClass &other)
{
    for (std::size_t i = 0; i < size; ++i) {
        m_q[i] += other.m_q[i];
    }
    return *this;
}

GradedClass &GradedClass::operator-=(const GradedClass &other)
{
    for (std::size_t i = 0; i < size; ++i) {
        m_q[i] -= other.m_q[i];
    }
    return *this;
}

GradedClass &GradedClass::operator*=(const Rational &c)
{
    for (auto &q : m_q) {
        q *= c;
    }
    return *this;
}

GradedClass operator*(const GradedClass &a, const GradedClass &b)
{
    GradedClass r;
    for (std::size_t i = 0; i < GradedClass::size; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < GradedClass::size; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::string GradedClass::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < size; ++i) {
        if (i > 0) {
            os << " + ";
        }
        os << m_q[i].get_str();
        if (i > 0) {
            os << "h";
        }
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

GradedClass class_multiply(const GradedClass &u, const GradedClass &v)
{
    return u * v;
}

GradedClass class_invert(const GradedClass &u)
{
    if (u[0] == 0) {
        throw NonUnitError("cannot invert " + u.str() + ": degree-0 coefficient is zero");
    }
    // Solve u * r = 1 degree by degree.
    GradedClass r;
    r[0] = 1 / u[0];
    for (std::size_t n = 1; n < GradedClass::size; ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            acc += u[i] * r[n - i];
        }
        r[n] = -acc / u[0];
    }
    return r;
}

GradedClass class_power(const GradedClass &u, unsigned n)
{
    GradedClass r = GradedClass::one();
    for (unsigned i = 0; i < n; ++i) {
        r = r * u;
    }
    return r;
}

CompleteIntersection make_ci(long a1, long a2)
{
    if (a1 < 2 || a2 < 2) {
        throw ParameterError("complete intersection degrees must be >= 2, got (" + std::to_string(a1) + ", "
                             + std::to_string(a2) + ")");
    }
    return a1 <= a2 ? CompleteIntersection{a1, a2} : CompleteIntersection{a2, a1};
}

GradedClass ci_total_chern(const CompleteIntersection &ci)
{
    const GradedClass ambient = class_power(GradedClass::linear(1), 6);
    return ambient * class_invert(GradedClass::linear(ci.a1)) * class_invert(GradedClass::linear(ci.a2));
}

InvariantTuple ci_invariants(const CompleteIntersection &ci)
{
    const Integer d = ci.degree();
    const Integer lambda = Integer(ci.a1) + ci.a2 - 6;
    const Integer h2k = lambda * d;
    const Integer hk2 = lambda * lambda * d;
    const Integer k3 = lambda * lambda * lambda * d;
    const Integer chi = chi_from_invariants(d, h2k, hk2, k3);
    return InvariantTuple{d, h2k, hk2, k3, chi, Integer(ci.a1)};
}

Integer euler_from_chern(const GradedClass &c, const Integer &d)
{
    const Rational e = c[3] * d;
    if (e.get_den() != 1) {
        throw InvalidTupleError("c3 . [X] = " + e.get_str() + " is not an integer");
    }
    return e.get_num();
}

ChernNumbers chern_numbers_from_class(const GradedClass &c, const Integer &d)
{
    auto integral = [&](const Rational &coefficient) {
        const Rational v = coefficient * d;
        if (v.get_den() != 1) {
            throw InvalidTupleError("Chern number " + v.get_str() + " is not an integer");
        }
        return Integer(v.get_num());
    };
    return ChernNumbers{integral(c[1] * c[1] * c[1]), integral(c[1] * c[2]), euler_from_chern(c, d)};
}

TwistedNormalData twisted_normal_segre(const InvariantTuple &t)
{
    const Integer &d = t.d;
    TwistedNormalData out;
    out.c1N = {4, 1};
    out.c2N = {d - 5, -1, 0};
    // (4H+K)^2 H - ((d-5)H^2 - HK) H = 16d + 8H^2K + HK^2 - (d-5)d + H^2K
    out.s2H = 9 * t.h2k + t.hk2 - d * (d - 21);
    // (4H+K)^3 - 2(4H+K)((d-5)H^2 - HK)
    out.s3 = t.k3 - 8 * d * (d - 13) - 2 * (d - 33) * t.h2k + 14 * t.hk2;
    return out;
}

SegreNumbers ci_twisted_normal_direct(const CompleteIntersection &ci)
{
    const GradedClass c = GradedClass::linear(ci.a1 - 1) * GradedClass::linear(ci.a2 - 1);
    const GradedClass c1(0, c[1]);
    const GradedClass c2(0, 0, c[2]);
    const GradedClass s2 = c1 * c1 - c2;
    const GradedClass s3 = c1 * c1 * c1 - c1 * c2 * Rational(2);
    const Integer d = ci.degree();
    const Rational s2h = s2[2] * d;
    const Rational s3d = s3[3] * d;
    return SegreNumbers{s2h.get_num(), s3d.get_num()};
}

DpfReport verify_dpf(const CompleteIntersection &ci)
{
    const ChernNumbers direct = chern_numbers_from_class(ci_total_chern(ci), ci.degree());
    const ChernNumbers formula = chern_from_invariants(ci_invariants(ci));
    return DpfReport{ci,
                     direct,
                     formula,
                     direct.c1cubed == formula.c1cubed,
                     direct.c1c2 == formula.c1c2,
                     direct.c3 == formula.c3};
}

} // namespace chernratio
