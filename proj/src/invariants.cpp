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

#include <chernratio/invariants.hpp>

#include <sstream>

#include <chernratio/errors.hpp>

namespace chernratio
{

namespace
{

Integer k3_from_chi(const Integer &d, const Integer &h2k, const Integer &hk2, const Integer &chi)
{
    return (d - 15) * h2k - 6 * hk2 - 24 * chi;
}

} // namespace

InvariantTuple tuple_from_chi(const Integer &d, const Integer &h2k, const Integer &hk2, const Integer &chi,
                              std::optional<Integer> s)
{
    return InvariantTuple{d, h2k, hk2, k3_from_chi(d, h2k, hk2, chi), chi, std::move(s)};
}

void check_consistency(const InvariantTuple &t)
{
    const Integer expected = k3_from_chi(t.d, t.h2k, t.hk2, t.chi);
    if (expected != t.k3) {
        throw ConsistencyError("k3 = " + t.k3.get_str() + " and chi = " + t.chi.get_str()
                               + " are inconsistent: chi implies k3 = " + expected.get_str());
    }
}

void validate(const InvariantTuple &t)
{
    if (t.d < 1) {
        throw InvalidTupleError("degree d = " + t.d.get_str() + " must be positive");
    }
    if (t.s && *t.s < 1) {
        throw InvalidTupleError("s = " + t.s->get_str() + " must be positive");
    }
    sectional_genus(t);
    check_consistency(t);
}

std::string describe(const InvariantTuple &t)
{
    std::ostringstream os;
    os << "(d=" << t.d << ", h2k=" << t.h2k << ", hk2=" << t.hk2 << ", k3=" << t.k3 << ", chi=" << t.chi;
    if (t.s) {
        os << ", s=" << *t.s;
    }
    os << ")";
    return os.str();
}

DeltaPair deltas(const InvariantTuple &t)
{
    const Integer &d = t.d;
    return DeltaPair{(d - 15) * t.h2k - 6 * t.hk2, (6 * d - 70) * d + (2 * d - 51) * t.h2k - 12 * t.hk2};
}

ChernNumbers chern_from_invariants(const InvariantTuple &t)
{
    check_consistency(t);
    const DeltaPair dp = deltas(t);
    return ChernNumbers{-t.k3, dp.delta1 - t.k3, dp.delta2 - t.k3};
}

ChernRatios ratios(const ChernNumbers &c)
{
    if (c.c1c2 == 0) {
        throw RatiosUndefinedError("c1c2 = 0: ratios undefined for Chern numbers (" + c.c1cubed.get_str() + ", 0, "
                                   + c.c3.get_str() + ")");
    }
    return ChernRatios{make_rational(c.c1cubed, c.c1c2), make_rational(c.c3, c.c1c2)};
}

ChernRatios ratios_from_deltas(const InvariantTuple &t)
{
    const DeltaPair dp = deltas(t);
    const Integer den = t.k3 - dp.delta1;
    if (den == 0) {
        throw RatiosUndefinedError("K^3 - delta1 = 0 for " + describe(t));
    }
    return ChernRatios{make_rational(t.k3, den), make_rational(t.k3 - dp.delta2, den)};
}

Integer chi_from_invariants(const Integer &d, const Integer &h2k, const Integer &hk2, const Integer &k3)
{
    const Integer num = (d - 15) * h2k - 6 * hk2 - k3;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 24)) {
        throw InvalidTupleError("(d-15)h2k - 6hk2 - k3 = " + num.get_str()
                                + " is not divisible by 24; no smooth 3-fold has this profile");
    }
    return num / 24;
}

SectionalGenus sectional_genus(const InvariantTuple &t)
{
    const Integer twice = t.h2k + 2 * t.d;
    if (mpz_odd_p(twice.get_mpz_t())) {
        throw InvalidTupleError("h2k + 2d = " + twice.get_str() + " is odd; sectional genus is not integral");
    }
    if (twice < -2) {
        throw InvalidTupleError("h2k + 2d = " + twice.get_str() + " < -2 gives a negative sectional genus");
    }
    return SectionalGenus{(twice + 2) / 2};
}

} // namespace chernratio
