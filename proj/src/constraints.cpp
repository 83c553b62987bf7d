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

#include <chernratio/constraints.hpp>

#include <algorithm>

#include <chernratio/errors.hpp>

namespace chernratio
{

namespace
{

Check non_strict(Rational margin)
{
    const bool ok = margin >= 0;
    return Check{ok, std::move(margin), false};
}

Check strict(Rational margin)
{
    const bool ok = margin > 0;
    return Check{ok, std::move(margin), true};
}

void require_positive_s(const Integer &s)
{
    if (s < 1) {
        throw ParameterError("s = " + s.get_str() + " must be positive");
    }
}

Integer ipow(const Integer &base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Lower-bound inequality value >= leading (+ l.t.) under the policy.
// slack_term is coefficient * d^(exponent) as already evaluated by the caller.
Check lower_bound_check(const Rational &value, const Rational &leading, const Rational &slack_term,
                        SlackMode mode)
{
    switch (mode) {
    case SlackMode::strict:
        return non_strict(value - leading);
    case SlackMode::slack:
        return non_strict(value - leading + slack_term);
    case SlackMode::asymptotic:
        return non_strict(value / leading);
    }
    throw ParameterError("unknown slack mode");
}

ConstraintEntry entry(std::string id, const Check &c, std::string note = {})
{
    return ConstraintEntry{std::move(id), c.satisfied, c.margin, c.strict, std::move(note)};
}

} // namespace

bool ConstraintReport::all_satisfied() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ConstraintEntry &e) { return e.satisfied; });
}

const ConstraintEntry *ConstraintReport::find(std::string_view id) const
{
    for (const auto &e : entries) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

SlackPolicy make_policy(SlackMode mode, Rational coefficient, Rational exponent)
{
    if (coefficient < 0) {
        throw ParameterError("slack coefficient must be non-negative, got " + coefficient.get_str());
    }
    if (exponent < 0) {
        throw ParameterError("slack exponent must be non-negative, got " + exponent.get_str());
    }
    return SlackPolicy{mode, std::move(coefficient), std::move(exponent)};
}

std::string_view mode_name(SlackMode mode)
{
    switch (mode) {
    case SlackMode::strict:
        return "strict";
    case SlackMode::slack:
        return "slack";
    case SlackMode::asymptotic:
        return "asymptotic";
    }
    return "?";
}

SlackMode parse_mode(std::string_view name)
{
    if (name == "strict") {
        return SlackMode::strict;
    }
    if (name == "slack") {
        return SlackMode::slack;
    }
    if (name == "asymptotic") {
        return SlackMode::asymptotic;
    }
    throw ParameterError("unknown policy '" + std::string(name) + "' (expected strict, slack or asymptotic)");
}

Check ghit_check(const InvariantTuple &t)
{
    return non_strict(Rational(t.h2k * t.h2k - t.d * t.hk2));
}

Check genus_check(const InvariantTuple &t, const Integer &s)
{
    require_positive_s(s);
    const Rational bound = make_rational(t.d * t.d, s) + t.d * (s - 4);
    return non_strict(bound - (t.h2k + 2 * t.d));
}

CastelnuovoBounds castelnuovo_bounds(const Integer &d)
{
    if (d < 1) {
        throw ParameterError("degree must be positive, got " + d.get_str());
    }
    CastelnuovoBounds b;
    b.M = (d - 1) / 2;
    b.pgX_max = 2 * binomial(b.M, 4) + binomial(b.M, 3);
    b.pgY_max = 2 * binomial(b.M, 3) + binomial(b.M, 2);
    // chi = 1 - h^1 + h^2 - h^3 with h^1(O_X) = 0, h^2(O_X) = p_g(Y), h^3(O_X) = p_g(X).
    b.chi_min = 1 - b.pgX_max;
    b.chi_max = 1 + b.pgY_max;
    return b;
}

Check castelnuovo_check(const InvariantTuple &t)
{
    const CastelnuovoBounds b = castelnuovo_bounds(t.d);
    return non_strict(Rational(std::min(Integer(t.chi - b.chi_min), Integer(b.chi_max - t.chi))));
}

Check boss_check(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy)
{
    require_positive_s(s);
    const Rational leading = make_rational(ipow(t.d, 4), ipow(s, 3));
    Rational slack = 0;
    if (policy.mode == SlackMode::slack) {
        slack = policy.coefficient * floor_power(t.d, policy.exponent);
    }
    return lower_bound_check(Rational(-24 * t.chi), leading, slack, policy.mode);
}

Prop1Result prop1_check(const InvariantTuple &t)
{
    const TwistedNormalData n = twisted_normal_segre(t);
    return Prop1Result{non_strict(Rational(n.s2H)), non_strict(Rational(n.s3))};
}

Prop2Result prop2_check(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy)
{
    require_positive_s(s);
    const Integer &d = t.d;
    Prop2Result r;
    // Adjunction-sharpened: H^2K = 2g - 2 - 2d <= d^2/s + d(s-6).
    r.i = non_strict(make_rational(d * d, s) + d * (s - 6) - t.h2k);

    const Rational lead_ii = make_rational(ipow(d, 3), ipow(s, 2));
    switch (policy.mode) {
    case SlackMode::strict:
        r.ii = non_strict(lead_ii - t.hk2);
        break;
    case SlackMode::slack:
        r.ii = non_strict(lead_ii + policy.coefficient * ipow(d, 2) - t.hk2);
        break;
    case SlackMode::asymptotic:
        r.ii = non_strict(1 - Rational(t.hk2) / lead_ii);
        break;
    }

    const Rational lead_iii = make_rational(ipow(d, 4), ipow(s, 3));
    r.iii = lower_bound_check(Rational(t.k3), lead_iii, policy.coefficient * ipow(d, 3), policy.mode);
    return r;
}

Rational prop4_rhs(const Integer &k, const Integer &d)
{
    if (k < 1 || d < 1) {
        throw ParameterError("prop4_rhs needs k >= 1 and d >= 1");
    }
    const Integer d2 = d * d;
    const Integer d3 = d2 * d;
    return make_rational(k * k * k * d, 6) + make_rational(d2, 2) + make_rational(d3, 6 * k)
           + make_rational(k * d2, 4) + make_rational(d3, 24);
}

Integer prop4_min_degree(const Integer &s)
{
    if (s < 2) {
        throw ParameterError("prop4_min_degree needs s >= 2, got " + s.get_str());
    }
    const Integer k = s - 1;
    const Rational target(binomial(k + 5, 5));
    // prop4_rhs is strictly increasing in d, so bracket then bisect.
    Integer lo = 1;
    Integer hi = 1;
    while (prop4_rhs(k, hi) < target) {
        lo = hi + 1;
        hi *= 2;
    }
    while (lo < hi) {
        const Integer mid = (lo + hi) / 2;
        if (prop4_rhs(k, mid) >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

Check prop5_check(const InvariantTuple &t, const Rational &f, const Rational &delta)
{
    return strict((t.d - delta) * t.h2k - f * t.hk2);
}

Rational prop5_exception_bound(const Rational &f, const Rational &delta, const Integer &s)
{
    if (f <= 0) {
        throw InapplicableError("exception bound needs f > 0, got f = " + f.get_str());
    }
    if (Rational(s) == f) {
        throw InapplicableError("exception bound undefined at s = f = " + f.get_str());
    }
    const Rational delta1 = delta / f;
    const Rational inner = f - 6 + delta1;
    return f * s + f * inner + f * f * inner / (s - f);
}

Check prop6_check(const InvariantTuple &t, const Rational &a, const Rational &b)
{
    if (2 - a - 2 * b <= 0) {
        throw InapplicableError("prop6 needs 2 - a - 2b > 0, got a = " + a.get_str() + ", b = " + b.get_str());
    }
    const DeltaPair dp = deltas(t);
    return strict(t.k3 - a * dp.delta1 - b * dp.delta2);
}

Rational f_of_ab(const Rational &a, const Rational &b)
{
    const Rational den = 2 - a - 2 * b;
    if (den <= 0) {
        throw InapplicableError("f(a, b) needs 2 - a - 2b > 0, got a = " + a.get_str() + ", b = " + b.get_str());
    }
    return (6 - 6 * a - 6 * b) / den;
}

ConstraintReport check_all(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy,
                           const CheckOptions &options)
{
    require_positive_s(s);
    const std::string mode(mode_name(policy.mode));
    ConstraintReport r;
    r.entries.push_back(entry("ghit", ghit_check(t)));
    r.entries.push_back(entry("genus", genus_check(t, s)));

    const CastelnuovoBounds cb = castelnuovo_bounds(t.d);
    r.entries.push_back(
        entry("castelnuovo", castelnuovo_check(t), "chi in [" + cb.chi_min.get_str() + ", " + cb.chi_max.get_str() + "]"));

    const std::string ratio_note = policy.mode == SlackMode::asymptotic ? " (margin is ratio to leading term)" : "";
    if (options.asymptotic_bounds) {
        r.entries.push_back(entry("boss", boss_check(t, s, policy), mode + ratio_note));
    }

    const Prop1Result p1 = prop1_check(t);
    r.entries.push_back(entry("prop1i", p1.i, "s2(N(-1)).H"));
    r.entries.push_back(entry("prop1ii", p1.ii, "s3(N(-1))"));

    const Prop2Result p2 = prop2_check(t, s, policy);
    std::string positivity;
    if (t.h2k <= 0 || t.hk2 <= 0 || t.k3 <= 0) {
        positivity = "H^iK^j > 0 fails";
    }
    r.entries.push_back(entry("prop2i", p2.i, positivity));
    if (options.asymptotic_bounds) {
        r.entries.push_back(entry("prop2ii", p2.ii,
                                  policy.mode == SlackMode::asymptotic ? mode + " (margin is 1 - ratio)" : mode));
        r.entries.push_back(entry("prop2iii", p2.iii, mode + ratio_note));
    }
    return r;
}

} // namespace chernratio
