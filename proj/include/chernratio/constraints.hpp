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

#ifndef CHERNRATIO_CONSTRAINTS_HPP
#define CHERNRATIO_CONSTRAINTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <chernratio/chow.hpp>
#include <chernratio/exact.hpp>
#include <chernratio/invariants.hpp>

namespace chernratio
{

/// Outcome of one inequality with its exact signed margin.
///
/// Non-strict checks are satisfied iff margin >= 0, strict ones iff margin > 0.
struct Check {
    bool satisfied;
    Rational margin;
    bool strict = false;
};

struct ConstraintEntry {
    std::string id;
    bool satisfied;
    Rational margin;
    bool strict = false;
    std::string note;
};

struct ConstraintReport {
    std::vector<ConstraintEntry> entries;

    bool all_satisfied() const;
    const ConstraintEntry *find(std::string_view id) const;
};

// Fixed vocabulary, in report order.
inline constexpr std::string_view constraint_ids[] = {"ghit",  "genus",   "castelnuovo", "boss",
                                                      "prop1i", "prop1ii", "prop2i",      "prop2ii",
                                                      "prop2iii", "prop5", "prop6"};

enum class SlackMode { strict, slack, asymptotic };

/// How the lower-order terms ("l.t.") of an asymptotic bound are treated.
///
/// strict drops them. slack adds coefficient * d^exponent in the permissive
/// direction; the exponent is used for the BOSS bound, the prop2 bounds use one
/// less than their leading d-degree. asymptotic replaces the comparison by
/// the ratio of the bounded quantity to its leading term.
struct SlackPolicy {
    SlackMode mode = SlackMode::slack;
    Rational coefficient = 1;
    Rational exponent = Rational(7, 2);
};

SlackPolicy make_policy(SlackMode mode, Rational coefficient = 1, Rational exponent = Rational(7, 2));
std::string_view mode_name(SlackMode mode);
SlackMode parse_mode(std::string_view name);

struct CastelnuovoBounds {
    Integer M;
    Integer pgX_max;
    Integer pgY_max;
    Integer chi_min;
    Integer chi_max;
};

// d HK^2 <= (H^2K)^2
Check ghit_check(const InvariantTuple &t);
// 2g - 2 <= d^2/s + d(s-4)
Check genus_check(const InvariantTuple &t, const Integer &s);
CastelnuovoBounds castelnuovo_bounds(const Integer &d);
Check castelnuovo_check(const InvariantTuple &t);
// -24chi >= d^4/s^3 + l.t.
Check boss_check(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy);

struct Prop1Result {
    Check i;
    Check ii;
};
Prop1Result prop1_check(const InvariantTuple &t);

struct Prop2Result {
    Check i;
    Check ii;
    Check iii;
};
Prop2Result prop2_check(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy);

// k^3 d/6 + d^2/2 + d^3/(6k) + k d^2/4 + d^3/24
Rational prop4_rhs(const Integer &k, const Integer &d);
// Least d with C(s+4, 5) <= prop4_rhs(s-1, d).
Integer prop4_min_degree(const Integer &s);

// margin = (d - delta)H^2K - f HK^2, strict.
Check prop5_check(const InvariantTuple &t, const Rational &f, const Rational &delta);
// fs + f(f - 6 + delta/f) + f^2 (f - 6 + delta/f)/(s - f)
Rational prop5_exception_bound(const Rational &f, const Rational &delta, const Integer &s);

// margin = K^3 - a delta1 - b delta2, strict; needs 2 - a - 2b > 0.
Check prop6_check(const InvariantTuple &t, const Rational &a, const Rational &b);
// (6 - 6a - 6b)/(2 - a - 2b)
Rational f_of_ab(const Rational &a, const Rational &b);

struct CheckOptions {
    // Include boss, prop2ii and prop2iii.
    bool asymptotic_bounds = true;
};

// Every entry of constraint_ids except prop5 and prop6, in vocabulary order.
ConstraintReport check_all(const InvariantTuple &t, const Integer &s, const SlackPolicy &policy,
                           const CheckOptions &options = {});

} // namespace chernratio

#endif
