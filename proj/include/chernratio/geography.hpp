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

#ifndef CHERNRATIO_GEOGRAPHY_HPP
#define CHERNRATIO_GEOGRAPHY_HPP

#include <optional>
#include <utility>
#include <vector>

#include <chernratio/chow.hpp>
#include <chernratio/constraints.hpp>
#include <chernratio/exact.hpp>
#include <chernratio/invariants.hpp>

namespace chernratio
{

struct RatioPoint {
    Rational x;
    Rational y;
};

// Limit segment x + y = 2, 1 <= x <= 2.
inline const RatioPoint segment_start{1, 1};
inline const RatioPoint segment_end{2, 0};
// Determinantal 3-folds accumulate on (1,1)-(17/12, 7/12); reference only.
inline const RatioPoint determinantal_start{1, 1};
inline const RatioPoint determinantal_end{Rational(17, 12), Rational(7, 12)};

// Squared Euclidean distance from (x, y) to the closed limit segment.
Rational segment_distance(const Rational &x, const Rational &y);

struct ClaimBands {
    bool claim1;  // y < -x + 2 + eps
    bool claim2;  // y > -alpha x + 1 + alpha - eps
    bool lower_x; // x > 1 - eps
    bool lower_y; // y > -eps

    bool all() const { return claim1 && claim2 && lower_x && lower_y; }
};

// Throws ParameterError unless eps > 0 and alpha > 1.
ClaimBands claim_bands(const ChernRatios &r, const Rational &epsilon, const Rational &alpha);

struct Prop6Params {
    Rational a;
    Rational b;
};

// (1 + 2/eps, -1/eps) for the upper band and (1 - (1+alpha)/eps, 1/eps) for the lower.
std::pair<Prop6Params, Prop6Params> prop6_to_claims(const Rational &epsilon, const Rational &alpha);

enum class FamilyKind { ci_fixed_s, ci_diagonal, explicit_list };

struct FamilySpec {
    FamilyKind kind = FamilyKind::ci_diagonal;
    long s_fixed = 2;
    long t_min = 2;
    long t_max = 2;
    // explicit_list only: pair i is reported with t = t_min + i.
    std::vector<std::pair<long, long>> pairs;
};

FamilySpec fixed_s_family(long s, long t_min, long t_max);
FamilySpec diagonal_family(long t_min, long t_max);
FamilySpec explicit_family(std::vector<std::pair<long, long>> pairs, long t_min = 0);

struct TracePoint {
    long t;
    CompleteIntersection ci;
    InvariantTuple tuple;
    // Empty when c1c2 == 0.
    std::optional<ChernRatios> ratios;
    std::optional<Rational> dist_sq;
};

struct FamilyTrace {
    FamilySpec spec;
    std::vector<TracePoint> points;
};

FamilyTrace family_trace(const FamilySpec &spec);

// Least T such that every point with t >= T and defined ratios is inside all
// claim bands; empty when the last defined point fails.
std::optional<long> claim_threshold(const FamilyTrace &trace, const Rational &epsilon, const Rational &alpha);

struct EnumerateOptions {
    SlackPolicy policy{};
    bool positivity = true;
    // Re-enable boss / prop2ii / prop2iii, which misfire at small degree.
    bool asymptotic_bounds = false;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 1;
    long d_limit = 60;
};

struct CloudEntry {
    InvariantTuple tuple;
    std::optional<ChernRatios> ratios;
};

struct RatioCloud {
    std::vector<CloudEntry> entries;
    long d_min = 0;
    long d_max = 0;
    Integer s;
    SlackPolicy policy;
    bool positivity = true;
    bool asymptotic_bounds = false;

    std::size_t count() const { return entries.size(); }
};

/// All integral profiles of degree d inside the constraint box for a given s.
///
/// h2k runs over even values with g >= 0 up to d^2/s + d(s-6) (from 2 with
/// positivity), hk2 between the s2(N(-1)).H bound and the GHIT bound, chi over
/// the Castelnuovo range, and k3 follows from chi. Each candidate is kept iff
/// it passes every check_all entry selected by the options. Output is sorted
/// by (h2k, hk2, chi) and does not depend on the thread count.
RatioCloud enumerate_feasible(long d, const Integer &s, const EnumerateOptions &options = {});

// Union of enumerate_feasible over d_min..d_max, ordered by d.
RatioCloud enumerate_region(long d_min, long d_max, const Integer &s, const EnumerateOptions &options = {});

} // namespace chernratio

#endif
