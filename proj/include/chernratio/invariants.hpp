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

#ifndef CHERNRATIO_INVARIANTS_HPP
#define CHERNRATIO_INVARIANTS_HPP

#include <optional>
#include <string>

#include <chernratio/exact.hpp>

namespace chernratio
{

/// Numerical profile of a smooth 3-fold X in P^5.
///
/// d = H^3, h2k = H^2K, hk2 = HK^2, k3 = K^3, chi = chi(O_X), and s the least
/// degree of a hypersurface containing X when known. chi is stored alongside
/// k3 and the two are cross-checked (see check_consistency).
struct InvariantTuple {
    Integer d;
    Integer h2k;
    Integer hk2;
    Integer k3;
    Integer chi;
    std::optional<Integer> s;

    friend bool operator==(const InvariantTuple &, const InvariantTuple &) = default;
};

// Builds a tuple with k3 recomputed from chi.
InvariantTuple tuple_from_chi(const Integer &d, const Integer &h2k, const Integer &hk2, const Integer &chi,
                              std::optional<Integer> s = std::nullopt);

// Throws ConsistencyError when k3 != (d-15)h2k - 6hk2 - 24chi.
void check_consistency(const InvariantTuple &t);

// Full well-formedness: d >= 1, s >= 1 when present, h2k + 2d even and >= -2,
// plus check_consistency.
void validate(const InvariantTuple &t);

std::string describe(const InvariantTuple &t);

struct ChernNumbers {
    Integer c1cubed;
    Integer c1c2;
    Integer c3;

    friend bool operator==(const ChernNumbers &, const ChernNumbers &) = default;
};

/// The point (c1^3 / c1c2, c3 / c1c2) of the ratio plane.
struct ChernRatios {
    Rational x;
    Rational y;

    friend bool operator==(const ChernRatios &, const ChernRatios &) = default;
};

struct DeltaPair {
    Integer delta1;
    Integer delta2;

    friend bool operator==(const DeltaPair &, const DeltaPair &) = default;
};

struct SectionalGenus {
    Integer g;
};

// Double point formula with c1 = -K:
//   c1^3 = -K^3, c1c2 = delta1 - K^3, c3 = delta2 - K^3.
ChernNumbers chern_from_invariants(const InvariantTuple &t);

// delta1 = (d-15)H^2K - 6HK^2
// delta2 = (6d-70)d + (2d-51)H^2K - 12HK^2
DeltaPair deltas(const InvariantTuple &t);

// Throws RatiosUndefinedError when c1c2 == 0.
ChernRatios ratios(const ChernNumbers &c);

// Same point through K^3/(K^3 - delta1), (K^3 - delta2)/(K^3 - delta1).
ChernRatios ratios_from_deltas(const InvariantTuple &t);

Integer chi_from_invariants(const Integer &d, const Integer &h2k, const Integer &hk2, const Integer &k3);

// 2g - 2 = H^2K + 2d (curve section, double adjunction).
SectionalGenus sectional_genus(const InvariantTuple &t);

} // namespace chernratio

#endif
