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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <chernratio/errors.hpp>
#include <chernratio/invariants.hpp>

using namespace chernratio;

namespace
{

const InvariantTuple ci23{6, -6, 6, -6, 1, Integer(2)};
const InvariantTuple ci33{9, 0, 0, 0, 0, Integer(3)};
const InvariantTuple ci44{16, 32, 64, 128, -20, Integer(4)};

} // namespace

TEST_CASE("chern_from_invariants on complete-intersection profiles")
{
    CHECK(chern_from_invariants(ci23) == ChernNumbers{6, 24, -36});
    CHECK(chern_from_invariants(ci33) == ChernNumbers{0, 0, -144});
    CHECK(chern_from_invariants(ci44) == ChernNumbers{-128, -480, -1088});
}

TEST_CASE("chern_from_invariants rejects a k3/chi mismatch")
{
    InvariantTuple bad = ci44;
    bad.chi = -19;
    CHECK_THROWS_AS(chern_from_invariants(bad), ConsistencyError);
    try {
        chern_from_invariants(bad);
    } catch (const ConsistencyError &e) {
        const std::string msg = e.what();
        CHECK(msg.find("128") != std::string::npos);
        CHECK(msg.find("-19") != std::string::npos);
    }
}

TEST_CASE("deltas")
{
    CHECK(deltas(ci44) == DeltaPair{-352, -960});
    CHECK(deltas(ci23) == DeltaPair{18, -42});
    CHECK(deltas(InvariantTuple{15, 0, 0, 0, 0, std::nullopt}) == DeltaPair{0, 300});
    // c3 = delta2 - K^3 on CI(4,4)
    CHECK(deltas(ci44).delta2 - ci44.k3 == -1088);
}

TEST_CASE("ratios")
{
    CHECK(ratios(ChernNumbers{-128, -480, -1088}) == ChernRatios{Rational(4, 15), Rational(34, 15)});
    CHECK(ratios(ChernNumbers{6, 24, -36}) == ChernRatios{Rational(1, 4), Rational(-3, 2)});
    CHECK_THROWS_AS(ratios(ChernNumbers{0, 0, -144}), RatiosUndefinedError);
    CHECK_THROWS_AS(ratios_from_deltas(ci33), RatiosUndefinedError);
}

TEST_CASE("chi_from_invariants")
{
    CHECK(chi_from_invariants(16, 32, 64, 128) == -20);
    CHECK(chi_from_invariants(6, -6, 6, -6) == 1);
    CHECK(chi_from_invariants(9, 0, 0, 0) == 0);
    CHECK_THROWS_AS(chi_from_invariants(16, 32, 64, 127), InvalidTupleError);
}

TEST_CASE("sectional_genus")
{
    CHECK(sectional_genus(ci44).g == 33);
    CHECK(sectional_genus(ci23).g == 4);
    CHECK(sectional_genus(ci33).g == 10);
    CHECK_THROWS_AS(sectional_genus(InvariantTuple{5, 1, 0, 0, 0, std::nullopt}), InvalidTupleError);
    CHECK_THROWS_AS(sectional_genus(InvariantTuple{5, -14, 0, 0, 0, std::nullopt}), InvalidTupleError);
    CHECK(sectional_genus(InvariantTuple{5, -12, 0, 0, 0, std::nullopt}).g == 0);
}

TEST_CASE("validate")
{
    CHECK_NOTHROW(validate(ci44));
    InvariantTuple t = ci44;
    t.d = 0;
    CHECK_THROWS_AS(validate(t), InvalidTupleError);
    t = ci44;
    t.s = Integer(0);
    CHECK_THROWS_AS(validate(t), InvalidTupleError);
    t = ci44;
    t.k3 += 1;
    CHECK_THROWS_AS(validate(t), ConsistencyError);
}

TEST_CASE("identities over random consistent tuples")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> deg(1, 500);
    std::uniform_int_distribution<long> small(-100000, 100000);
    for (int i = 0; i < 3000; ++i) {
        const long d = deg(rng);
        const long h2k = 2 * (small(rng) / 2);
        const InvariantTuple t = tuple_from_chi(d, h2k, small(rng), small(rng));
        const ChernNumbers c = chern_from_invariants(t);
        const DeltaPair dp = deltas(t);
        REQUIRE(c.c1c2 == 24 * t.chi);
        REQUIRE(c.c1cubed == -t.k3);
        REQUIRE(c.c3 == dp.delta2 - t.k3);
        if (c.c1c2 != 0) {
            REQUIRE(ratios(c) == ratios_from_deltas(t));
        }
    }
}
