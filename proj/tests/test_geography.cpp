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

#include <cmath>

#include <chernratio/errors.hpp>
#include <chernratio/geography.hpp>

using namespace chernratio;

namespace
{

double dbl(const Rational &q)
{
    return to_double(q);
}

EnumerateOptions positive_options(unsigned threads = 1)
{
    EnumerateOptions o;
    o.positivity = true;
    o.threads = threads;
    return o;
}

bool same_entries(const RatioCloud &a, const RatioCloud &b)
{
    if (a.count() != b.count()) {
        return false;
    }
    for (std::size_t i = 0; i < a.count(); ++i) {
        if (!(a.entries[i].tuple == b.entries[i].tuple) || a.entries[i].ratios != b.entries[i].ratios) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("segment_distance")
{
    CHECK(segment_distance(Rational(3, 2), Rational(1, 2)) == 0);
    CHECK(segment_distance(0, 0) == 2);
    // beyond the (2,0) end
    CHECK(segment_distance(3, 0) == 1);
    const Rational x = parse_rational("1.27780");
    const Rational y = parse_rational("0.70227");
    CHECK(segment_distance(x, y) == (x + y - 2) * (x + y - 2) / 2);
    CHECK(std::abs(dbl(segment_distance(x, y)) - 1.986e-4) < 5e-7);

    for (long n = 0; n <= 60; ++n) {
        const Rational on = 1 + make_rational(n, 60);
        REQUIRE(segment_distance(on, 2 - on) == 0);
        REQUIRE(segment_distance(on, 2 - on + make_rational(1, 1000)) > 0);
    }
    CHECK(segment_distance(Rational(1, 2), Rational(3, 2)) > 0);
}

TEST_CASE("claim_bands")
{
    const Rational eps(1, 20);
    const ClaimBands near{claim_bands(ChernRatios{parse_rational("1.27780"), parse_rational("0.70227")}, eps, 2)};
    CHECK(near.all());
    CHECK(claim_bands(ChernRatios{Rational(3, 2), Rational(1, 2)}, Rational(1, 1000), 2).all());

    const ClaimBands small = claim_bands(ChernRatios{Rational(1, 4), Rational(-3, 2)}, eps, 2);
    CHECK(small.claim1);
    CHECK_FALSE(small.claim2);
    CHECK_FALSE(small.lower_x);
    CHECK_FALSE(small.lower_y);

    const ChernRatios r{1, 1};
    CHECK_THROWS_AS(claim_bands(r, 0, 2), ParameterError);
    CHECK_THROWS_AS(claim_bands(r, eps, 1), ParameterError);
}

TEST_CASE("prop6_to_claims")
{
    const auto [c1, c2] = prop6_to_claims(1, 2);
    CHECK(c1.a == 3);
    CHECK(c1.b == -1);
    CHECK(2 - c1.a - 2 * c1.b == 1);
    CHECK(c2.a == -2);
    CHECK(c2.b == 1);
    CHECK(2 - c2.a - 2 * c2.b == 2);

    const auto [h1, h2] = prop6_to_claims(Rational(1, 2), 2);
    CHECK(h1.a == 5);
    CHECK(h1.b == -2);
    CHECK(f_of_ab(h1.a, h1.b) == -12);
    (void)h2;
    CHECK_THROWS_AS(prop6_to_claims(-1, 2), ParameterError);
}

TEST_CASE("family_trace pinned points")
{
    const FamilyTrace s2 = family_trace(fixed_s_family(2, 100, 100));
    REQUIRE(s2.points.size() == 1);
    const TracePoint &p = s2.points[0];
    CHECK(p.tuple == InvariantTuple{200, 19200, 1843200, 176947200, -7685600, Integer(2)});
    CHECK(p.ratios->x == make_rational(176947200, 184454400));
    CHECK(std::abs(dbl(p.ratios->x) - 0.95930) < 1e-5);
    CHECK(std::abs(dbl(p.ratios->y) - 1.04166) < 1e-5);
    CHECK(std::abs(dbl(p.ratios->x + p.ratios->y) - 2.00096) < 1e-5);

    const FamilyTrace diag = family_trace(diagonal_family(50, 50));
    const TracePoint &q = diag.points[0];
    CHECK(q.tuple.h2k == 235000);
    CHECK(q.tuple.hk2 == 22090000);
    CHECK(q.tuple.k3 == 2076460000);
    CHECK(std::abs(dbl(q.ratios->x) - 1.27780) < 1e-5);
    CHECK(std::abs(dbl(q.ratios->y) - 0.70227) < 1e-5);
    CHECK(std::abs(dbl(q.ratios->x + q.ratios->y) - 1.98007) < 1e-5);
    CHECK(*q.dist_sq == segment_distance(q.ratios->x, q.ratios->y));

    const FamilyTrace three = family_trace(diagonal_family(3, 3));
    CHECK_FALSE(three.points[0].ratios.has_value());
    CHECK_FALSE(three.points[0].dist_sq.has_value());
}

TEST_CASE("family_trace validation and explicit lists")
{
    CHECK_THROWS_AS(family_trace(diagonal_family(5, 4)), ParameterError);
    CHECK_THROWS_AS(family_trace(fixed_s_family(1, 2, 4)), ParameterError);
    CHECK_THROWS_AS(family_trace(diagonal_family(1, 4)), ParameterError);
    const FamilyTrace ex = family_trace(explicit_family({{4, 4}, {3, 2}, {3, 3}}, 1));
    REQUIRE(ex.points.size() == 3);
    CHECK(ex.points[0].t == 1);
    CHECK(ex.points[1].ci.a1 == 2);
    CHECK(ex.points[1].ratios->x == Rational(1, 4));
    CHECK_FALSE(ex.points[2].ratios.has_value());
}

TEST_CASE("CI(2,t): x + y approaches 2 monotonically")
{
    const FamilyTrace tr = family_trace(fixed_s_family(2, 20, 200));
    Rational prev = -1;
    for (const auto &p : tr.points) {
        const Rational gap = abs(p.ratios->x + p.ratios->y - 2);
        if (prev >= 0) {
            REQUIRE(gap < prev);
        }
        prev = gap;
        if (p.t == 100) {
            CHECK(gap < Rational(1, 1000));
        }
    }
}

TEST_CASE("CI(t,t): x increases towards 4/3")
{
    const FamilyTrace tr = family_trace(diagonal_family(20, 200));
    Rational prev = 0;
    for (const auto &p : tr.points) {
        REQUIRE(p.ratios->x > prev);
        REQUIRE(p.ratios->x < Rational(4, 3));
        prev = p.ratios->x;
        if (p.t == 50) {
            CHECK(abs(p.ratios->x + p.ratios->y - 2) < Rational(1, 50));
        }
    }
}

TEST_CASE("claim thresholds at eps = 1/10, alpha = 2")
{
    // Recorded: CI(2,t) keeps x <= 9/10 until t = 41; CI(t,t) enters all bands at t = 10.
    const Rational eps(1, 10);
    CHECK(claim_threshold(family_trace(fixed_s_family(2, 10, 300)), eps, 2) == 42);
    CHECK(claim_threshold(family_trace(diagonal_family(3, 300)), eps, 2) == 10);
    CHECK(claim_threshold(family_trace(diagonal_family(3, 3)), eps, 2) == std::nullopt);

    const FamilyTrace s2 = family_trace(fixed_s_family(2, 41, 41));
    CHECK_FALSE(claim_bands(*s2.points[0].ratios, eps, 2).lower_x);
}

TEST_CASE("determinantal reference endpoints lie on x + y = 2")
{
    CHECK(determinantal_start.x + determinantal_start.y == 2);
    CHECK(determinantal_end.x + determinantal_end.y == 2);
    CHECK(segment_distance(determinantal_end.x, determinantal_end.y) == 0);
}

TEST_CASE("enumerate_feasible pinned clouds")
{
    CHECK(enumerate_feasible(6, 2, positive_options()).count() == 0);
    CHECK(enumerate_feasible(9, 3, positive_options()).count() == 0);

    const RatioCloud c16 = enumerate_feasible(16, 4, positive_options());
    const InvariantTuple ci44{16, 32, 64, 128, -20, std::nullopt};
    bool found = false;
    for (const auto &e : c16.entries) {
        found = found || e.tuple == ci44;
    }
    CHECK(found);
}

TEST_CASE("enumerate_feasible counts match the brute-force snapshot")
{
    // Frozen from tests/oracles/enumerate_bruteforce.py.
    struct Case {
        long d;
        long s;
        bool positivity;
        std::size_t count;
        InvariantTuple first;
    };
    const Case cases[] = {
        {16, 4, true, 37267, {16, 4, 1, 2494, -104, std::nullopt}},
        {12, 3, true, 492, {12, 4, 1, 438, -19, std::nullopt}},
        {20, 4, true, 618365, {20, 6, 1, 8064, -335, std::nullopt}},
        {16, 4, false, 344929, {16, -8, -8, 2536, -104, std::nullopt}},
        {10, 3, false, 1369, {10, -10, 7, 128, -5, std::nullopt}},
    };
    for (const auto &c : cases) {
        EnumerateOptions o;
        o.positivity = c.positivity;
        o.threads = 0;
        const RatioCloud cloud = enumerate_feasible(c.d, c.s, o);
        CHECK(cloud.count() == c.count);
        REQUIRE(!cloud.entries.empty());
        CHECK(cloud.entries.front().tuple == c.first);
    }
}

TEST_CASE("every enumerated tuple passes check_all and respects the filters")
{
    EnumerateOptions o = positive_options();
    for (long d : {12L, 16L}) {
        for (long s : {3L, 4L}) {
            const RatioCloud cloud = enumerate_feasible(d, s, o);
            for (const auto &e : cloud.entries) {
                const auto report = check_all(e.tuple, s, cloud.policy, CheckOptions{cloud.asymptotic_bounds});
                REQUIRE(report.all_satisfied());
                REQUIRE(e.tuple.h2k >= 2);
                REQUIRE(e.tuple.hk2 >= 1);
                REQUIRE(e.tuple.k3 >= 1);
                REQUIRE(mpz_even_p(e.tuple.h2k.get_mpz_t()));
                REQUIRE_NOTHROW(validate(e.tuple));
            }
        }
    }
}

TEST_CASE("asymptotic bounds shrink the cloud and are honoured")
{
    // At this size the default slack terms dominate, so only strict mode cuts anything.
    EnumerateOptions o = positive_options();
    o.asymptotic_bounds = true;
    CHECK(enumerate_feasible(16, 4, o).count() == enumerate_feasible(16, 4, positive_options()).count());
    o.policy = make_policy(SlackMode::strict);
    EnumerateOptions plain = positive_options();
    plain.policy = o.policy;
    const RatioCloud with = enumerate_feasible(16, 4, o);
    const RatioCloud without = enumerate_feasible(16, 4, plain);
    CHECK(with.count() < without.count());
    for (const auto &e : with.entries) {
        REQUIRE(check_all(e.tuple, 4, o.policy).all_satisfied());
    }
}

TEST_CASE("serial and parallel enumeration agree exactly")
{
    const RatioCloud serial = enumerate_feasible(16, 4, positive_options(1));
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
        CHECK(same_entries(serial, enumerate_feasible(16, 4, positive_options(threads))));
    }
}

TEST_CASE("enumeration limits and region assembly")
{
    CHECK_THROWS_AS(enumerate_feasible(61, 4, positive_options()), ParameterError);
    EnumerateOptions o = positive_options();
    o.d_limit = 5;
    CHECK_THROWS_AS(enumerate_feasible(6, 2, o), ParameterError);
    o.d_limit = 6;
    CHECK(enumerate_feasible(6, 2, o).count() == 0);
    CHECK_THROWS_AS(enumerate_feasible(0, 4, positive_options()), ParameterError);

    const RatioCloud region = enumerate_region(10, 12, 3, positive_options());
    std::size_t total = 0;
    for (long d = 10; d <= 12; ++d) {
        total += enumerate_feasible(d, 3, positive_options()).count();
    }
    CHECK(region.count() == total);
    CHECK(region.d_min == 10);
    CHECK(region.d_max == 12);
    CHECK_THROWS_AS(enumerate_region(5, 4, 3, positive_options()), ParameterError);
}
