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

#include <chernratio/geography.hpp>

#include <algorithm>
#include <thread>

#include <chernratio/errors.hpp>

namespace chernratio
{

namespace
{

void require_claim_params(const Rational &epsilon, const Rational &alpha)
{
    if (epsilon <= 0) {
        throw ParameterError("epsilon must be positive, got " + epsilon.get_str());
    }
    if (alpha <= 1) {
        throw ParameterError("alpha must exceed 1, got " + alpha.get_str());
    }
}

bool keep(const InvariantTuple &t, const Integer &s, const EnumerateOptions &options)
{
    if (!ghit_check(t).satisfied || !genus_check(t, s).satisfied || !castelnuovo_check(t).satisfied) {
        return false;
    }
    const Prop1Result p1 = prop1_check(t);
    if (!p1.i.satisfied || !p1.ii.satisfied) {
        return false;
    }
    const Prop2Result p2 = prop2_check(t, s, options.policy);
    if (!p2.i.satisfied) {
        return false;
    }
    if (options.asymptotic_bounds) {
        return boss_check(t, s, options.policy).satisfied && p2.ii.satisfied && p2.iii.satisfied;
    }
    return true;
}

std::optional<ChernRatios> try_ratios(const InvariantTuple &t)
{
    const ChernNumbers c = chern_from_invariants(t);
    if (c.c1c2 == 0) {
        return std::nullopt;
    }
    return ratios(c);
}

// Candidates for one value of H^2K, in (hk2, chi) order.
std::vector<CloudEntry> scan_h2k(const Integer &d, const Integer &s, const Integer &h2k, const CastelnuovoBounds &cb,
                                 const EnumerateOptions &options)
{
    std::vector<CloudEntry> out;
    // s2(N(-1)).H >= 0: 9H^2K + HK^2 >= d(d-21).
    Integer hk2_lo = d * (d - 21) - 9 * h2k;
    if (options.positivity) {
        hk2_lo = std::max(hk2_lo, Integer(1));
    }
    // GHIT: HK^2 <= (H^2K)^2 / d.
    Integer hk2_hi;
    {
        const Integer sq = h2k * h2k;
        mpz_fdiv_q(hk2_hi.get_mpz_t(), sq.get_mpz_t(), d.get_mpz_t());
    }
    for (Integer hk2 = hk2_lo; hk2 <= hk2_hi; ++hk2) {
        const Integer base = (d - 15) * h2k - 6 * hk2;
        // K^3 = base - 24chi is bounded below by s3(N(-1)) >= 0 and, with positivity, by 1.
        Integer k3_lo = 8 * d * (d - 13) + 2 * (d - 33) * h2k - 14 * hk2;
        if (options.positivity) {
            k3_lo = std::max(k3_lo, Integer(1));
        }
        Integer chi_hi;
        {
            const Integer room = base - k3_lo;
            mpz_fdiv_q_ui(chi_hi.get_mpz_t(), room.get_mpz_t(), 24);
        }
        chi_hi = std::min(chi_hi, cb.chi_max);
        for (Integer chi = cb.chi_min; chi <= chi_hi; ++chi) {
            InvariantTuple t{d, h2k, hk2, base - 24 * chi, chi, std::nullopt};
            if (keep(t, s, options)) {
                auto r = try_ratios(t);
                out.push_back(CloudEntry{std::move(t), std::move(r)});
            }
        }
    }
    return out;
}

bool entry_less(const CloudEntry &a, const CloudEntry &b)
{
    const auto &x = a.tuple;
    const auto &y = b.tuple;
    if (x.d != y.d) {
        return x.d < y.d;
    }
    if (x.h2k != y.h2k) {
        return x.h2k < y.h2k;
    }
    if (x.hk2 != y.hk2) {
        return x.hk2 < y.hk2;
    }
    return x.chi < y.chi;
}

} // namespace

Rational segment_distance(const Rational &x, const Rational &y)
{
    // Foot of the perpendicular on x + y = 2, clamped to 1 <= x <= 2.
    Rational px = (x - y + 2) / 2;
    if (px < 1) {
        px = 1;
    } else if (px > 2) {
        px = 2;
    }
    const Rational dx = x - px;
    const Rational dy = y - (2 - px);
    return dx * dx + dy * dy;
}

ClaimBands claim_bands(const ChernRatios &r, const Rational &epsilon, const Rational &alpha)
{
    require_claim_params(epsilon, alpha);
    return ClaimBands{r.y < -r.x + 2 + epsilon, r.y > -alpha * r.x + 1 + alpha - epsilon, r.x > 1 - epsilon,
                      r.y > -epsilon};
}

std::pair<Prop6Params, Prop6Params> prop6_to_claims(const Rational &epsilon, const Rational &alpha)
{
    require_claim_params(epsilon, alpha);
    Prop6Params upper{1 + 2 / epsilon, -1 / epsilon};
    Prop6Params lower{1 - (1 + alpha) / epsilon, 1 / epsilon};
    for (const auto *p : {&upper, &lower}) {
        if (2 - p->a - 2 * p->b <= 0) {
            throw InapplicableError("2 - a - 2b <= 0 for a = " + p->a.get_str() + ", b = " + p->b.get_str());
        }
    }
    return {std::move(upper), std::move(lower)};
}

FamilySpec fixed_s_family(long s, long t_min, long t_max)
{
    return FamilySpec{FamilyKind::ci_fixed_s, s, t_min, t_max, {}};
}

FamilySpec diagonal_family(long t_min, long t_max)
{
    return FamilySpec{FamilyKind::ci_diagonal, 0, t_min, t_max, {}};
}

FamilySpec explicit_family(std::vector<std::pair<long, long>> pairs, long t_min)
{
    if (pairs.empty()) {
        throw ParameterError("explicit family needs at least one pair");
    }
    const long t_max = t_min + static_cast<long>(pairs.size()) - 1;
    return FamilySpec{FamilyKind::explicit_list, 0, t_min, t_max, std::move(pairs)};
}

FamilyTrace family_trace(const FamilySpec &spec)
{
    if (spec.t_min > spec.t_max) {
        throw ParameterError("empty t range [" + std::to_string(spec.t_min) + ", " + std::to_string(spec.t_max) + "]");
    }
    if (spec.kind == FamilyKind::ci_fixed_s && spec.s_fixed < 2) {
        throw ParameterError("ci_fixed_s needs s >= 2");
    }
    if (spec.kind == FamilyKind::explicit_list
        && static_cast<long>(spec.pairs.size()) != spec.t_max - spec.t_min + 1) {
        throw ParameterError("explicit family t range does not match its pair list");
    }

    FamilyTrace trace{spec, {}};
    trace.points.reserve(static_cast<std::size_t>(spec.t_max - spec.t_min + 1));
    for (long t = spec.t_min; t <= spec.t_max; ++t) {
        CompleteIntersection ci{};
        switch (spec.kind) {
        case FamilyKind::ci_fixed_s:
            ci = make_ci(spec.s_fixed, t);
            break;
        case FamilyKind::ci_diagonal:
            ci = make_ci(t, t);
            break;
        case FamilyKind::explicit_list: {
            const auto &p = spec.pairs[static_cast<std::size_t>(t - spec.t_min)];
            ci = make_ci(p.first, p.second);
            break;
        }
        }
        TracePoint pt{t, ci, ci_invariants(ci), std::nullopt, std::nullopt};
        pt.ratios = try_ratios(pt.tuple);
        if (pt.ratios) {
            pt.dist_sq = segment_distance(pt.ratios->x, pt.ratios->y);
        }
        trace.points.push_back(std::move(pt));
    }
    return trace;
}

std::optional<long> claim_threshold(const FamilyTrace &trace, const Rational &epsilon, const Rational &alpha)
{
    require_claim_params(epsilon, alpha);
    std::optional<long> last_failure;
    std::optional<long> last_defined;
    for (const auto &pt : trace.points) {
        if (!pt.ratios) {
            continue;
        }
        last_defined = pt.t;
        if (!claim_bands(*pt.ratios, epsilon, alpha).all()) {
            last_failure = pt.t;
        }
    }
    if (!last_defined || last_failure == last_defined) {
        return std::nullopt;
    }
    return last_failure ? *last_failure + 1 : trace.spec.t_min;
}

RatioCloud enumerate_feasible(long d, const Integer &s, const EnumerateOptions &options)
{
    if (d < 1) {
        throw ParameterError("degree must be positive, got " + std::to_string(d));
    }
    if (s < 1) {
        throw ParameterError("s must be positive, got " + s.get_str());
    }
    if (d > options.d_limit) {
        throw ParameterError("degree " + std::to_string(d) + " exceeds the enumeration limit "
                             + std::to_string(options.d_limit));
    }

    RatioCloud cloud;
    cloud.d_min = d;
    cloud.d_max = d;
    cloud.s = s;
    cloud.policy = options.policy;
    cloud.positivity = options.positivity;
    cloud.asymptotic_bounds = options.asymptotic_bounds;

    const Integer dz(d);
    const Integer h2k_hi = floor_of(make_rational(dz * dz, s) + dz * (s - 6));
    // g >= 0 gives H^2K >= -2d - 2; H^2K is even because 2g - 2 = H^2K + 2d.
    Integer h2k_lo = options.positivity ? Integer(2) : Integer(-2 * dz - 2);
    std::vector<Integer> h2k_values;
    for (Integer h = h2k_lo; h <= h2k_hi; ++h) {
        if (mpz_even_p(h.get_mpz_t())) {
            h2k_values.push_back(h);
        }
    }
    if (h2k_values.empty()) {
        return cloud;
    }

    const CastelnuovoBounds cb = castelnuovo_bounds(dz);
    unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(h2k_values.size()));

    std::vector<std::vector<CloudEntry>> parts(h2k_values.size());
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < h2k_values.size(); i += workers) {
            parts[i] = scan_h2k(dz, s, h2k_values[i], cb, options);
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    for (auto &p : parts) {
        std::move(p.begin(), p.end(), std::back_inserter(cloud.entries));
    }
    std::sort(cloud.entries.begin(), cloud.entries.end(), entry_less);
    return cloud;
}

RatioCloud enumerate_region(long d_min, long d_max, const Integer &s, const EnumerateOptions &options)
{
    if (d_min < 1 || d_min > d_max) {
        throw ParameterError("invalid degree range [" + std::to_string(d_min) + ", " + std::to_string(d_max) + "]");
    }
    RatioCloud region;
    region.d_min = d_min;
    region.d_max = d_max;
    region.s = s;
    region.policy = options.policy;
    region.positivity = options.positivity;
    region.asymptotic_bounds = options.asymptotic_bounds;
    for (long d = d_min; d <= d_max; ++d) {
        RatioCloud part = enumerate_feasible(d, s, options);
        std::move(part.entries.begin(), part.entries.end(), std::back_inserter(region.entries));
    }
    return region;
}

} // namespace chernratio
