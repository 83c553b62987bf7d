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

#include <chernratio/chernratio.h>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <chernratio/chow.hpp>
#include <chernratio/constraints.hpp>
#include <chernratio/errors.hpp>
#include <chernratio/geography.hpp>
#include <chernratio/io.hpp>

using namespace chernratio;

struct cr_report {
    ConstraintReport report;
    Integer s;
    SlackPolicy policy;
    std::vector<std::string> margins;
};

struct cr_cloud {
    RatioCloud cloud;
};

struct cr_trace {
    FamilyTrace trace;
};

namespace
{

thread_local std::string last_error;

cr_status fail(cr_status status, const char *what)
{
    last_error = what;
    return status;
}

template <typename F>
cr_status guarded(F &&f) noexcept
{
    try {
        last_error.clear();
        f();
        return CR_OK;
    } catch (const ConsistencyError &e) {
        return fail(CR_ERR_CONSISTENCY, e.what());
    } catch (const InvalidTupleError &e) {
        return fail(CR_ERR_INVALID_TUPLE, e.what());
    } catch (const RatiosUndefinedError &e) {
        return fail(CR_ERR_RATIOS_UNDEFINED, e.what());
    } catch (const NonUnitError &e) {
        return fail(CR_ERR_NON_UNIT, e.what());
    } catch (const InapplicableError &e) {
        return fail(CR_ERR_INAPPLICABLE, e.what());
    } catch (const ParameterError &e) {
        return fail(CR_ERR_PARAMETER, e.what());
    } catch (const OverflowError &e) {
        return fail(CR_ERR_OVERFLOW, e.what());
    } catch (const IoError &e) {
        return fail(CR_ERR_IO, e.what());
    } catch (const std::bad_alloc &) {
        return fail(CR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(CR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CR_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *name)
{
    if (p == nullptr) {
        throw ParameterError(std::string(name) + " must not be NULL");
    }
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Integer big(std::int64_t v)
{
    return Integer(std::to_string(v));
}

InvariantTuple from_c(const cr_tuple &t)
{
    InvariantTuple r{big(t.d), big(t.h2k), big(t.hk2), big(t.k3), big(t.chi), std::nullopt};
    if (t.has_s) {
        r.s = big(t.s);
    }
    return r;
}

cr_tuple to_c(const InvariantTuple &t)
{
    cr_tuple r{};
    r.d = to_int64(t.d);
    r.h2k = to_int64(t.h2k);
    r.hk2 = to_int64(t.hk2);
    r.k3 = to_int64(t.k3);
    r.chi = to_int64(t.chi);
    r.has_s = t.s ? 1 : 0;
    r.s = t.s ? to_int64(*t.s) : 0;
    return r;
}

SlackPolicy from_c(const cr_policy *p)
{
    if (p == nullptr) {
        return SlackPolicy{};
    }
    SlackMode mode = SlackMode::slack;
    switch (p->mode) {
    case CR_POLICY_STRICT:
        mode = SlackMode::strict;
        break;
    case CR_POLICY_SLACK:
        mode = SlackMode::slack;
        break;
    case CR_POLICY_ASYMPTOTIC:
        mode = SlackMode::asymptotic;
        break;
    default:
        throw ParameterError("unknown policy mode");
    }
    return make_policy(mode, p->coefficient ? parse_rational(p->coefficient) : Rational(1),
                       p->exponent ? parse_rational(p->exponent) : Rational(7, 2));
}

long to_long(std::int64_t v, const char *name)
{
    if (v < static_cast<std::int64_t>(std::numeric_limits<long>::min())
        || v > static_cast<std::int64_t>(std::numeric_limits<long>::max())) {
        throw OverflowError(std::string(name) + " out of range");
    }
    return static_cast<long>(v);
}

} // namespace

extern "C" {

const char *cr_version(void)
{
    return "1.0.0";
}

const char *cr_last_error(void)
{
    return last_error.c_str();
}

const char *cr_status_name(cr_status status)
{
    switch (status) {
    case CR_OK:
        return "ok";
    case CR_ERR_CONSISTENCY:
        return "consistency error";
    case CR_ERR_INVALID_TUPLE:
        return "invalid tuple";
    case CR_ERR_RATIOS_UNDEFINED:
        return "ratios undefined";
    case CR_ERR_NON_UNIT:
        return "non-unit";
    case CR_ERR_INAPPLICABLE:
        return "inapplicable";
    case CR_ERR_PARAMETER:
        return "invalid parameter";
    case CR_ERR_OVERFLOW:
        return "overflow";
    case CR_ERR_IO:
        return "i/o error";
    case CR_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void cr_string_free(char *s)
{
    std::free(s);
}

void cr_policy_default(cr_policy *out)
{
    if (out != nullptr) {
        *out = cr_policy{CR_POLICY_SLACK, nullptr, nullptr};
    }
}

void cr_enumerate_options_default(cr_enumerate_options *out)
{
    if (out != nullptr) {
        *out = cr_enumerate_options{};
        cr_policy_default(&out->policy);
        out->positivity = 1;
        out->asymptotic_bounds = 0;
        out->threads = 1;
        out->d_limit = 60;
    }
}

cr_status cr_tuple_validate(const cr_tuple *t)
{
    return guarded([&] {
        require(t, "tuple");
        validate(from_c(*t));
    });
}

cr_status cr_tuple_parse(const char *text, cr_tuple *out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = to_c(io::parse_tuple(text));
    });
}

cr_status cr_tuple_to_json(const cr_tuple *t, char **out)
{
    return guarded([&] {
        require(t, "tuple");
        require(out, "out");
        *out = dup_string(io::tuple_to_json(from_c(*t)));
    });
}

cr_status cr_chern_numbers_of(const cr_tuple *t, cr_chern_numbers *out)
{
    return guarded([&] {
        require(t, "tuple");
        require(out, "out");
        const ChernNumbers c = chern_from_invariants(from_c(*t));
        *out = cr_chern_numbers{to_int64(c.c1cubed), to_int64(c.c1c2), to_int64(c.c3)};
    });
}

cr_status cr_ratios_of(const cr_tuple *t, char **x, char **y)
{
    return guarded([&] {
        require(t, "tuple");
        require(x, "x");
        require(y, "y");
        const ChernRatios r = ratios(chern_from_invariants(from_c(*t)));
        std::string xs = fraction_string(r.x);
        std::string ys = fraction_string(r.y);
        char *xo = dup_string(xs);
        try {
            *y = dup_string(ys);
        } catch (...) {
            std::free(xo);
            throw;
        }
        *x = xo;
    });
}

cr_status cr_sectional_genus(const cr_tuple *t, int64_t *g)
{
    return guarded([&] {
        require(t, "tuple");
        require(g, "g");
        *g = to_int64(sectional_genus(from_c(*t)).g);
    });
}

cr_status cr_ci_invariants(int64_t a1, int64_t a2, cr_tuple *out)
{
    return guarded([&] {
        require(out, "out");
        *out = to_c(ci_invariants(make_ci(to_long(a1, "a1"), to_long(a2, "a2"))));
    });
}

cr_status cr_verify_dpf(int64_t a1, int64_t a2, int *all_match)
{
    return guarded([&] {
        require(all_match, "all_match");
        *all_match = verify_dpf(make_ci(to_long(a1, "a1"), to_long(a2, "a2"))).all_match() ? 1 : 0;
    });
}

cr_status cr_check_all(const cr_tuple *t, int64_t s, const cr_policy *policy, int asymptotic_bounds,
                       cr_report **out)
{
    return guarded([&] {
        require(t, "tuple");
        require(out, "out");
        const InvariantTuple tuple = from_c(*t);
        validate(tuple);
        auto r = std::make_unique<cr_report>();
        r->s = big(s);
        r->policy = from_c(policy);
        r->report = check_all(tuple, r->s, r->policy, CheckOptions{asymptotic_bounds != 0});
        for (const auto &e : r->report.entries) {
            r->margins.push_back(fraction_string(e.margin));
        }
        *out = r.release();
    });
}

size_t cr_report_size(const cr_report *r)
{
    return r ? r->report.entries.size() : 0;
}

int cr_report_all_satisfied(const cr_report *r)
{
    return r && r->report.all_satisfied() ? 1 : 0;
}

cr_status cr_report_entry(const cr_report *r, size_t i, const char **id, int *satisfied, const char **margin,
                          const char **note)
{
    return guarded([&] {
        require(r, "report");
        if (i >= r->report.entries.size()) {
            throw ParameterError("report index out of range");
        }
        const auto &e = r->report.entries[i];
        if (id) {
            *id = e.id.c_str();
        }
        if (satisfied) {
            *satisfied = e.satisfied ? 1 : 0;
        }
        if (margin) {
            *margin = r->margins[i].c_str();
        }
        if (note) {
            *note = e.note.c_str();
        }
    });
}

cr_status cr_report_format(const cr_report *r, cr_format format, char **out)
{
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        switch (format) {
        case CR_FORMAT_JSON:
            *out = dup_string(io::report_to_json(r->report, r->s, r->policy));
            return;
        case CR_FORMAT_CSV:
            *out = dup_string(io::report_to_csv(r->report));
            return;
        case CR_FORMAT_TEXT:
            *out = dup_string(io::report_to_text(r->report));
            return;
        default:
            throw ParameterError("reports support JSON, CSV and TEXT");
        }
    });
}

void cr_report_free(cr_report *r)
{
    delete r;
}

cr_status cr_prop4_min_degree(int64_t s, int64_t *out)
{
    return guarded([&] {
        require(out, "out");
        *out = to_int64(prop4_min_degree(big(s)));
    });
}

cr_status cr_enumerate(int64_t d_min, int64_t d_max, int64_t s, const cr_enumerate_options *options,
                       cr_cloud **out)
{
    return guarded([&] {
        require(out, "out");
        cr_enumerate_options o;
        cr_enumerate_options_default(&o);
        if (options) {
            o = *options;
        }
        EnumerateOptions eo;
        eo.policy = from_c(&o.policy);
        eo.positivity = o.positivity != 0;
        eo.asymptotic_bounds = o.asymptotic_bounds != 0;
        eo.threads = o.threads;
        eo.d_limit = o.d_limit > 0 ? to_long(o.d_limit, "d_limit") : 60;
        auto c = std::make_unique<cr_cloud>();
        if (d_min == d_max) {
            c->cloud = enumerate_feasible(to_long(d_min, "d"), big(s), eo);
        } else {
            c->cloud = enumerate_region(to_long(d_min, "d_min"), to_long(d_max, "d_max"), big(s), eo);
        }
        *out = c.release();
    });
}

size_t cr_cloud_size(const cr_cloud *c)
{
    return c ? c->cloud.count() : 0;
}

cr_status cr_cloud_entry(const cr_cloud *c, size_t i, cr_tuple *out)
{
    return guarded([&] {
        require(c, "cloud");
        require(out, "out");
        if (i >= c->cloud.entries.size()) {
            throw ParameterError("cloud index out of range");
        }
        *out = to_c(c->cloud.entries[i].tuple);
    });
}

cr_status cr_cloud_format(const cr_cloud *c, cr_format format, char **out)
{
    return guarded([&] {
        require(c, "cloud");
        require(out, "out");
        switch (format) {
        case CR_FORMAT_JSON:
            *out = dup_string(io::cloud_to_json(c->cloud));
            return;
        case CR_FORMAT_CSV:
            *out = dup_string(io::cloud_to_csv(c->cloud));
            return;
        case CR_FORMAT_SVG:
            *out = dup_string(io::cloud_to_svg(c->cloud));
            return;
        default:
            throw ParameterError("clouds support JSON, CSV and SVG");
        }
    });
}

void cr_cloud_free(cr_cloud *c)
{
    delete c;
}

cr_status cr_trace_create(cr_family_kind kind, int64_t s_fixed, int64_t t_min, int64_t t_max, cr_trace **out)
{
    return guarded([&] {
        require(out, "out");
        FamilySpec spec;
        switch (kind) {
        case CR_FAMILY_CI_FIXED_S:
            spec = fixed_s_family(to_long(s_fixed, "s_fixed"), to_long(t_min, "t_min"), to_long(t_max, "t_max"));
            break;
        case CR_FAMILY_CI_DIAGONAL:
            spec = diagonal_family(to_long(t_min, "t_min"), to_long(t_max, "t_max"));
            break;
        default:
            throw ParameterError("unknown family kind");
        }
        auto tr = std::make_unique<cr_trace>();
        tr->trace = family_trace(spec);
        *out = tr.release();
    });
}

size_t cr_trace_size(const cr_trace *tr)
{
    return tr ? tr->trace.points.size() : 0;
}

cr_status cr_trace_point(const cr_trace *tr, size_t i, int64_t *t, cr_tuple *tuple, int *defined)
{
    return guarded([&] {
        require(tr, "trace");
        if (i >= tr->trace.points.size()) {
            throw ParameterError("trace index out of range");
        }
        const auto &p = tr->trace.points[i];
        if (t) {
            *t = p.t;
        }
        if (tuple) {
            *tuple = to_c(p.tuple);
        }
        if (defined) {
            *defined = p.ratios ? 1 : 0;
        }
    });
}

cr_status cr_trace_format(const cr_trace *tr, cr_format format, char **out)
{
    return guarded([&] {
        require(tr, "trace");
        require(out, "out");
        switch (format) {
        case CR_FORMAT_JSON:
            *out = dup_string(io::trace_to_json(tr->trace));
            return;
        case CR_FORMAT_CSV:
            *out = dup_string(io::trace_to_csv(tr->trace));
            return;
        case CR_FORMAT_SVG:
            *out = dup_string(io::trace_to_svg(tr->trace));
            return;
        default:
            throw ParameterError("traces support JSON, CSV and SVG");
        }
    });
}

void cr_trace_free(cr_trace *tr)
{
    delete tr;
}

cr_status cr_write_file(const char *path, const char *contents)
{
    return guarded([&] {
        require(path, "path");
        require(contents, "contents");
        io::write_file(path, contents);
    });
}

} // extern "C"
