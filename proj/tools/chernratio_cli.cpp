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

// chernratio command-line front end. Talks to the library only through the C API.

#include <chernratio/chernratio.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_violated = 1;
constexpr int exit_invalid = 2;

struct Failure {
    std::string message;
};

void check_status(cr_status st, const std::string &context)
{
    if (st != CR_OK) {
        throw Failure{context + ": " + cr_status_name(st) + ": " + cr_last_error()};
    }
}

// Owning wrapper for strings returned by the library.
class CrString
{
public:
    CrString() = default;
    CrString(const CrString &) = delete;
    CrString &operator=(const CrString &) = delete;
    ~CrString() { cr_string_free(m_p); }

    char **out() { return &m_p; }
    std::string str() const { return m_p ? m_p : ""; }

private:
    char *m_p = nullptr;
};

template <typename T, void (*Free)(T *)>
struct Handle {
    T *p = nullptr;
    Handle() = default;
    Handle(const Handle &) = delete;
    Handle &operator=(const Handle &) = delete;
    ~Handle() { Free(p); }
};

struct PolicyFlags {
    std::string mode = "slack";
    std::string coefficient = "1";
    std::string exponent = "7/2";

    cr_policy to_c() const
    {
        cr_policy p;
        cr_policy_default(&p);
        if (mode == "strict") {
            p.mode = CR_POLICY_STRICT;
        } else if (mode == "asymptotic") {
            p.mode = CR_POLICY_ASYMPTOTIC;
        } else {
            p.mode = CR_POLICY_SLACK;
        }
        p.coefficient = coefficient.c_str();
        p.exponent = exponent.c_str();
        return p;
    }
};

void add_policy_flags(CLI::App *cmd, PolicyFlags &flags)
{
    cmd->add_option("--policy", flags.mode, "Treatment of lower-order terms")
        ->check(CLI::IsMember({"strict", "slack", "asymptotic"}));
    cmd->add_option("--slack-coeff", flags.coefficient, "Slack coefficient (exact, e.g. 1 or 1/2)");
    cmd->add_option("--slack-exp", flags.exponent, "Slack exponent for the BOSS bound (exact, e.g. 7/2)");
}

struct Outputs {
    std::string csv;
    std::string svg;
    bool json = false;
};

void add_output_flags(CLI::App *cmd, Outputs &out)
{
    cmd->add_option("--csv", out.csv, "Write a CSV table to PATH");
    cmd->add_option("--svg", out.svg, "Write an SVG scatter to PATH");
    cmd->add_flag("--json", out.json, "Print JSON on standard output");
}

void write_output(const std::string &path, const std::string &contents)
{
    check_status(cr_write_file(path.c_str(), contents.c_str()), "writing " + path);
}

std::string read_text(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{"cannot read '" + path + "'"};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_ci_invariants(long long a1, long long a2)
{
    cr_tuple t;
    check_status(cr_ci_invariants(a1, a2, &t), "ci-invariants");
    CrString json;
    check_status(cr_tuple_to_json(&t, json.out()), "ci-invariants");
    std::cout << json.str();
    return exit_ok;
}

struct CheckArgs {
    std::string tuple_file;
    std::optional<std::string> d, h2k, hk2, k3, chi, s_field;
    std::optional<long long> s;
    PolicyFlags policy;
    bool no_asymptotic = false;
    bool json = false;
    bool csv = false;
};

int run_check(const CheckArgs &a)
{
    std::string text;
    if (!a.tuple_file.empty()) {
        text = a.tuple_file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                   : read_text(a.tuple_file);
    } else {
        if (!a.d || !a.h2k || !a.hk2 || (!a.k3 && !a.chi)) {
            throw Failure{"check needs --tuple FILE or --d, --h2k, --hk2 and one of --k3 / --chi"};
        }
        std::ostringstream os;
        os << "d=" << *a.d << "\nh2k=" << *a.h2k << "\nhk2=" << *a.hk2 << "\n";
        if (a.k3) {
            os << "k3=" << *a.k3 << "\n";
        }
        if (a.chi) {
            os << "chi=" << *a.chi << "\n";
        }
        text = os.str();
    }
    cr_tuple t;
    check_status(cr_tuple_parse(text.c_str(), &t), "check");

    long long s = 0;
    if (a.s) {
        s = *a.s;
    } else if (t.has_s) {
        s = t.s;
    } else {
        throw Failure{"check needs --s (or an s field in the tuple)"};
    }

    const cr_policy policy = a.policy.to_c();
    Handle<cr_report, cr_report_free> report;
    check_status(cr_check_all(&t, s, &policy, a.no_asymptotic ? 0 : 1, &report.p), "check");
    CrString out;
    const cr_format fmt = a.json ? CR_FORMAT_JSON : (a.csv ? CR_FORMAT_CSV : CR_FORMAT_TEXT);
    check_status(cr_report_format(report.p, fmt, out.out()), "check");
    std::cout << out.str();
    return cr_report_all_satisfied(report.p) ? exit_ok : exit_violated;
}

struct EnumerateArgs {
    long long d_min = 0;
    long long d_max = 0;
    long long s = 0;
    PolicyFlags policy;
    bool positivity = false;
    bool boss = false;
    long long d_max_override = 0;
    unsigned threads = 1;
    Outputs outputs;
};

int run_enumerate(const EnumerateArgs &a, const char *label)
{
    cr_enumerate_options o;
    cr_enumerate_options_default(&o);
    o.policy = a.policy.to_c();
    o.positivity = a.positivity ? 1 : 0;
    o.asymptotic_bounds = a.boss ? 1 : 0;
    o.threads = a.threads;
    o.d_limit = a.d_max_override > 0 ? a.d_max_override : 60;

    Handle<cr_cloud, cr_cloud_free> cloud;
    check_status(cr_enumerate(a.d_min, a.d_max, a.s, &o, &cloud.p), label);
    if (!a.outputs.csv.empty()) {
        CrString csv;
        check_status(cr_cloud_format(cloud.p, CR_FORMAT_CSV, csv.out()), label);
        write_output(a.outputs.csv, csv.str());
    }
    if (!a.outputs.svg.empty()) {
        CrString svg;
        check_status(cr_cloud_format(cloud.p, CR_FORMAT_SVG, svg.out()), label);
        write_output(a.outputs.svg, svg.str());
    }
    if (a.outputs.json) {
        CrString json;
        check_status(cr_cloud_format(cloud.p, CR_FORMAT_JSON, json.out()), label);
        std::cout << json.str();
    } else {
        std::cout << "d=" << a.d_min;
        if (a.d_max != a.d_min) {
            std::cout << ".." << a.d_max;
        }
        std::cout << " s=" << a.s << " count=" << cr_cloud_size(cloud.p) << "\n";
    }
    return exit_ok;
}

struct TraceArgs {
    std::string family;
    long long t_min = 0;
    long long t_max = 0;
    long long s_fixed = 2;
    Outputs outputs;
};

int run_trace(const TraceArgs &a)
{
    const cr_family_kind kind = a.family == "ci-diagonal" ? CR_FAMILY_CI_DIAGONAL : CR_FAMILY_CI_FIXED_S;
    Handle<cr_trace, cr_trace_free> trace;
    check_status(cr_trace_create(kind, a.s_fixed, a.t_min, a.t_max, &trace.p), "trace");
    if (!a.outputs.csv.empty()) {
        CrString csv;
        check_status(cr_trace_format(trace.p, CR_FORMAT_CSV, csv.out()), "trace");
        write_output(a.outputs.csv, csv.str());
    }
    if (!a.outputs.svg.empty()) {
        CrString svg;
        check_status(cr_trace_format(trace.p, CR_FORMAT_SVG, svg.out()), "trace");
        write_output(a.outputs.svg, svg.str());
    }
    if (a.outputs.json) {
        CrString json;
        check_status(cr_trace_format(trace.p, CR_FORMAT_JSON, json.out()), "trace");
        std::cout << json.str();
    } else if (a.outputs.csv.empty() && a.outputs.svg.empty()) {
        CrString csv;
        check_status(cr_trace_format(trace.p, CR_FORMAT_CSV, csv.out()), "trace");
        std::cout << csv.str();
    }
    return exit_ok;
}

int run_bound(long long s)
{
    int64_t d = 0;
    check_status(cr_prop4_min_degree(s, &d), "bound");
    std::printf("s=%lld min_degree=%lld\n", s, static_cast<long long>(d));
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Chern numbers and Chern ratios of 3-folds in P^5"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cr_version()));

    long long ci_a1 = 0;
    long long ci_a2 = 0;
    auto *ci = app.add_subcommand("ci-invariants", "Invariant tuple of the complete intersection CI(a1, a2)");
    ci->add_option("a1", ci_a1)->required();
    ci->add_option("a2", ci_a2)->required();

    CheckArgs check_args;
    auto *check = app.add_subcommand("check", "Evaluate every constraint on a tuple; exit 1 if any is violated");
    check->add_option("--tuple", check_args.tuple_file, "Tuple file (JSON object or key=value lines; - for stdin)");
    check->add_option("--d", check_args.d);
    check->add_option("--h2k", check_args.h2k);
    check->add_option("--hk2", check_args.hk2);
    check->add_option("--k3", check_args.k3);
    check->add_option("--chi", check_args.chi);
    check->add_option("--s", check_args.s, "Least degree of a containing hypersurface");
    check->add_flag("--no-asymptotic", check_args.no_asymptotic, "Skip boss, prop2ii and prop2iii");
    check->add_flag("--json", check_args.json, "Print the report as JSON");
    check->add_flag("--csv", check_args.csv, "Print the report as CSV");
    add_policy_flags(check, check_args.policy);

    EnumerateArgs enum_args;
    auto *enumerate = app.add_subcommand("enumerate", "Feasible tuples of a fixed degree");
    enumerate->add_option("d", enum_args.d_min)->required();
    enumerate->add_option("s", enum_args.s)->required();

    EnumerateArgs region_args;
    auto *region = app.add_subcommand("region", "Feasible tuples over a degree range");
    region->add_option("d-min", region_args.d_min)->required();
    region->add_option("d-max", region_args.d_max)->required();
    region->add_option("s", region_args.s)->required();

    for (auto [cmd, args] : {std::pair{enumerate, &enum_args}, std::pair{region, &region_args}}) {
        add_policy_flags(cmd, args->policy);
        cmd->add_flag("--positivity", args->positivity, "Require H^2K, HK^2, K^3 > 0");
        cmd->add_flag("--boss", args->boss, "Also apply boss, prop2ii and prop2iii");
        cmd->add_option("--d-max-override", args->d_max_override, "Raise the degree limit of 60");
        cmd->add_option("--threads", args->threads, "Worker threads (0 = all cores)");
        add_output_flags(cmd, args->outputs);
    }

    TraceArgs trace_args;
    auto *trace = app.add_subcommand("trace", "Chern ratios along a complete-intersection family");
    trace->add_option("family", trace_args.family)->required()->check(CLI::IsMember({"ci-diagonal", "ci-fixed-s"}));
    trace->add_option("t-min", trace_args.t_min)->required();
    trace->add_option("t-max", trace_args.t_max)->required();
    trace->add_option("--s-fixed", trace_args.s_fixed, "First degree for ci-fixed-s (family CI(s, t))");
    add_output_flags(trace, trace_args.outputs);

    long long bound_s = 0;
    auto *bound = app.add_subcommand("bound", "Least degree allowed for s by the h^0 count");
    bound->add_option("s", bound_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*ci) {
            return run_ci_invariants(ci_a1, ci_a2);
        }
        if (*check) {
            return run_check(check_args);
        }
        if (*enumerate) {
            enum_args.d_max = enum_args.d_min;
            return run_enumerate(enum_args, "enumerate");
        }
        if (*region) {
            return run_enumerate(region_args, "region");
        }
        if (*trace) {
            return run_trace(trace_args);
        }
        if (*bound) {
            return run_bound(bound_s);
        }
    } catch (const Failure &f) {
        std::cerr << "chernratio: " << f.message << "\n";
        return exit_invalid;
    } catch (const std::exception &e) {
        std::cerr << "chernratio: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
