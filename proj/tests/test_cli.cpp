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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace
{

struct Result {
    int status;
    std::string out;
};

Result run(const std::string &args)
{
    const std::string cmd = std::string(CHERNRATIO_CLI) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, n);
    }
    const int raw = pclose(p);
    return Result{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string &s)
{
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

} // namespace

TEST_CASE("ci-invariants prints the tuple as JSON")
{
    const Result r = run("ci-invariants 4 4");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 16);
    CHECK(j["h2k"] == 32);
    CHECK(j["hk2"] == 64);
    CHECK(j["k3"] == 128);
    CHECK(j["chi"] == -20);
    CHECK(j["s"] == 4);
}

TEST_CASE("check exit codes")
{
    {
        std::ofstream f("cli_ci44.json");
        f << run("ci-invariants 4 4").out;
    }
    CHECK(run("check --tuple cli_ci44.json").status == 0);
    CHECK(run("check --d 16 --h2k 32 --hk2 65 --chi -20 --s 4").status == 1);
    const Result json = run("check --d 16 --h2k 32 --hk2 65 --chi -20 --s 4 --json");
    CHECK(json.status == 1);
    CHECK(nlohmann::json::parse(json.out)["entries"][0]["satisfied"] == false);
    // d=16, s=4 CI(4,4) keeps every entry under strict mode except the asymptotic ones.
    CHECK(run("check --tuple cli_ci44.json --policy strict").status == 1);
    CHECK(run("check --tuple cli_ci44.json --policy strict --no-asymptotic").status == 0);
    CHECK(run("check --d 16 --h2k 32 --hk2 64").status == 2);
    CHECK(run("check --d 16 --h2k 32 --hk2 64 --k3 128 --chi -19 --s 4").status == 2);
    CHECK(run("check --d 16 --h2k 32 --hk2 64 --k3 128").status == 2);
    CHECK(run("check --d 1x6 --h2k 32 --hk2 64 --k3 128 --s 4").status == 2);
    CHECK(run("check --tuple /nonexistent.json --s 4").status == 2);
}

TEST_CASE("invalid input exits 2")
{
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("ci-invariants 4").status == 2);
    CHECK(run("ci-invariants 1 4").status == 2);
    CHECK(run("ci-invariants four 4").status == 2);
    CHECK(run("enumerate 61 4").status == 2);
    CHECK(run("trace ci-square 3 5").status == 2);
    CHECK(run("trace ci-diagonal 10 50 --csv /nonexistent-dir/out.csv").status == 2);
    CHECK(run("check --tuple cli_ci44.json --policy loose").status == 2);
    CHECK(run("bound 1").status == 2);
}

TEST_CASE("trace writes CSV and SVG")
{
    const Result r = run("trace ci-diagonal 10 50 --csv cli_trace.csv --svg cli_trace.svg");
    CHECK(r.status == 0);
    const std::string csv = slurp("cli_trace.csv");
    CHECK(count_lines(csv) == 42);
    CHECK(csv.rfind("t,d,h2k,hk2,k3,chi,s,x_num,x_den,y_num,y_den,x_dec,y_dec,dist_sq\n", 0) == 0);
    CHECK(slurp("cli_trace.svg").find("limit-segment") != std::string::npos);

    const Result stdout_csv = run("trace ci-fixed-s 3 4 --s-fixed 2");
    CHECK(count_lines(stdout_csv.out) == 3);
}

TEST_CASE("outputs are byte-identical across runs and thread counts")
{
    REQUIRE(run("trace ci-fixed-s 2 80 --csv cli_a.csv --svg cli_a.svg").status == 0);
    REQUIRE(run("trace ci-fixed-s 2 80 --csv cli_b.csv --svg cli_b.svg").status == 0);
    CHECK(slurp("cli_a.csv") == slurp("cli_b.csv"));
    CHECK(slurp("cli_a.svg") == slurp("cli_b.svg"));

    REQUIRE(run("enumerate 12 3 --positivity --threads 1 --csv cli_e1.csv --svg cli_e1.svg").status == 0);
    REQUIRE(run("enumerate 12 3 --positivity --threads 4 --csv cli_e4.csv --svg cli_e4.svg").status == 0);
    CHECK(slurp("cli_e1.csv") == slurp("cli_e4.csv"));
    CHECK(slurp("cli_e1.svg") == slurp("cli_e4.svg"));
    CHECK(count_lines(slurp("cli_e1.csv")) == 493);
}

TEST_CASE("enumerate, region and bound")
{
    CHECK(run("enumerate 6 2 --positivity").out == "d=6 s=2 count=0\n");
    CHECK(run("enumerate 16 4 --positivity").out == "d=16 s=4 count=37267\n");
    const Result region = run("region 10 12 3 --positivity --json");
    CHECK(region.status == 0);
    const auto j = nlohmann::json::parse(region.out);
    CHECK(j["metadata"]["d_min"] == 10);
    CHECK(j["metadata"]["d_max"] == 12);
    CHECK(run("bound 2").out == "s=2 min_degree=3\n");
    CHECK(run("bound 3").out == "s=3 min_degree=4\n");
}
