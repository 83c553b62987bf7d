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

#include <chernratio/io.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include <chernratio/errors.hpp>

namespace chernratio::io
{

namespace
{

using ordered_json = nlohmann::ordered_json;

ordered_json integer_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return ordered_json(static_cast<std::int64_t>(z.get_si()));
    }
    return ordered_json(z.get_str());
}

ordered_json tuple_json(const InvariantTuple &t)
{
    ordered_json j;
    j["d"] = integer_json(t.d);
    j["h2k"] = integer_json(t.h2k);
    j["hk2"] = integer_json(t.hk2);
    j["k3"] = integer_json(t.k3);
    j["chi"] = integer_json(t.chi);
    if (t.s) {
        j["s"] = integer_json(*t.s);
    }
    return j;
}

ordered_json policy_json(const SlackPolicy &p)
{
    ordered_json j;
    j["mode"] = std::string(mode_name(p.mode));
    j["coefficient"] = fraction_string(p.coefficient);
    j["exponent"] = fraction_string(p.exponent);
    return j;
}

ordered_json ratios_json(const std::optional<ChernRatios> &r, const std::optional<Rational> &dist)
{
    ordered_json j;
    if (!r) {
        j["defined"] = false;
        return j;
    }
    j["defined"] = true;
    j["x"] = fraction_string(r->x);
    j["y"] = fraction_string(r->y);
    j["x_dec"] = decimal_string(r->x);
    j["y_dec"] = decimal_string(r->y);
    if (dist) {
        j["dist_sq"] = fraction_string(*dist);
    }
    return j;
}

std::string dump(const ordered_json &j)
{
    return j.dump(2) + "\n";
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostringstream &os, long t, const InvariantTuple &tuple, const std::optional<ChernRatios> &r,
             const std::optional<Rational> &dist)
{
    os << t << ',' << tuple.d << ',' << tuple.h2k << ',' << tuple.hk2 << ',' << tuple.k3 << ',' << tuple.chi << ',';
    if (tuple.s) {
        os << *tuple.s;
    }
    if (r) {
        os << ',' << r->x.get_num() << ',' << r->x.get_den() << ',' << r->y.get_num() << ',' << r->y.get_den() << ','
           << decimal_string(r->x) << ',' << decimal_string(r->y) << ',';
        if (dist) {
            os << fraction_string(*dist);
        }
    } else {
        os << ",,,,,,,";
    }
    os << '\n';
}

struct SvgPoint {
    Rational x;
    Rational y;
};

// viewBox covers x in [0, 3], y in [-2, 3]; SVG y grows downward, so plot -y.
std::string svg(const std::vector<SvgPoint> &points, const std::string &title)
{
    auto coord = [](const Rational &q) { return fixed_string(q, 6); };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 -3 3 5\" width=\"600\" height=\"1000\">\n";
    os << "  <title>" << title << "</title>\n";
    os << "  <rect x=\"0\" y=\"-3\" width=\"3\" height=\"5\" fill=\"white\"/>\n";
    os << "  <line x1=\"0\" y1=\"0\" x2=\"3\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"0.004\"/>\n";
    os << "  <line class=\"limit-segment\" x1=\"" << coord(segment_start.x) << "\" y1=\"" << coord(-segment_start.y)
       << "\" x2=\"" << coord(segment_end.x) << "\" y2=\"" << coord(-segment_end.y)
       << "\" stroke=\"#d62728\" stroke-width=\"0.012\"/>\n";
    os << "  <line class=\"determinantal-segment\" x1=\"" << coord(determinantal_start.x) << "\" y1=\""
       << coord(-determinantal_start.y) << "\" x2=\"" << coord(determinantal_end.x) << "\" y2=\""
       << coord(-determinantal_end.y) << "\" stroke=\"#1f77b4\" stroke-width=\"0.012\"/>\n";
    os << "  <g fill=\"#222222\" fill-opacity=\"0.6\">\n";
    for (const auto &p : points) {
        os << "    <circle cx=\"" << coord(p.x) << "\" cy=\"" << coord(-p.y) << "\" r=\"0.008\"/>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

std::string family_name(const FamilySpec &spec)
{
    switch (spec.kind) {
    case FamilyKind::ci_fixed_s:
        return "ci-fixed-s";
    case FamilyKind::ci_diagonal:
        return "ci-diagonal";
    case FamilyKind::explicit_list:
        return "explicit";
    }
    return "?";
}

} // namespace

std::string fixed_string(const Rational &q, int places)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const Rational a = abs(q) * scale;
    const Integer n = floor_of(a + Rational(1, 2));
    std::string digits = n.get_str();
    if (digits.size() <= static_cast<std::size_t>(places)) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    std::string out = (q < 0 && n != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
}

std::string tuple_to_json(const InvariantTuple &t)
{
    return tuple_json(t).dump() + "\n";
}

InvariantTuple parse_tuple(std::string_view text)
{
    std::map<std::string, Integer> fields;
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(body);
        } catch (const nlohmann::json::exception &e) {
            throw ParameterError(std::string("malformed tuple JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw ParameterError("tuple JSON must be an object");
        }
        for (const auto &[key, value] : j.items()) {
            if (value.is_number_integer()) {
                fields[key] = Integer(value.dump());
            } else if (value.is_string()) {
                fields[key] = parse_integer(value.get<std::string>());
            } else if (value.is_null() && key == "s") {
                continue;
            } else {
                throw ParameterError("field '" + key + "' must be an integer");
            }
        }
    } else {
        std::istringstream in{std::string(body)};
        std::string line;
        while (std::getline(in, line)) {
            const std::string l = trim(line);
            if (l.empty() || l.front() == '#') {
                continue;
            }
            const auto eq = l.find('=');
            if (eq == std::string::npos) {
                throw ParameterError("expected key=value, got '" + l + "'");
            }
            fields[trim(l.substr(0, eq))] = parse_integer(trim(l.substr(eq + 1)));
        }
    }

    for (const auto &[key, value] : fields) {
        (void)value;
        if (key != "d" && key != "h2k" && key != "hk2" && key != "k3" && key != "chi" && key != "s") {
            throw ParameterError("unknown tuple field '" + key + "'");
        }
    }
    for (const char *key : {"d", "h2k", "hk2"}) {
        if (!fields.count(key)) {
            throw ParameterError(std::string("tuple is missing field '") + key + "'");
        }
    }
    const bool has_k3 = fields.count("k3") != 0;
    const bool has_chi = fields.count("chi") != 0;
    if (!has_k3 && !has_chi) {
        throw ParameterError("tuple needs k3 or chi");
    }

    InvariantTuple t;
    t.d = fields["d"];
    t.h2k = fields["h2k"];
    t.hk2 = fields["hk2"];
    t.k3 = has_k3 ? fields["k3"] : Integer((t.d - 15) * t.h2k - 6 * t.hk2 - 24 * fields["chi"]);
    t.chi = has_chi ? fields["chi"] : chi_from_invariants(t.d, t.h2k, t.hk2, t.k3);
    if (fields.count("s")) {
        t.s = fields["s"];
    }
    validate(t);
    return t;
}

std::string report_to_json(const ConstraintReport &report, const Integer &s, const SlackPolicy &policy)
{
    ordered_json j;
    j["s"] = integer_json(s);
    j["policy"] = policy_json(policy);
    j["all_satisfied"] = report.all_satisfied();
    ordered_json entries = ordered_json::array();
    for (const auto &e : report.entries) {
        ordered_json r;
        r["constraint_id"] = e.id;
        r["satisfied"] = e.satisfied;
        r["margin"] = fraction_string(e.margin);
        r["note"] = e.note;
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return dump(j);
}

std::string report_to_csv(const ConstraintReport &report)
{
    std::ostringstream os;
    os << "constraint_id,satisfied,margin,note\n";
    for (const auto &e : report.entries) {
        os << e.id << ',' << (e.satisfied ? "true" : "false") << ',' << fraction_string(e.margin) << ','
           << csv_quote(e.note) << '\n';
    }
    return os.str();
}

std::string report_to_text(const ConstraintReport &report)
{
    std::ostringstream os;
    for (const auto &e : report.entries) {
        os << (e.satisfied ? "ok        " : "VIOLATED  ");
        os << e.id;
        os << std::string(e.id.size() < 12 ? 12 - e.id.size() : 1, ' ');
        os << "margin " << fraction_string(e.margin);
        if (e.margin.get_den() != 1) {
            os << " (~" << decimal_string(e.margin, 6) << ")";
        }
        if (!e.note.empty()) {
            os << "  [" << e.note << "]";
        }
        os << '\n';
    }
    return os.str();
}

std::string trace_to_csv(const FamilyTrace &trace)
{
    std::ostringstream os;
    os << csv_header << '\n';
    for (const auto &p : trace.points) {
        csv_row(os, p.t, p.tuple, p.ratios, p.dist_sq);
    }
    return os.str();
}

std::string trace_to_json(const FamilyTrace &trace)
{
    ordered_json j;
    j["family"] = family_name(trace.spec);
    if (trace.spec.kind == FamilyKind::ci_fixed_s) {
        j["s_fixed"] = trace.spec.s_fixed;
    }
    j["t_min"] = trace.spec.t_min;
    j["t_max"] = trace.spec.t_max;
    ordered_json points = ordered_json::array();
    for (const auto &p : trace.points) {
        ordered_json r;
        r["t"] = p.t;
        r["a1"] = p.ci.a1;
        r["a2"] = p.ci.a2;
        r["tuple"] = tuple_json(p.tuple);
        r["ratios"] = ratios_json(p.ratios, p.dist_sq);
        points.push_back(std::move(r));
    }
    j["points"] = std::move(points);
    return dump(j);
}

std::string trace_to_svg(const FamilyTrace &trace)
{
    std::vector<SvgPoint> pts;
    for (const auto &p : trace.points) {
        if (p.ratios) {
            pts.push_back({p.ratios->x, p.ratios->y});
        }
    }
    return svg(pts, "Chern ratios, family " + family_name(trace.spec) + " t=" + std::to_string(trace.spec.t_min) + ".."
                        + std::to_string(trace.spec.t_max));
}

std::string cloud_to_csv(const RatioCloud &cloud)
{
    std::ostringstream os;
    os << csv_header << '\n';
    long i = 0;
    for (const auto &e : cloud.entries) {
        std::optional<Rational> dist;
        if (e.ratios) {
            dist = segment_distance(e.ratios->x, e.ratios->y);
        }
        csv_row(os, i++, e.tuple, e.ratios, dist);
    }
    return os.str();
}

std::string cloud_to_json(const RatioCloud &cloud)
{
    ordered_json j;
    ordered_json meta;
    meta["d_min"] = cloud.d_min;
    meta["d_max"] = cloud.d_max;
    meta["s"] = integer_json(cloud.s);
    meta["policy"] = policy_json(cloud.policy);
    meta["positivity"] = cloud.positivity;
    meta["asymptotic_bounds"] = cloud.asymptotic_bounds;
    meta["count"] = cloud.count();
    j["metadata"] = std::move(meta);
    ordered_json entries = ordered_json::array();
    for (const auto &e : cloud.entries) {
        ordered_json r;
        r["tuple"] = tuple_json(e.tuple);
        std::optional<Rational> dist;
        if (e.ratios) {
            dist = segment_distance(e.ratios->x, e.ratios->y);
        }
        r["ratios"] = ratios_json(e.ratios, dist);
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return dump(j);
}

std::string cloud_to_svg(const RatioCloud &cloud)
{
    std::vector<SvgPoint> pts;
    for (const auto &e : cloud.entries) {
        if (e.ratios) {
            pts.push_back({e.ratios->x, e.ratios->y});
        }
    }
    return svg(pts, "Chern ratios, d=" + std::to_string(cloud.d_min) + ".." + std::to_string(cloud.d_max)
                        + ", s=" + cloud.s.get_str());
}

void write_file(const std::string &path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace chernratio::io
