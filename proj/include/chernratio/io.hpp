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

#ifndef CHERNRATIO_IO_HPP
#define CHERNRATIO_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <chernratio/constraints.hpp>
#include <chernratio/geography.hpp>
#include <chernratio/invariants.hpp>

namespace chernratio::io
{

// Flat record {d, h2k, hk2, k3, chi[, s]} in that key order.
std::string tuple_to_json(const InvariantTuple &t);

// Accepts a JSON object or "key=value" lines with the same field names.
// k3 may be omitted (it is then derived from chi) and vice versa.
// The result is validated; throws ParameterError / InvalidTupleError /
// ConsistencyError.
InvariantTuple parse_tuple(std::string_view text);

std::string report_to_json(const ConstraintReport &report, const Integer &s, const SlackPolicy &policy);
// constraint_id,satisfied,margin,note
std::string report_to_csv(const ConstraintReport &report);
std::string report_to_text(const ConstraintReport &report);

// Column order shared by trace and cloud tables.
inline constexpr std::string_view csv_header =
    "t,d,h2k,hk2,k3,chi,s,x_num,x_den,y_num,y_den,x_dec,y_dec,dist_sq";

std::string trace_to_csv(const FamilyTrace &trace);
std::string trace_to_json(const FamilyTrace &trace);
std::string trace_to_svg(const FamilyTrace &trace);

// Cloud rows use the entry index as t.
std::string cloud_to_csv(const RatioCloud &cloud);
std::string cloud_to_json(const RatioCloud &cloud);
std::string cloud_to_svg(const RatioCloud &cloud);

// Round to `places` decimals (half away from zero), fixed notation.
std::string fixed_string(const Rational &q, int places);

// Throws IoError if the file cannot be written.
void write_file(const std::string &path, std::string_view contents);
std::string read_file(const std::string &path);

} // namespace chernratio::io

#endif
