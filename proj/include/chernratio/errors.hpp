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

#ifndef CHERNRATIO_ERRORS_HPP
#define CHERNRATIO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chernratio
{

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// K^3 and chi disagree with K^3 = (d-15)H^2K - 6HK^2 - 24chi.
struct ConsistencyError : Error {
    using Error::Error;
};

// No smooth 3-fold profile can carry these numbers (parity, divisibility, d < 1).
struct InvalidTupleError : Error {
    using Error::Error;
};

// c1c2 == 0.
struct RatiosUndefinedError : Error {
    using Error::Error;
};

// Inverting a graded class whose degree-0 coefficient vanishes.
struct NonUnitError : Error {
    using Error::Error;
};

// A predicate evaluated outside its hypothesis (e.g. 2 - a - 2b <= 0).
struct InapplicableError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace chernratio

#endif
