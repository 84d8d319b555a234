/*
   Copyright 2026 The oretower Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ore {

/// Exact rational; mpq_class keeps numerator/denominator canonical after every operation.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Accepts "p" or "p/q" with optional sign. Throws ore::Error on malformed input.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

bool is_integer(const Scalar& value);

/// value^exponent; negative exponents require a nonzero base.
Scalar power(const Scalar& value, int exponent);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace ore
