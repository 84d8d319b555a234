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

#include "ore/scalar.hpp"

#include <cctype>

#include "ore/errors.hpp"

namespace ore {

Scalar make_scalar(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero("zero denominator");
    Scalar value(numerator, denominator);
    value.canonicalize();
    return value;
}

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    auto valid_int = [](std::string_view part) {
        std::size_t pos = 0;
        if (pos < part.size() && (part[pos] == '-' || part[pos] == '+')) ++pos;
        if (pos == part.size()) return false;
        for (; pos < part.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(part[pos]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw Error("malformed rational '" + s + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    Scalar value(n, d);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

Scalar power(const Scalar& value, int exponent) {
    if (exponent < 0) {
        if (is_zero(value)) throw DivisionByZero("zero raised to a negative power");
        return power(Scalar(1) / value, -exponent);
    }
    Scalar result(1), base(value);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace ore
