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

#include <cstddef>
#include <vector>

namespace ore {

/// Standard monomial x_1^e_1 ... x_n^e_n. Variables are 1-based in the public
/// API; exps[v - 1] holds the exponent of x_v. The same type doubles as a
/// commutative monomial.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> exponents) : exps(std::move(exponents)) {}

    static Monomial generator(std::size_t nvars, int var);
    /// Letters may come in any order; only their multiplicities are kept.
    static Monomial from_letters(std::size_t nvars, const std::vector<int>& letters);

    std::size_t nvars() const { return exps.size(); }
    int exponent(int var) const { return exps[static_cast<std::size_t>(var - 1)]; }
    int degree() const;
    bool is_unit() const { return degree() == 0; }
    /// Highest variable with nonzero exponent, 0 for the unit monomial.
    int top_variable() const;
    /// True when no variable above `level` occurs.
    bool lies_in(int level) const;
    /// Letters in non-decreasing order (the standard word).
    std::vector<int> letters() const;
    Monomial without(int var) const;
    Monomial with_exponent(int var, int e) const;

    /// Exponent addition: the commutative product, and the concatenation
    /// of standard words whenever that concatenation is standard.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x_1 < x_2 < ... < x_n.
bool operator<(const Monomial& a, const Monomial& b);

}  // namespace ore
