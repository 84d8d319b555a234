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

#include <map>

#include "ore/monomial.hpp"
#include "ore/scalar.hpp"

namespace ore {

/// Commutative polynomial over the rationals in nvars variables.
class CommPoly {
public:
    using Terms = std::map<Monomial, Scalar>;

    CommPoly() = default;
    explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}

    static CommPoly constant(const Scalar& c, std::size_t nvars);
    static CommPoly variable(std::size_t nvars, int var);
    static CommPoly term(const Monomial& m, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int top_variable() const;
    bool lies_in(int level) const { return top_variable() <= level; }
    /// Largest exponent of var over all terms.
    int degree_in(int var) const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    CommPoly& operator+=(const CommPoly& other);
    CommPoly& operator-=(const CommPoly& other);
    CommPoly& operator*=(const CommPoly& other);
    CommPoly operator-() const;
    CommPoly scaled(const Scalar& c) const;
    CommPoly derivative(int var) const;

    friend CommPoly operator+(CommPoly lhs, const CommPoly& rhs) { return lhs += rhs; }
    friend CommPoly operator-(CommPoly lhs, const CommPoly& rhs) { return lhs -= rhs; }
    friend CommPoly operator*(CommPoly lhs, const CommPoly& rhs) { return lhs *= rhs; }
    friend bool operator==(const CommPoly&, const CommPoly&) = default;

private:
    void check_compatible(const CommPoly& other) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace ore
