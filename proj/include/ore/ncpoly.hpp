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

#include "ore/coeff.hpp"
#include "ore/monomial.hpp"

namespace ore {

/// Element of an iterated Ore extension A_n written in the PBW basis of
/// standard monomials. No zero coefficients are stored; every coefficient
/// shares the polynomial's mode.
class NCPoly {
public:
    using Terms = std::map<Monomial, CoeffElem>;

    NCPoly() = default;
    NCPoly(std::size_t nvars, CoeffMode mode) : nvars_(nvars), mode_(mode) {}

    static NCPoly constant(const CoeffElem& c, std::size_t nvars);
    static NCPoly term(const Monomial& m, const CoeffElem& c);
    static NCPoly generator(std::size_t nvars, int var, const CoeffMode& mode);

    std::size_t nvars() const { return nvars_; }
    const CoeffMode& mode() const { return mode_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Highest variable occurring, 0 for constants.
    int top_variable() const;
    /// True iff the element lies in the subalgebra A_level.
    bool lies_in(int level) const { return top_variable() <= level; }

    CoeffElem coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const CoeffElem& c);

    NCPoly& operator+=(const NCPoly& other);
    NCPoly& operator-=(const NCPoly& other);
    NCPoly operator-() const;
    NCPoly scaled(const CoeffElem& c) const;
    NCPoly scaled(const Scalar& c) const;
    /// Multiply every monomial on the right by x_var^e; the caller guarantees
    /// that no variable above var occurs, so the result stays standard.
    NCPoly times_power_of(int var, int e) const;
    /// Same element viewed inside an algebra with more variables.
    NCPoly embedded(std::size_t nvars) const;
    /// Apply f to every coefficient, dropping zeros.
    template <class F>
    NCPoly map_coefficients(F&& f, CoeffMode mode) const {
        NCPoly out(nvars_, mode);
        for (const auto& [m, c] : terms_) out.add_term(m, f(c));
        return out;
    }

    friend NCPoly operator+(NCPoly lhs, const NCPoly& rhs) { return lhs += rhs; }
    friend NCPoly operator-(NCPoly lhs, const NCPoly& rhs) { return lhs -= rhs; }
    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.nvars_ == b.nvars_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const NCPoly& other) const;

    std::size_t nvars_ = 0;
    CoeffMode mode_;
    Terms terms_;
};

NCPoly nc_add(const NCPoly& f, const NCPoly& g);
NCPoly nc_scale(const CoeffElem& c, const NCPoly& f);

}  // namespace ore
