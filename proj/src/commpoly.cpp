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

#include "ore/commpoly.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

CommPoly CommPoly::constant(const Scalar& c, std::size_t nvars) {
    CommPoly out(nvars);
    out.add_term(Monomial(nvars), c);
    return out;
}

CommPoly CommPoly::variable(std::size_t nvars, int var) {
    return term(Monomial::generator(nvars, var), Scalar(1));
}

CommPoly CommPoly::term(const Monomial& m, const Scalar& c) {
    CommPoly out(m.nvars());
    out.add_term(m, c);
    return out;
}

int CommPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int CommPoly::top_variable() const {
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m.top_variable());
    return top;
}

int CommPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

Scalar CommPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CommPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw AlgebraMismatch("monomial does not belong to this polynomial ring");
    if (ore::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (ore::is_zero(it->second)) terms_.erase(it);
    }
}

void CommPoly::check_compatible(const CommPoly& other) const {
    if (nvars_ != other.nvars_) throw AlgebraMismatch("polynomials over different variable counts");
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const CommPoly& other) {
    check_compatible(other);
    CommPoly out(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    }
    *this = std::move(out);
    return *this;
}

CommPoly CommPoly::operator-() const { return scaled(Scalar(-1)); }

CommPoly CommPoly::scaled(const Scalar& c) const {
    CommPoly out(nvars_);
    for (const auto& [m, d] : terms_) out.add_term(m, c * d);
    return out;
}

CommPoly CommPoly::derivative(int var) const {
    CommPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(var);
        if (e == 0) continue;
        out.add_term(m.with_exponent(var, e - 1), c * e);
    }
    return out;
}

}  // namespace ore
