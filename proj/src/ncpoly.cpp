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

#include "ore/ncpoly.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

NCPoly NCPoly::constant(const CoeffElem& c, std::size_t nvars) {
    NCPoly out(nvars, c.mode());
    out.add_term(Monomial(nvars), c);
    return out;
}

NCPoly NCPoly::term(const Monomial& m, const CoeffElem& c) {
    NCPoly out(m.nvars(), c.mode());
    out.add_term(m, c);
    return out;
}

NCPoly NCPoly::generator(std::size_t nvars, int var, const CoeffMode& mode) {
    return term(Monomial::generator(nvars, var), CoeffElem::one(mode));
}

int NCPoly::top_variable() const {
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m.top_variable());
    return top;
}

CoeffElem NCPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffElem::zero(mode_) : it->second;
}

void NCPoly::add_term(const Monomial& m, const CoeffElem& c) {
    if (m.nvars() != nvars_) throw AlgebraMismatch("monomial does not belong to this algebra");
    if (!(c.mode() == mode_)) throw ModeMismatch("coefficient mode differs from polynomial mode");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::check_compatible(const NCPoly& other) const {
    if (nvars_ != other.nvars_) throw AlgebraMismatch("polynomials belong to different algebras");
    if (!(mode_ == other.mode_)) throw ModeMismatch("polynomials use different coefficient modes");
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

NCPoly NCPoly::operator-() const { return scaled(Scalar(-1)); }

NCPoly NCPoly::scaled(const CoeffElem& c) const {
    if (!(c.mode() == mode_)) throw ModeMismatch("scaling by a coefficient of another mode");
    NCPoly out(nvars_, mode_);
    for (const auto& [m, d] : terms_) out.add_term(m, c * d);
    return out;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly out(nvars_, mode_);
    for (const auto& [m, d] : terms_) out.add_term(m, d.scaled(c));
    return out;
}

NCPoly NCPoly::times_power_of(int var, int e) const {
    if (e == 0) return *this;
    NCPoly out(nvars_, mode_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(m.with_exponent(var, m.exponent(var) + e), c);
    }
    return out;
}

NCPoly NCPoly::embedded(std::size_t nvars) const {
    if (nvars < nvars_ && !lies_in(static_cast<int>(nvars))) {
        throw AlgebraMismatch("cannot restrict a polynomial that uses dropped variables");
    }
    NCPoly out(nvars, mode_);
    for (const auto& [m, c] : terms_) {
        Monomial mm(nvars);
        for (std::size_t v = 0; v < std::min(nvars, nvars_); ++v) mm.exps[v] = m.exps[v];
        out.add_term(mm, c);
    }
    return out;
}

NCPoly nc_add(const NCPoly& f, const NCPoly& g) { return f + g; }

NCPoly nc_scale(const CoeffElem& c, const NCPoly& f) { return f.scaled(c); }

}  // namespace ore
