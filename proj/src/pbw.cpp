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

#include "ore/pbw.hpp"

#include <vector>

#include "ore/errors.hpp"

namespace ore {

PbwEngine::PbwEngine(const TowerPresentation& tower) : tower_(tower) {}

void PbwEngine::check_argument(int k, const NCPoly& f) const {
    if (k < 2 || k > static_cast<int>(tower_.size())) {
        throw AlgebraMismatch("level " + std::to_string(k) + " is outside the tower");
    }
    if (f.nvars() != tower_.size()) throw AlgebraMismatch("polynomial does not belong to the tower");
    if (!(f.mode() == tower_.mode())) throw ModeMismatch("polynomial mode differs from the tower's");
    if (!f.lies_in(k - 1)) {
        throw AlgebraMismatch("argument of beta_" + std::to_string(k) + "/nu_" + std::to_string(k) +
                              " must lie in A_" + std::to_string(k - 1));
    }
}

CoeffElem PbwEngine::beta_factor(int k, const Monomial& m) const {
    CoeffElem factor = CoeffElem::one(tower_.mode());
    for (int i = 1; i < k; ++i) {
        const int e = m.exponent(i);
        if (e > 0) factor *= tower_.a(k, i).pow(e);
    }
    return factor;
}

NCPoly PbwEngine::beta(int k, const NCPoly& f) {
    check_argument(k, f);
    NCPoly out(f.nvars(), f.mode());
    for (const auto& [m, c] : f.terms()) out.add_term(m, c * beta_factor(k, m));
    return out;
}

NCPoly PbwEngine::nu(int k, const NCPoly& f) {
    check_argument(k, f);
    NCPoly out(f.nvars(), f.mode());
    for (const auto& [m, c] : f.terms()) out += nu_monomial(k, m).scaled(c);
    return out;
}

// nu(Y x_j) = beta(Y) u_kj + nu(Y) x_j, peeling the last letter of the standard word.
NCPoly PbwEngine::nu_monomial(int k, const Monomial& m) {
    const std::size_t n = tower_.size();
    if (m.is_unit()) return NCPoly(n, tower_.mode());
    auto key = std::make_pair(k, m);
    if (auto it = nu_cache_.find(key); it != nu_cache_.end()) return it->second;

    const int j = m.top_variable();
    const Monomial y = m.with_exponent(j, m.exponent(j) - 1);
    const NCPoly beta_y = NCPoly::term(y, beta_factor(k, y));
    NCPoly result = multiply(beta_y, tower_.u(k, j));
    const NCPoly nu_y = nu_monomial(k, y);
    if (!nu_y.is_zero()) result += multiply(nu_y, NCPoly::generator(n, j, tower_.mode()));

    nu_cache_.emplace(std::move(key), result);
    return result;
}

NCPoly PbwEngine::multiply(const NCPoly& f, const NCPoly& g) {
    if (f.nvars() != tower_.size() || g.nvars() != tower_.size()) {
        throw AlgebraMismatch("factors do not belong to the tower");
    }
    if (!(f.mode() == tower_.mode()) || !(g.mode() == tower_.mode())) {
        throw ModeMismatch("factor mode differs from the tower's");
    }
    NCPoly out(tower_.size(), tower_.mode());
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            out += multiply_monomials(mf, mg).scaled(cf * cg);
        }
    }
    return out;
}

// X Y = X' (x_m^d Y') x_m^e where m is the top variable of both factors.
NCPoly PbwEngine::multiply_monomials(const Monomial& x, const Monomial& y) {
    const std::size_t n = tower_.size();
    const CoeffMode& mode = tower_.mode();
    const int m = std::max(x.top_variable(), y.top_variable());
    if (m <= 1 || x.is_unit() || y.without(m).is_unit()) {
        return NCPoly::term(x * y, CoeffElem::one(mode));
    }
    const int d = x.exponent(m);
    auto key = std::make_pair(x, y);
    if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;

    const Monomial x_low = x.without(m);
    const Monomial y_low = y.without(m);
    const int e = y.exponent(m);

    // Polynomial in x_m with coefficients in A_{m-1}: poly[r] is the coefficient of x_m^r.
    std::vector<NCPoly> poly(1, NCPoly::term(y_low, CoeffElem::one(mode)));
    for (int step = 0; step < d; ++step) {
        std::vector<NCPoly> next(poly.size() + 1, NCPoly(n, mode));
        for (std::size_t r = 0; r < poly.size(); ++r) {
            if (poly[r].is_zero()) continue;
            next[r + 1] += beta(m, poly[r]);
            next[r] += nu(m, poly[r]);
        }
        poly = std::move(next);
    }

    NCPoly result(n, mode);
    const NCPoly left = NCPoly::term(x_low, CoeffElem::one(mode));
    for (std::size_t r = 0; r < poly.size(); ++r) {
        if (poly[r].is_zero()) continue;
        NCPoly low = x_low.is_unit() ? poly[r] : multiply(left, poly[r]);
        result += low.times_power_of(m, static_cast<int>(r) + e);
    }
    product_cache_.emplace(std::move(key), result);
    return result;
}

NCPoly apply_beta(const TowerPresentation& tower, int k, const NCPoly& f) {
    PbwEngine engine(tower);
    return engine.beta(k, f);
}

NCPoly apply_nu(const TowerPresentation& tower, int k, const NCPoly& f) {
    PbwEngine engine(tower);
    return engine.nu(k, f);
}

NCPoly nc_mul(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g) {
    PbwEngine engine(tower);
    return engine.multiply(f, g);
}

NCPoly commutator(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g) {
    PbwEngine engine(tower);
    return engine.multiply(f, g) - engine.multiply(g, f);
}

NCPoly scaled_commutator(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g) {
    const NCPoly c = commutator(tower, f, g);
    CoeffMode mode = tower.mode();
    if (mode.is_series()) {
        if (mode.prec < 2) throw InsufficientPrecision("scaled commutator needs series precision >= 2");
        mode = CoeffMode::series(mode.prec - 1);
    }
    return c.map_coefficients([](const CoeffElem& x) { return divide_by_t_minus_one(x); }, mode);
}

bool is_central(const TowerPresentation& tower, const NCPoly& f) {
    PbwEngine engine(tower);
    const std::size_t n = tower.size();
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        const NCPoly x = NCPoly::generator(n, v, tower.mode());
        if (!(engine.multiply(f, x) == engine.multiply(x, f))) return false;
    }
    return true;
}

}  // namespace ore
