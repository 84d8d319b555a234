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
#include <utility>

#include "ore/tower.hpp"

namespace ore {

/// Normal-form multiplication in a tower. Products are built recursively on
/// the top variable x_m using x_m h = beta_m(h) x_m + nu_m(h) for h in A_{m-1}.
///
/// The engine keeps memo tables and is therefore not thread-safe; create one
/// per thread. It does not require the tower to be validated, so the validator
/// can use it on candidate extensions.
class PbwEngine {
public:
    explicit PbwEngine(const TowerPresentation& tower);

    const TowerPresentation& tower() const { return tower_; }

    NCPoly multiply(const NCPoly& f, const NCPoly& g);
    NCPoly beta(int k, const NCPoly& f);
    NCPoly nu(int k, const NCPoly& f);

private:
    NCPoly multiply_monomials(const Monomial& x, const Monomial& y);
    NCPoly nu_monomial(int k, const Monomial& m);
    CoeffElem beta_factor(int k, const Monomial& m) const;
    void check_argument(int k, const NCPoly& f) const;

    const TowerPresentation& tower_;
    std::map<std::pair<Monomial, Monomial>, NCPoly> product_cache_;
    std::map<std::pair<int, Monomial>, NCPoly> nu_cache_;
};

NCPoly apply_beta(const TowerPresentation& tower, int k, const NCPoly& f);
NCPoly apply_nu(const TowerPresentation& tower, int k, const NCPoly& f);
NCPoly nc_mul(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g);

/// fg - gf.
NCPoly commutator(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g);
/// (fg - gf) / (t - 1), coefficient-wise. Throws NotDivisible.
NCPoly scaled_commutator(const TowerPresentation& tower, const NCPoly& f, const NCPoly& g);
bool is_central(const TowerPresentation& tower, const NCPoly& f);

}  // namespace ore
