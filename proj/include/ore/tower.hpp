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

#include <string>
#include <string_view>
#include <vector>

#include "ore/ncpoly.hpp"

namespace ore {

class TowerPresentation;
TowerPresentation build_tower(TowerPresentation tables);
TowerPresentation extend_tower(const TowerPresentation& base, const std::string& name,
                               const std::vector<CoeffElem>& a_k, const std::vector<NCPoly>& u_k);

/// Relation data of A_n = F[x_1][x_2; beta_2, nu_2] ... [x_n; beta_n, nu_n]
/// in solved form x_j x_i = a_ji x_i x_j + u_ji for 1 <= i < j <= n.
///
/// A freshly constructed presentation has a = 1, u = 0 everywhere and is not
/// validated. Only build_tower hands out validated presentations; any later
/// set_relation drops the flag again.
class TowerPresentation {
public:
    TowerPresentation() = default;
    TowerPresentation(std::vector<std::string> names, CoeffMode mode);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const CoeffMode& mode() const { return mode_; }
    bool validated() const { return validated_; }

    /// 1-based variable index of name, or 0.
    int index_of(std::string_view name) const;

    const CoeffElem& a(int j, int i) const;
    const NCPoly& u(int j, int i) const;
    void set_relation(int j, int i, CoeffElem a, NCPoly u);

    /// True when a_ji = 1 and u_ji = 0 for every 1 <= i < j <= level.
    bool is_commutative_through(int level) const;

    /// The presentation of the first `level` variables, embedded in `level` variables.
    TowerPresentation restricted(int level) const;

    friend bool operator==(const TowerPresentation& x, const TowerPresentation& y) {
        return x.names_ == y.names_ && x.mode_ == y.mode_ && x.a_ == y.a_ && x.u_ == y.u_;
    }

private:
    friend TowerPresentation build_tower(TowerPresentation tables);
    friend TowerPresentation extend_tower(const TowerPresentation& base, const std::string& name,
                                          const std::vector<CoeffElem>& a_k, const std::vector<NCPoly>& u_k);

    void check_pair(int j, int i) const;

    std::vector<std::string> names_;
    CoeffMode mode_;
    // a_[j-1][i-1], u_[j-1][i-1] for i < j.
    std::vector<std::vector<CoeffElem>> a_;
    std::vector<std::vector<NCPoly>> u_;
    bool validated_ = false;
};

}  // namespace ore
