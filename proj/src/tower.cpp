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

#include "ore/tower.hpp"

#include "ore/errors.hpp"

namespace ore {

TowerPresentation::TowerPresentation(std::vector<std::string> names, CoeffMode mode)
    : names_(std::move(names)), mode_(mode) {
    const std::size_t n = names_.size();
    a_.resize(n);
    u_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        a_[j].assign(j, CoeffElem::one(mode_));
        u_[j].assign(j, NCPoly(n, mode_));
    }
}

int TowerPresentation::index_of(std::string_view name) const {
    for (std::size_t v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) return static_cast<int>(v + 1);
    }
    return 0;
}

void TowerPresentation::check_pair(int j, int i) const {
    if (i < 1 || i >= j || j > static_cast<int>(size())) {
        throw AlgebraMismatch("relation index (" + std::to_string(j) + ", " + std::to_string(i) +
                              ") needs 1 <= i < j <= " + std::to_string(size()));
    }
}

const CoeffElem& TowerPresentation::a(int j, int i) const {
    check_pair(j, i);
    return a_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

const NCPoly& TowerPresentation::u(int j, int i) const {
    check_pair(j, i);
    return u_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

void TowerPresentation::set_relation(int j, int i, CoeffElem a, NCPoly u) {
    check_pair(j, i);
    if (!(a.mode() == mode_) || !(u.mode() == mode_)) {
        throw ModeMismatch("relation coefficients must use the tower's mode " + to_string(mode_));
    }
    if (u.nvars() != size()) throw AlgebraMismatch("u_ji must live in the tower's algebra");
    a_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = std::move(a);
    u_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = std::move(u);
    validated_ = false;
}

bool TowerPresentation::is_commutative_through(int level) const {
    for (int j = 2; j <= level; ++j) {
        for (int i = 1; i < j; ++i) {
            if (!a(j, i).is_one() || !u(j, i).is_zero()) return false;
        }
    }
    return true;
}

TowerPresentation TowerPresentation::restricted(int level) const {
    std::vector<std::string> names(names_.begin(), names_.begin() + level);
    TowerPresentation out(std::move(names), mode_);
    for (int j = 2; j <= level; ++j) {
        for (int i = 1; i < j; ++i) {
            out.set_relation(j, i, a(j, i), u(j, i).embedded(static_cast<std::size_t>(level)));
        }
    }
    out.validated_ = validated_;
    return out;
}

}  // namespace ore
