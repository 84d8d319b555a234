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

#include "ore/free.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "ore/errors.hpp"

namespace ore {

FreePoly FreePoly::constant(const CoeffElem& c, std::size_t nvars) {
    FreePoly out(nvars, c.mode());
    out.add_term({}, c);
    return out;
}

FreePoly FreePoly::word(std::size_t nvars, const FreeWord& w, const CoeffMode& mode) {
    FreePoly out(nvars, mode);
    out.add_term(w.letters, CoeffElem::one(mode));
    return out;
}

FreePoly FreePoly::generator(std::size_t nvars, int var, const CoeffMode& mode) {
    return word(nvars, FreeWord{{var}}, mode);
}

void FreePoly::add_term(const Word& w, const CoeffElem& c) {
    for (int v : w) {
        if (v < 1 || static_cast<std::size_t>(v) > nvars_) {
            throw AlgebraMismatch("letter " + std::to_string(v) + " out of range");
        }
    }
    if (!(c.mode() == mode_)) throw ModeMismatch("coefficient mode differs from polynomial mode");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FreePoly::check_compatible(const FreePoly& other) const {
    if (nvars_ != other.nvars_) throw AlgebraMismatch("free polynomials over different alphabets");
    if (!(mode_ == other.mode_)) throw ModeMismatch("free polynomials use different modes");
}

FreePoly& FreePoly::operator+=(const FreePoly& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

FreePoly FreePoly::operator-() const { return scaled(CoeffElem::constant(Scalar(-1), mode_)); }

FreePoly FreePoly::scaled(const CoeffElem& c) const {
    FreePoly out(nvars_, mode_);
    for (const auto& [w, d] : terms_) out.add_term(w, c * d);
    return out;
}

FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs) {
    lhs.check_compatible(rhs);
    FreePoly out(lhs.nvars_, lhs.mode_);
    for (const auto& [wl, cl] : lhs.terms_) {
        for (const auto& [wr, cr] : rhs.terms_) {
            FreePoly::Word w = wl;
            w.insert(w.end(), wr.begin(), wr.end());
            out.add_term(w, cl * cr);
        }
    }
    return out;
}

FreePoly to_free(const NCPoly& f) {
    FreePoly out(f.nvars(), f.mode());
    for (const auto& [m, c] : f.terms()) out.add_term(m.letters(), c);
    return out;
}

namespace {

// Rewriting either keeps the letters and removes an inversion, or replaces
// {j, i} by letters <= i. Keys ordered by (letters sorted descending,
// inversions, word) therefore strictly decrease along every rewrite.
using PendingKey = std::tuple<std::vector<int>, int, std::vector<int>>;

PendingKey pending_key(const std::vector<int>& w) {
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    int inversions = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t q = p + 1; q < w.size(); ++q) inversions += w[p] > w[q] ? 1 : 0;
    }
    return {std::move(sorted), inversions, w};
}

void add_pending(std::map<PendingKey, CoeffElem>& pending, const std::vector<int>& w, const CoeffElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(pending_key(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
    }
}

}  // namespace

NCPoly free_reduce(const TowerPresentation& tower, const FreePoly& f, ReductionOrder order) {
    const std::size_t n = tower.size();
    if (f.nvars() != n) throw AlgebraMismatch("word alphabet differs from the tower's");
    if (!(f.mode() == tower.mode())) throw ModeMismatch("free polynomial mode differs from the tower's");

    std::vector<std::vector<std::vector<std::pair<std::vector<int>, CoeffElem>>>> u_words(n + 1);
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        u_words[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(j));
        for (int i = 1; i < j; ++i) {
            const NCPoly& u = tower.u(j, i);
            if (!u.lies_in(j - 1)) {
                throw DomainError("u_" + std::to_string(j) + std::to_string(i) +
                                  " uses a letter >= x_" + std::to_string(j) + "; rewriting may not terminate");
            }
            for (const auto& [m, c] : u.terms()) {
                u_words[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].emplace_back(m.letters(), c);
            }
        }
    }

    std::map<PendingKey, CoeffElem> pending;
    for (const auto& [w, c] : f.terms()) add_pending(pending, w, c);

    NCPoly out(n, tower.mode());
    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        const std::vector<int> w = std::get<2>(top->first);
        const CoeffElem c = top->second;
        pending.erase(top);

        std::ptrdiff_t pos = -1;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                pos = static_cast<std::ptrdiff_t>(p);
                if (order == ReductionOrder::leftmost) break;
            }
        }
        if (pos < 0) {
            out.add_term(Monomial::from_letters(n, w), c);
            continue;
        }
        const auto p = static_cast<std::size_t>(pos);
        const int j = w[p];
        const int i = w[p + 1];

        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        add_pending(pending, swapped, c * tower.a(j, i));

        for (const auto& [letters, uc] : u_words[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
            std::vector<int> replaced(w.begin(), w.begin() + pos);
            replaced.insert(replaced.end(), letters.begin(), letters.end());
            replaced.insert(replaced.end(), w.begin() + pos + 2, w.end());
            add_pending(pending, replaced, c * uc);
        }
    }
    return out;
}

NCPoly free_reduce(const TowerPresentation& tower, const FreeWord& w, ReductionOrder order) {
    return free_reduce(tower, FreePoly::word(tower.size(), w, tower.mode()), order);
}

}  // namespace ore
