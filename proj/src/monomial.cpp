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

#include "ore/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "ore/errors.hpp"

namespace ore {

Monomial Monomial::generator(std::size_t nvars, int var) {
    Monomial m(nvars);
    if (var < 1 || static_cast<std::size_t>(var) > nvars) {
        throw AlgebraMismatch("variable index " + std::to_string(var) + " out of range");
    }
    m.exps[static_cast<std::size_t>(var - 1)] = 1;
    return m;
}

Monomial Monomial::from_letters(std::size_t nvars, const std::vector<int>& letters) {
    Monomial m(nvars);
    for (int v : letters) {
        if (v < 1 || static_cast<std::size_t>(v) > nvars) {
            throw AlgebraMismatch("variable index " + std::to_string(v) + " out of range");
        }
        ++m.exps[static_cast<std::size_t>(v - 1)];
    }
    return m;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

int Monomial::top_variable() const {
    for (std::size_t v = exps.size(); v > 0; --v) {
        if (exps[v - 1] != 0) return static_cast<int>(v);
    }
    return 0;
}

bool Monomial::lies_in(int level) const { return top_variable() <= level; }

std::vector<int> Monomial::letters() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        out.insert(out.end(), static_cast<std::size_t>(exps[v]), static_cast<int>(v + 1));
    }
    return out;
}

Monomial Monomial::without(int var) const { return with_exponent(var, 0); }

Monomial Monomial::with_exponent(int var, int e) const {
    Monomial m = *this;
    m.exps[static_cast<std::size_t>(var - 1)] = e;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw AlgebraMismatch("monomials over different variable counts");
    Monomial m = a;
    for (std::size_t v = 0; v < m.exps.size(); ++v) m.exps[v] += b.exps[v];
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const std::size_t n = std::max(a.exps.size(), b.exps.size());
    for (std::size_t v = n; v > 0; --v) {
        const int ea = v <= a.exps.size() ? a.exps[v - 1] : 0;
        const int eb = v <= b.exps.size() ? b.exps[v - 1] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

}  // namespace ore
