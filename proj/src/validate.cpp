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

#include "ore/validate.hpp"

#include <algorithm>
#include <random>

#include "ore/free.hpp"
#include "ore/pbw.hpp"

namespace ore {

namespace {

std::string pair_name(int j, int i) { return "(" + std::to_string(j) + ", " + std::to_string(i) + ")"; }

ValidationReport domain_report(const TowerPresentation& tower, int j) {
    ValidationReport report;
    for (int i = 1; i < j; ++i) {
        const NCPoly& u = tower.u(j, i);
        if (!u.lies_in(i)) {
            report.failures.push_back({FailureKind::domain, {j, i}, u, std::monostate{},
                                       "u" + pair_name(j, i) + " must lie in A_" + std::to_string(i)});
        }
    }
    return report;
}

bool all_u_zero_through(const TowerPresentation& tower, int k) {
    for (int j = 2; j <= k; ++j) {
        for (int i = 1; i < j; ++i) {
            if (!tower.u(j, i).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate_level(const TowerPresentation& tower, int k, bool use_shortcuts) {
    ValidationReport report = domain_report(tower, k);
    for (int i = 1; i < k; ++i) {
        if (tower.a(k, i).is_zero()) {
            report.warnings.push_back("a" + pair_name(k, i) + " = 0: beta_" + std::to_string(k) +
                                      " is not injective");
        }
    }
    if (!report.ok()) return report;

    if (use_shortcuts) {
        if (all_u_zero_through(tower, k)) return report;
        bool unit_a = true;
        for (int i = 1; i < k; ++i) unit_a = unit_a && tower.a(k, i).is_one();
        if (unit_a && tower.is_commutative_through(k - 1)) return report;
    }

    const std::size_t n = tower.size();
    const CoeffMode& mode = tower.mode();
    PbwEngine engine(tower);
    for (int j = 2; j < k; ++j) {
        for (int i = 1; i < j; ++i) {
            const CoeffElem& a_kj = tower.a(k, j);
            const CoeffElem& a_ki = tower.a(k, i);
            const CoeffElem& a_ji = tower.a(j, i);
            const NCPoly& u_ji = tower.u(j, i);
            const NCPoly& u_ki = tower.u(k, i);
            const NCPoly& u_kj = tower.u(k, j);

            const NCPoly endo1_lhs = engine.beta(k, u_ji);
            const NCPoly endo1_rhs = u_ji.scaled(a_kj * a_ki);
            if (!(endo1_lhs == endo1_rhs)) {
                report.failures.push_back({FailureKind::endo1, {k, j, i}, endo1_lhs, endo1_rhs,
                                           "beta_" + std::to_string(k) + "(u" + pair_name(j, i) +
                                               ") != a_kj a_ki u_ji"});
            }

            const NCPoly x_j = NCPoly::generator(n, j, mode);
            const NCPoly x_i = NCPoly::generator(n, i, mode);
            const NCPoly endo2_lhs = engine.multiply(x_j, u_ki).scaled(a_kj) + engine.multiply(u_kj, x_i);
            const NCPoly endo2_rhs = engine.multiply(u_ki, x_j).scaled(a_ji) +
                                     engine.multiply(x_i, u_kj).scaled(a_ki * a_ji) + engine.nu(k, u_ji);
            if (!(endo2_lhs == endo2_rhs)) {
                report.failures.push_back({FailureKind::endo2, {k, j, i}, endo2_lhs, endo2_rhs,
                                           "nu_" + std::to_string(k) + " is incompatible with the relation " +
                                               pair_name(j, i)});
            }
        }
    }
    return report;
}

ValidationReport validate_extension(const TowerPresentation& base, const std::vector<CoeffElem>& a_k,
                                    const std::vector<NCPoly>& u_k) {
    const std::size_t k = base.size() + 1;
    if (a_k.size() != k - 1 || u_k.size() != k - 1) {
        throw AlgebraMismatch("extension data needs " + std::to_string(k - 1) + " entries");
    }
    std::vector<std::string> names = base.names();
    names.push_back("x" + std::to_string(k));
    TowerPresentation candidate(std::move(names), base.mode());
    for (int j = 2; j < static_cast<int>(k); ++j) {
        for (int i = 1; i < j; ++i) candidate.set_relation(j, i, base.a(j, i), base.u(j, i).embedded(k));
    }
    for (std::size_t i = 1; i < k; ++i) {
        if (!u_k[i - 1].lies_in(static_cast<int>(i))) {
            throw DomainError("u" + pair_name(static_cast<int>(k), static_cast<int>(i)) + " must lie in A_" +
                              std::to_string(i));
        }
        candidate.set_relation(static_cast<int>(k), static_cast<int>(i), a_k[i - 1], u_k[i - 1].embedded(k));
    }
    return validate_level(candidate, static_cast<int>(k));
}

ValidationReport validate_tower(const TowerPresentation& tower) {
    for (int k = 2; k <= static_cast<int>(tower.size()); ++k) {
        ValidationReport report = validate_level(tower, k);
        if (!report.ok()) return report;
    }
    return {};
}

TowerPresentation build_tower(TowerPresentation tables) {
    for (int k = 2; k <= static_cast<int>(tables.size()); ++k) {
        ValidationReport report = validate_level(tables, k);
        if (!report.ok()) {
            throw TowerRejected("tower rejected at level " + std::to_string(k), std::move(report));
        }
    }
    tables.validated_ = true;
    return tables;
}

TowerPresentation extend_tower(const TowerPresentation& base, const std::string& name,
                               const std::vector<CoeffElem>& a_k, const std::vector<NCPoly>& u_k) {
    if (!base.validated()) throw NotValidated("extend_tower needs a validated base");
    const std::size_t k = base.size() + 1;
    if (a_k.size() != k - 1 || u_k.size() != k - 1) {
        throw AlgebraMismatch("extension data needs " + std::to_string(k - 1) + " entries");
    }
    std::vector<std::string> names = base.names();
    names.push_back(name);
    TowerPresentation out(std::move(names), base.mode());
    for (int j = 2; j < static_cast<int>(k); ++j) {
        for (int i = 1; i < j; ++i) out.set_relation(j, i, base.a(j, i), base.u(j, i).embedded(k));
    }
    for (std::size_t i = 1; i < k; ++i) {
        out.set_relation(static_cast<int>(k), static_cast<int>(i), a_k[i - 1], u_k[i - 1].embedded(k));
    }
    ValidationReport report = validate_level(out, static_cast<int>(k));
    if (!report.ok()) throw TowerRejected("extension by " + name + " rejected", std::move(report));
    out.validated_ = true;
    return out;
}

ValidationReport check_con1(const TowerPresentation& tower) {
    ValidationReport report;
    const std::size_t n = tower.size();
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const Scalar a1 = eval_at_one(tower.a(j, i));
            if (a1 != 1) {
                report.failures.push_back({FailureKind::con1, {j, i}, NCPoly::constant(tower.a(j, i), n),
                                           std::monostate{}, "a" + pair_name(j, i) + "(1) = " + to_string(a1)});
            }
            bool vanishes = true;
            for (const auto& [m, c] : tower.u(j, i).terms()) vanishes = vanishes && is_zero(eval_at_one(c));
            if (!vanishes) {
                report.failures.push_back({FailureKind::con1, {j, i}, tower.u(j, i), std::monostate{},
                                           "u" + pair_name(j, i) + " does not vanish at t = 1"});
            }
        }
    }
    return report;
}

ValidationReport diamond_check(const TowerPresentation& tower, int max_extra_degree, int trials,
                               std::uint64_t seed) {
    const std::size_t n = tower.size();
    const CoeffMode& mode = tower.mode();
    ValidationReport report;
    for (int j = 2; j <= static_cast<int>(n); ++j) report.append(domain_report(tower, j));
    if (!report.ok()) return report;

    for (int k = 3; k <= static_cast<int>(n); ++k) {
        for (int j = 2; j < k; ++j) {
            for (int i = 1; i < j; ++i) {
                // (x_k x_j) x_i first versus x_k (x_j x_i) first.
                FreePoly route_a = FreePoly::word(n, FreeWord{{j, k, i}}, mode).scaled(tower.a(k, j)) +
                                   to_free(tower.u(k, j)) * FreePoly::generator(n, i, mode);
                FreePoly route_b = FreePoly::word(n, FreeWord{{k, i, j}}, mode).scaled(tower.a(j, i)) +
                                   FreePoly::generator(n, k, mode) * to_free(tower.u(j, i));
                const NCPoly nf_a = free_reduce(tower, route_a);
                const NCPoly nf_b = free_reduce(tower, route_b);
                if (!(nf_a == nf_b)) {
                    report.failures.push_back({FailureKind::diamond, {k, j, i}, nf_a, nf_b,
                                               "overlap x" + std::to_string(k) + " x" + std::to_string(j) + " x" +
                                                   std::to_string(i) + " resolves to two normal forms"});
                }
            }
        }
    }
    if (!report.ok() || n == 0) return report;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
    std::uniform_int_distribution<int> length(0, 3 + std::max(0, max_extra_degree));
    PbwEngine engine(tower);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(length(rng)));
        for (int& v : word) v = letter(rng);
        NCPoly product = NCPoly::constant(CoeffElem::one(mode), n);
        for (int v : word) product = engine.multiply(product, NCPoly::generator(n, v, mode));
        const NCPoly reduced = free_reduce(tower, FreeWord{word});
        if (!(product == reduced)) {
            report.failures.push_back({FailureKind::diamond, word, reduced, product,
                                       "random word: rewriting and PBW multiplication disagree"});
        }
    }
    return report;
}

ValidationReport random_assoc_check(const TowerPresentation& tower, int trials, int max_degree,
                                    std::uint64_t seed) {
    const std::size_t n = tower.size();
    const CoeffMode& mode = tower.mode();
    ValidationReport report;
    if (n == 0) return report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
    std::uniform_int_distribution<int> degree(0, std::max(0, max_degree));
    auto random_letters = [&]() {
        std::vector<int> w(static_cast<std::size_t>(degree(rng)));
        for (int& v : w) v = letter(rng);
        std::sort(w.begin(), w.end());
        return w;
    };
    PbwEngine engine(tower);
    for (int trial = 0; trial < trials; ++trial) {
        const std::vector<int> left = random_letters();
        const std::vector<int> right = random_letters();
        const NCPoly product = engine.multiply(NCPoly::term(Monomial::from_letters(n, left), CoeffElem::one(mode)),
                                               NCPoly::term(Monomial::from_letters(n, right), CoeffElem::one(mode)));
        std::vector<int> word = left;
        word.insert(word.end(), right.begin(), right.end());
        const NCPoly reduced = free_reduce(tower, FreeWord{word});
        if (!(product == reduced)) {
            report.failures.push_back({FailureKind::diamond, word, reduced, product,
                                       "monomial product disagrees with rewriting"});
        }
    }
    return report;
}

}  // namespace ore
