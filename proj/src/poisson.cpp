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

#include "ore/poisson.hpp"

#include <random>

#include "ore/errors.hpp"

namespace ore {

PoissonPresentation::PoissonPresentation(std::vector<std::string> names) : names_(std::move(names)) {
    const std::size_t n = names_.size();
    c_.resize(n);
    p_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        c_[j].assign(j, Scalar(0));
        p_[j].assign(j, CommPoly(n));
    }
}

int PoissonPresentation::index_of(std::string_view name) const {
    for (std::size_t v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) return static_cast<int>(v + 1);
    }
    return 0;
}

void PoissonPresentation::check_pair(int j, int i) const {
    if (i < 1 || i >= j || j > static_cast<int>(size())) {
        throw AlgebraMismatch("bracket index (" + std::to_string(j) + ", " + std::to_string(i) +
                              ") needs 1 <= i < j <= " + std::to_string(size()));
    }
}

const Scalar& PoissonPresentation::c(int j, int i) const {
    check_pair(j, i);
    return c_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

const CommPoly& PoissonPresentation::p(int j, int i) const {
    check_pair(j, i);
    return p_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

void PoissonPresentation::set_bracket(int j, int i, const Scalar& c, CommPoly p) {
    check_pair(j, i);
    if (p.nvars() != size()) throw AlgebraMismatch("p_ji must live in the presentation's ring");
    if (!p.lies_in(i)) {
        throw DomainError("p(" + std::to_string(j) + ", " + std::to_string(i) + ") must lie in B_" +
                          std::to_string(i));
    }
    c_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = c;
    p_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = std::move(p);
}

CommPoly PoissonPresentation::generator_bracket(int j, int i) const {
    if (j == i) return CommPoly(size());
    if (j < i) return -generator_bracket(i, j);
    const std::size_t n = size();
    Monomial m(n);
    m.exps[static_cast<std::size_t>(i - 1)] = 1;
    m.exps[static_cast<std::size_t>(j - 1)] = 1;
    return CommPoly::term(m, c(j, i)) + p(j, i);
}

CommPoly pbracket(const PoissonPresentation& P, const CommPoly& f, const CommPoly& g) {
    const std::size_t n = P.size();
    if (f.nvars() != n || g.nvars() != n) throw AlgebraMismatch("bracket arguments have the wrong arity");
    std::vector<CommPoly> df, dg;
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        df.push_back(f.derivative(v));
        dg.push_back(g.derivative(v));
    }
    CommPoly out(n);
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const auto jj = static_cast<std::size_t>(j - 1), ii = static_cast<std::size_t>(i - 1);
            CommPoly minor = df[jj] * dg[ii] - df[ii] * dg[jj];
            if (minor.is_zero()) continue;
            out += P.generator_bracket(j, i) * minor;
        }
    }
    return out;
}

namespace {

CommPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int upto_var, int max_degree) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> var(1, upto_var);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    CommPoly out(nvars);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        const int d = degree(rng);
        for (int k = 0; k < d; ++k) ++m.exps[static_cast<std::size_t>(var(rng) - 1)];
        out.add_term(m, Scalar(coeff(rng)));
    }
    return out;
}

CommPoly jacobiator(const PoissonPresentation& P, const CommPoly& a, const CommPoly& b, const CommPoly& c) {
    return pbracket(P, pbracket(P, a, b), c) + pbracket(P, pbracket(P, b, c), a) +
           pbracket(P, pbracket(P, c, a), b);
}

CommPoly apply_alpha(const PoissonPresentation& P, int k, const CommPoly& f) {
    CommPoly out(P.size());
    for (int i = 1; i < k; ++i) {
        if (is_zero(P.c(k, i))) continue;
        out += (CommPoly::variable(P.size(), i) * f.derivative(i)).scaled(P.c(k, i));
    }
    return out;
}

CommPoly apply_delta(const PoissonPresentation& P, int k, const CommPoly& f) {
    CommPoly out(P.size());
    for (int i = 1; i < k; ++i) {
        if (P.p(k, i).is_zero()) continue;
        out += P.p(k, i) * f.derivative(i);
    }
    return out;
}

void check_skew_pair(const PoissonPresentation& P, int k, const CommPoly& a, const CommPoly& b,
                     const std::vector<int>& indices, const std::string& what, ValidationReport& report) {
    const CommPoly ab = pbracket(P, a, b);
    const CommPoly alpha_a = apply_alpha(P, k, a), alpha_b = apply_alpha(P, k, b);
    const CommPoly delta_a = apply_delta(P, k, a), delta_b = apply_delta(P, k, b);

    const CommPoly pd_lhs = apply_alpha(P, k, ab);
    const CommPoly pd_rhs = pbracket(P, alpha_a, b) + pbracket(P, a, alpha_b);
    if (!(pd_lhs == pd_rhs)) {
        report.failures.push_back({FailureKind::poisson_derivation, indices, pd_lhs, pd_rhs,
                                   "alpha_" + std::to_string(k) + " is not a Poisson derivation on " + what});
    }
    const CommPoly sk_lhs = apply_delta(P, k, ab) - pbracket(P, delta_a, b) - pbracket(P, a, delta_b);
    const CommPoly sk_rhs = alpha_a * delta_b - delta_a * alpha_b;
    if (!(sk_lhs == sk_rhs)) {
        report.failures.push_back({FailureKind::skew, indices, sk_lhs, sk_rhs,
                                   "skew condition fails for level " + std::to_string(k) + " on " + what});
    }
}

}  // namespace

ValidationReport jacobi_check(const PoissonPresentation& P, int random_trials, std::uint64_t seed) {
    ValidationReport report;
    const std::size_t n = P.size();
    for (int i = 1; i <= static_cast<int>(n); ++i) {
        for (int j = i + 1; j <= static_cast<int>(n); ++j) {
            for (int k = j + 1; k <= static_cast<int>(n); ++k) {
                const CommPoly jac = jacobiator(P, CommPoly::variable(n, i), CommPoly::variable(n, j),
                                                CommPoly::variable(n, k));
                if (!jac.is_zero()) {
                    report.failures.push_back({FailureKind::jacobi, {i, j, k}, jac, CommPoly(n),
                                               "Jacobi identity fails on generators"});
                }
            }
        }
    }
    if (!report.ok() || n == 0) return report;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < random_trials; ++trial) {
        const CommPoly a = random_poly(rng, n, static_cast<int>(n), 2);
        const CommPoly b = random_poly(rng, n, static_cast<int>(n), 2);
        const CommPoly c = random_poly(rng, n, static_cast<int>(n), 2);
        const CommPoly jac = jacobiator(P, a, b, c);
        if (!jac.is_zero()) {
            report.failures.push_back({FailureKind::jacobi, {}, jac, CommPoly(n),
                                       "Jacobi identity fails on random trial " + std::to_string(trial)});
        }
    }
    return report;
}

ValidationReport skew_check(const PoissonPresentation& P, int k, int random_trials, std::uint64_t seed) {
    const std::size_t n = P.size();
    if (k < 2 || k > static_cast<int>(n)) throw AlgebraMismatch("skew_check level out of range");
    ValidationReport report;
    for (int j = 2; j < k; ++j) {
        for (int i = 1; i < j; ++i) {
            check_skew_pair(P, k, CommPoly::variable(n, i), CommPoly::variable(n, j), {k, j, i},
                            "(x" + std::to_string(i) + ", x" + std::to_string(j) + ")", report);
        }
    }
    if (!report.ok() || k < 3) return report;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
    for (int trial = 0; trial < random_trials; ++trial) {
        const CommPoly a = random_poly(rng, n, k - 1, 2);
        const CommPoly b = random_poly(rng, n, k - 1, 2);
        check_skew_pair(P, k, a, b, {k}, "random trial " + std::to_string(trial), report);
    }
    return report;
}

CommPoly bracket_from_potential(const CommPoly& h, const CommPoly& f, const CommPoly& g) {
    if (h.nvars() != 3 || f.nvars() != 3 || g.nvars() != 3) {
        throw AlgebraMismatch("potential brackets live in three variables");
    }
    if (h.degree() > 3) throw DegreeTooHigh("potential must have degree <= 3");
    CommPoly rows[3][3];
    for (int v = 1; v <= 3; ++v) {
        rows[0][v - 1] = h.derivative(v);
        rows[1][v - 1] = f.derivative(v);
        rows[2][v - 1] = g.derivative(v);
    }
    return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
           rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
           rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
}

PotentialClassification classify_potential(const CommPoly& h, const std::vector<std::string>& names) {
    if (h.nvars() != 3) throw AlgebraMismatch("potential must have three variables");
    if (h.degree() > 3) throw DegreeTooHigh("potential must have degree <= 3");
    if (names.size() != 3) throw AlgebraMismatch("potential needs three variable names");

    PotentialClassification out;
    out.f1 = CommPoly(3);
    out.f2 = CommPoly(3);
    const CommPoly x1 = CommPoly::variable(3, 1), x2 = CommPoly::variable(3, 2), x3 = CommPoly::variable(3, 3);
    const CommPoly b21 = bracket_from_potential(h, x2, x1);
    const CommPoly b31 = bracket_from_potential(h, x3, x1);
    const CommPoly b32 = bracket_from_potential(h, x3, x2);

    // Each bracket must be c * x_i x_j + p with p in B_i.
    auto split = [](const CommPoly& b, int j, int i, Scalar& c, CommPoly& p) {
        Monomial m(3);
        m.exps[static_cast<std::size_t>(i - 1)] = 1;
        m.exps[static_cast<std::size_t>(j - 1)] = 1;
        c = b.coefficient(m);
        p = b - CommPoly::term(m, c);
        return p.lies_in(i);
    };
    Scalar c21, c31, c32;
    CommPoly p21, p31, p32;
    if (!split(b21, 2, 1, c21, p21) || !split(b31, 3, 1, c31, p31) || !split(b32, 3, 2, c32, p32)) return out;

    Scalar lambda, mu;
    CommPoly f1(3), f2(3);
    for (const auto& [m, c] : h.terms()) {
        const int e1 = m.exps[0], e2 = m.exps[1], e3 = m.exps[2];
        if (e1 == 1 && e2 == 1 && e3 == 1) {
            lambda = c;
        } else if (e1 == 0 && e2 == 0 && e3 == 1) {
            mu = c;
        } else if (e2 == 1 && e3 == 0) {
            f1.add_term(m.with_exponent(2, 0), c);
        } else if (e2 == 0 && e3 == 0 && e1 > 0) {
            f2.add_term(m, c);
        } else if (!m.is_unit()) {
            throw Error("internal: bracket shape accepted a potential outside the normal form");
        }
    }
    out.matches = true;
    out.lambda = lambda;
    out.mu = mu;
    out.f1 = f1;
    out.f2 = f2;
    PoissonPresentation P(names);
    P.set_bracket(2, 1, c21, p21);
    P.set_bracket(3, 1, c31, p31);
    P.set_bracket(3, 2, c32, p32);
    out.presentation = std::move(P);
    return out;
}

PoissonTowerStructure poisson_to_tower_structure(const PoissonPresentation& P) {
    PoissonTowerStructure out;
    const std::size_t n = P.size();
    for (int k = 2; k <= static_cast<int>(n); ++k) {
        PoissonLevel level;
        level.k = k;
        for (int i = 1; i < k; ++i) {
            level.alpha.push_back(P.c(k, i));
            level.delta.push_back(P.p(k, i));
        }
        out.levels.push_back(std::move(level));
    }
    out.report = jacobi_check(P);
    for (int k = 2; k <= static_cast<int>(n); ++k) out.report.append(skew_check(P, k));
    return out;
}

}  // namespace ore
