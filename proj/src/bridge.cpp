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

#include "ore/bridge.hpp"

#include <cctype>
#include <random>

#include "ore/errors.hpp"
#include "ore/format.hpp"
#include "ore/pbw.hpp"
#include "ore/validate.hpp"

namespace ore {

PoissonPresentation semiclassical_limit(const TowerPresentation& tower) {
    if (!tower.validated()) throw NotValidated("semiclassical limit needs a validated tower");
    ValidationReport con1 = check_con1(tower);
    if (!con1.ok()) throw Con1Violation("tower does not reduce to a commutative algebra at t = 1", std::move(con1));

    const std::size_t n = tower.size();
    PoissonPresentation P(tower.names());
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            CommPoly p(n);
            for (const auto& [m, c] : tower.u(j, i).terms()) p.add_term(m, derivative_at_one(c));
            P.set_bracket(j, i, derivative_at_one(tower.a(j, i)), std::move(p));
        }
    }
    return P;
}

CommPoly limit_element(const TowerPresentation& tower, const NCPoly& f) {
    if (f.nvars() != tower.size()) throw AlgebraMismatch("element does not belong to the tower");
    CommPoly out(f.nvars());
    for (const auto& [m, c] : f.terms()) out.add_term(m, eval_at_one(c));
    return out;
}

ValidationReport limit_bracket_compat(const TowerPresentation& tower, int random_trials, int max_degree,
                                      std::uint64_t seed) {
    const PoissonPresentation P = semiclassical_limit(tower);
    const std::size_t n = tower.size();
    const CoeffMode& mode = tower.mode();
    ValidationReport report;
    auto compare = [&](const NCPoly& f, const NCPoly& g, std::vector<int> indices, const std::string& what) {
        const CommPoly lhs = limit_element(tower, scaled_commutator(tower, f, g));
        const CommPoly rhs = pbracket(P, limit_element(tower, f), limit_element(tower, g));
        if (!(lhs == rhs)) {
            report.failures.push_back({FailureKind::compat, std::move(indices), lhs, rhs,
                                       "scaled commutator and limit bracket disagree on " + what});
        }
    };
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            compare(NCPoly::generator(n, j, mode), NCPoly::generator(n, i, mode), {j, i},
                    "(x" + std::to_string(j) + ", x" + std::to_string(i) + ")");
        }
    }
    if (n == 0) return report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
    std::uniform_int_distribution<int> degree(0, std::max(0, max_degree));
    auto random_monomial = [&]() {
        Monomial m(n);
        const int d = degree(rng);
        for (int k = 0; k < d; ++k) ++m.exps[static_cast<std::size_t>(letter(rng) - 1)];
        return NCPoly::term(m, CoeffElem::one(mode));
    };
    for (int trial = 0; trial < random_trials; ++trial) {
        const NCPoly f = random_monomial();
        const NCPoly g = random_monomial();
        compare(f, g, {}, "random monomial pair " + std::to_string(trial));
    }
    return report;
}

LiftStrategy LiftStrategy::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    LiftStrategy out;
    const std::size_t plus = s.find('+');
    const std::string a = s.substr(0, plus);
    const std::string u = plus == std::string::npos ? "" : s.substr(plus + 1);
    if (a == "power") {
        out.a_rule = ARule::power;
    } else if (a == "affine") {
        out.a_rule = ARule::affine;
    } else if (a == "exp") {
        out.a_rule = ARule::exp;
    } else if (a == "auto" || a.empty()) {
        out.a_rule = ARule::automatic;
    } else {
        throw InvalidStrategy("unknown a-rule '" + a + "' (expected power, affine, exp or auto)");
    }
    if (u.empty() || u == "linear") {
        out.u_rule = URule::linear;
    } else if (u.rfind("shifted(", 0) == 0 && u.back() == ')') {
        out.u_rule = URule::shifted;
        const std::string digits = u.substr(8, u.size() - 9);
        try {
            std::size_t used = 0;
            out.shift = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
        } catch (const std::exception&) {
            throw InvalidStrategy("shifted(N) needs an integer N, got '" + digits + "'");
        }
    } else {
        throw InvalidStrategy("unknown u-rule '" + u + "' (expected linear or shifted(N))");
    }
    return out;
}

std::string LiftStrategy::to_string() const {
    std::string a;
    switch (a_rule) {
        case ARule::automatic: a = "auto"; break;
        case ARule::power: a = "power"; break;
        case ARule::affine: a = "affine"; break;
        case ARule::exp: a = "exp"; break;
    }
    return a + "+" + (u_rule == URule::linear ? std::string("linear") : "shifted(" + std::to_string(shift) + ")");
}

TowerPresentation quantize(const PoissonPresentation& P, const LiftStrategy& strategy) {
    const std::size_t n = P.size();
    {
        ValidationReport jacobi = jacobi_check(P);
        if (!jacobi.ok()) throw LiftValidationFailure("Poisson presentation violates the Jacobi identity", jacobi);
    }

    CoeffMode mode = strategy.mode.value_or(strategy.a_rule == LiftStrategy::ARule::exp
                                                ? CoeffMode::series(kDefaultSeriesPrecision)
                                                : CoeffMode::laurent());
    bool all_integer = true;
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) all_integer = all_integer && is_integer(P.c(j, i));
    }
    LiftStrategy::ARule rule = strategy.a_rule;
    if (rule == LiftStrategy::ARule::automatic) {
        rule = all_integer ? LiftStrategy::ARule::power
                           : (mode.is_series() ? LiftStrategy::ARule::exp : LiftStrategy::ARule::affine);
    }
    if (rule == LiftStrategy::ARule::exp && !mode.is_series()) {
        throw InvalidStrategy("the exp rule needs series coefficients");
    }
    if (rule == LiftStrategy::ARule::power && !all_integer) {
        throw InvalidStrategy("the power rule needs every c_ji to be an integer");
    }

    const CoeffElem s = CoeffElem::t_minus_one(mode);
    const CoeffElem u_factor = strategy.u_rule == LiftStrategy::URule::shifted
                                   ? s * CoeffElem::t_power(strategy.shift, mode)
                                   : s;
    TowerPresentation tables(P.names(), mode);
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const Scalar& c = P.c(j, i);
            CoeffElem a;
            switch (rule) {
                case LiftStrategy::ARule::power: a = CoeffElem::t_power(static_cast<int>(c.get_num().get_si()), mode); break;
                case LiftStrategy::ARule::affine: a = CoeffElem::one(mode) + s.scaled(c); break;
                case LiftStrategy::ARule::exp: a = named_series(SeriesName::exp, c, mode.prec); break;
                case LiftStrategy::ARule::automatic: break;
            }
            NCPoly u(n, mode);
            for (const auto& [m, pc] : P.p(j, i).terms()) u.add_term(m, u_factor.scaled(pc));
            tables.set_relation(j, i, a, u);
        }
    }
    for (const LiftOverride& o : strategy.overrides) {
        if (!(o.a.mode() == mode)) throw InvalidStrategy("override coefficients use a different mode");
        tables.set_relation(o.j, o.i, o.a, o.u.embedded(n));
    }

    TowerPresentation tower;
    try {
        tower = build_tower(std::move(tables));
    } catch (const TowerRejected& e) {
        throw LiftValidationFailure("lift rejected: " + std::string(e.what()), e.report());
    }

    ValidationReport mder;
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const CoeffElem& a = tower.a(j, i);
            if (eval_at_one(a) != 1 || derivative_at_one(a) != P.c(j, i)) {
                mder.failures.push_back({FailureKind::mder, {j, i}, NCPoly::constant(a, n), std::monostate{},
                                         "a_ji must be 1 at t = 1 with derivative " + ore::to_string(P.c(j, i))});
            }
            CommPoly value(n), slope(n);
            for (const auto& [m, c] : tower.u(j, i).terms()) {
                value.add_term(m, eval_at_one(c));
                slope.add_term(m, derivative_at_one(c));
            }
            if (!value.is_zero() || !(slope == P.p(j, i))) {
                mder.failures.push_back({FailureKind::mder, {j, i}, slope, P.p(j, i),
                                         "u_ji must vanish at t = 1 with derivative p_ji"});
            }
        }
    }
    if (!mder.ok()) throw LiftValidationFailure("lift does not reproduce the Poisson data", std::move(mder));
    return tower;
}

const DeformedRelation& DeformedPresentation::relation(int j, int i) const {
    for (const DeformedRelation& r : relations) {
        if (r.j == j && r.i == i) return r;
    }
    throw AlgebraMismatch("no relation for pair (" + std::to_string(j) + ", " + std::to_string(i) + ")");
}

DeformedPresentation deform(const TowerPresentation& tower, const Scalar& q) {
    if (!tower.validated()) throw NotValidated("deform needs a validated tower");
    if (tower.mode().is_series()) throw SeriesNotEvaluable("series coefficients cannot be evaluated at t = q");
    const std::size_t n = tower.size();
    DeformedPresentation out;
    out.names = tower.names();
    out.q = q;
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            CommPoly u(n);
            for (const auto& [m, c] : tower.u(j, i).terms()) u.add_term(m, eval_at(c, q));
            out.relations.push_back({j, i, eval_at(tower.a(j, i), q), std::move(u)});
        }
    }
    return out;
}

std::string format_relation(const DeformedPresentation& D, const DeformedRelation& r) {
    const std::string& xj = D.names[static_cast<std::size_t>(r.j - 1)];
    const std::string& xi = D.names[static_cast<std::size_t>(r.i - 1)];
    std::string out = xj + "*" + xi;
    if (!is_zero(r.a)) {
        const Scalar mag = abs(r.a);
        out += sgn(r.a) > 0 ? " - " : " + ";
        if (mag != 1) out += is_integer(mag) ? to_string(mag) + "*" : "(" + to_string(mag) + ")*";
        out += xi + "*" + xj;
    }
    return out + " = " + format_commpoly(r.u, D.names);
}

}  // namespace ore
