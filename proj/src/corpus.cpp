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

#include "ore/corpus.hpp"

#include <algorithm>

#include "ore/errors.hpp"
#include "ore/validate.hpp"

namespace ore {

namespace {

const CoeffMode kLaurent = CoeffMode::laurent();

CoeffElem tp(int k) { return CoeffElem::t_power(k, kLaurent); }
CoeffElem cst(long num, long den = 1) { return CoeffElem::constant(make_scalar(num, den), kLaurent); }
CoeffElem s_laurent() { return CoeffElem::t_minus_one(kLaurent); }

NCPoly var(std::size_t n, int v, const CoeffElem& c) { return NCPoly::term(Monomial::generator(n, v), c); }
NCPoly konst(std::size_t n, const CoeffElem& c) { return NCPoly::constant(c, n); }

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
    return names;
}

Scalar lambda_at(const CorpusParams& p, std::size_t idx) {
    return idx < p.lambda.size() ? p.lambda[idx] : Scalar(1);
}

int shift_at(const CorpusParams& p, std::size_t idx) {
    const int N = idx < p.shift.size() ? p.shift[idx] : 0;
    if (N < 0) throw AlgebraMismatch("shifts N in f = (t - 1) t^N must be nonnegative");
    return N;
}

CoeffElem f_lm(const CorpusParams& p, std::size_t idx) { return s_laurent() * tp(shift_at(p, idx)); }

void require_range(bool ok, const std::string& message) {
    if (!ok) throw AlgebraMismatch(message);
}

int torus_lambda(const CorpusParams& p) {
    const Scalar l = lambda_at(p, 0);
    require_range(is_integer(l), "torus needs an integer lambda");
    return static_cast<int>(l.get_num().get_si());
}

TowerPresentation weyl_tables(int k) {
    require_range(k >= 1 && k <= 8, "weyl needs 1 <= k <= 8");
    const std::size_t n = static_cast<std::size_t>(2 * k);
    TowerPresentation T(numbered(n), kLaurent);
    for (int l = 1; l <= k; ++l) T.set_relation(2 * l, 2 * l - 1, cst(1), konst(n, s_laurent()));
    return T;
}

TowerPresentation trigweyl_tables(int k, int prec) {
    require_range(k >= 1 && k <= 8, "trigweyl needs 1 <= k <= 8");
    require_range(prec >= 2, "trigweyl needs prec >= 2");
    const std::size_t n = static_cast<std::size_t>(2 * k);
    const CoeffMode mode = CoeffMode::series(prec);
    const CoeffElem cos_s = named_series(SeriesName::cos, Scalar(1), prec);
    const CoeffElem sec_s = named_series(SeriesName::sec, Scalar(1), prec);
    const CoeffElem sin_s = named_series(SeriesName::sin, Scalar(1), prec);
    TowerPresentation T(numbered(n), mode);
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const bool weyl_pair = j % 2 == 0 && i == j - 1;
            T.set_relation(j, i, (i + j) % 2 == 1 ? cos_s : sec_s,
                           weyl_pair ? NCPoly::constant(sin_s, n) : NCPoly(n, mode));
        }
    }
    return T;
}

TowerPresentation uqsl2_tables() {
    const std::size_t n = 4;
    TowerPresentation T({"H", "K", "E", "F"}, kLaurent);
    T.set_relation(3, 1, tp(2), NCPoly(n, kLaurent));
    T.set_relation(3, 2, tp(-2), NCPoly(n, kLaurent));
    T.set_relation(4, 1, tp(-2), NCPoly(n, kLaurent));
    T.set_relation(4, 2, tp(2), NCPoly(n, kLaurent));
    const CoeffElem quarter = (tp(1) - tp(-1)).scaled(make_scalar(1, 4));
    T.set_relation(4, 3, cst(1), var(n, 1, quarter) - var(n, 2, quarter));
    return T;
}

TowerPresentation uqsl2_s3_tables() {
    const std::size_t n = 3;
    TowerPresentation T(numbered(n), kLaurent);
    T.set_relation(2, 1, tp(2), konst(n, -(tp(2) - cst(1))));
    T.set_relation(3, 1, tp(-2), konst(n, cst(1) - tp(-2)));
    T.set_relation(3, 2, tp(2), konst(n, -(tp(2) - cst(1))));
    return T;
}

TowerPresentation qplane_tables(int n) {
    require_range(n >= 1 && n <= 12, "qplane needs 1 <= n <= 12");
    TowerPresentation T(numbered(static_cast<std::size_t>(n)), kLaurent);
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) T.set_relation(j, i, tp(1), NCPoly(static_cast<std::size_t>(n), kLaurent));
    }
    return T;
}

TowerPresentation qmat2_tables() {
    const std::size_t n = 4;
    TowerPresentation T({"y", "z", "x", "w"}, kLaurent);
    T.set_relation(3, 1, tp(1), NCPoly(n, kLaurent));
    T.set_relation(3, 2, tp(1), NCPoly(n, kLaurent));
    T.set_relation(4, 1, tp(-1), NCPoly(n, kLaurent));
    T.set_relation(4, 2, tp(-1), NCPoly(n, kLaurent));
    Monomial yz(n);
    yz.exps = {1, 1, 0, 0};
    T.set_relation(4, 3, cst(1), NCPoly::term(yz, -(tp(1) - tp(-1))));
    return T;
}

TowerPresentation lwz32_tables(const CorpusParams& p) {
    const std::size_t n = 3;
    TowerPresentation T(numbered(n), kLaurent);
    const Scalar l11 = lambda_at(p, 0), l21 = lambda_at(p, 1), l22 = lambda_at(p, 2);
    T.set_relation(3, 1, cst(1), var(n, 1, f_lm(p, 0).scaled(l11)));
    T.set_relation(3, 2, cst(1), var(n, 1, f_lm(p, 1).scaled(l21)) + var(n, 2, f_lm(p, 2).scaled(l22)));
    return T;
}

TowerPresentation lwz33_tables(const CorpusParams& p) {
    const std::size_t n = 4;
    TowerPresentation T(numbered(n), kLaurent);
    const Scalar l11 = lambda_at(p, 0), l21 = lambda_at(p, 1), l22 = lambda_at(p, 2);
    const Scalar l31 = lambda_at(p, 3), l32 = lambda_at(p, 4);
    T.set_relation(4, 1, cst(1), var(n, 1, f_lm(p, 0).scaled(l11)));
    T.set_relation(4, 2, cst(1), var(n, 1, f_lm(p, 1).scaled(l21)) + var(n, 2, f_lm(p, 2).scaled(l22)));
    T.set_relation(4, 3, cst(1),
                   var(n, 1, f_lm(p, 3).scaled(l31)) + var(n, 2, f_lm(p, 4).scaled(l32)) +
                       var(n, 3, f_lm(p, 0).scaled(l11) + f_lm(p, 2).scaled(l22)));
    return T;
}

TowerPresentation torus_tables(const CorpusParams& p) {
    const int l = torus_lambda(p);
    TowerPresentation T({"g", "h", "x"}, kLaurent);
    T.set_relation(3, 1, tp(l), NCPoly(3, kLaurent));
    T.set_relation(3, 2, tp(-l), NCPoly(3, kLaurent));
    return T;
}

TowerPresentation tower_tables(std::string_view name, const CorpusParams& p) {
    if (name == "weyl") return weyl_tables(p.k);
    if (name == "trigweyl") return trigweyl_tables(p.k, p.prec);
    if (name == "uqsl2") return uqsl2_tables();
    if (name == "uqsl2_s3") return uqsl2_s3_tables();
    if (name == "qplane") return qplane_tables(p.n);
    if (name == "qmat2") return qmat2_tables();
    if (name == "lwz32") return lwz32_tables(p);
    if (name == "lwz33") return lwz33_tables(p);
    if (name == "torus") return torus_tables(p);
    throw UnknownCorpusEntry("unknown tower corpus entry '" + std::string(name) + "'");
}

CommPoly cvar(std::size_t n, int v) { return CommPoly::variable(n, v); }

PoissonPresentation poisson_tables(std::string_view name, const CorpusParams& p) {
    if (name == "pweyl") {
        require_range(p.k >= 1 && p.k <= 8, "pweyl needs 1 <= k <= 8");
        const std::size_t n = static_cast<std::size_t>(2 * p.k);
        PoissonPresentation P(numbered(n));
        for (int l = 1; l <= p.k; ++l) P.set_bracket(2 * l, 2 * l - 1, Scalar(0), CommPoly::constant(Scalar(1), n));
        return P;
    }
    if (name == "psl2") {
        PoissonPresentation P({"H", "K", "E", "F"});
        P.set_bracket(3, 1, Scalar(2), CommPoly(4));
        P.set_bracket(3, 2, Scalar(-2), CommPoly(4));
        P.set_bracket(4, 1, Scalar(-2), CommPoly(4));
        P.set_bracket(4, 2, Scalar(2), CommPoly(4));
        P.set_bracket(4, 3, Scalar(0), (cvar(4, 1) - cvar(4, 2)).scaled(make_scalar(1, 2)));
        return P;
    }
    if (name == "pmmo") return *classify_potential(corpus_potential("potential_mmo")).presentation;
    if (name == "pplane") {
        require_range(p.n >= 1 && p.n <= 12, "pplane needs 1 <= n <= 12");
        const std::size_t n = static_cast<std::size_t>(p.n);
        PoissonPresentation P(numbered(n));
        for (int j = 2; j <= p.n; ++j) {
            for (int i = 1; i < j; ++i) P.set_bracket(j, i, Scalar(1), CommPoly(n));
        }
        return P;
    }
    if (name == "pmat2") {
        PoissonPresentation P({"y", "z", "x", "w"});
        P.set_bracket(3, 1, Scalar(1), CommPoly(4));
        P.set_bracket(3, 2, Scalar(1), CommPoly(4));
        P.set_bracket(4, 1, Scalar(-1), CommPoly(4));
        P.set_bracket(4, 2, Scalar(-1), CommPoly(4));
        P.set_bracket(4, 3, Scalar(0), (cvar(4, 1) * cvar(4, 2)).scaled(Scalar(-2)));
        return P;
    }
    if (name == "plwz32") {
        PoissonPresentation P(numbered(3));
        P.set_bracket(3, 1, Scalar(0), cvar(3, 1).scaled(lambda_at(p, 0)));
        P.set_bracket(3, 2, Scalar(0), cvar(3, 1).scaled(lambda_at(p, 1)) + cvar(3, 2).scaled(lambda_at(p, 2)));
        return P;
    }
    if (name == "plwz33") {
        PoissonPresentation P(numbered(4));
        const Scalar l11 = lambda_at(p, 0), l22 = lambda_at(p, 2);
        P.set_bracket(4, 1, Scalar(0), cvar(4, 1).scaled(l11));
        P.set_bracket(4, 2, Scalar(0), cvar(4, 1).scaled(lambda_at(p, 1)) + cvar(4, 2).scaled(l22));
        P.set_bracket(4, 3, Scalar(0),
                      cvar(4, 1).scaled(lambda_at(p, 3)) + cvar(4, 2).scaled(lambda_at(p, 4)) +
                          cvar(4, 3).scaled(l11 + l22));
        return P;
    }
    if (name == "ptorus") {
        const int l = torus_lambda(p);
        PoissonPresentation P({"g", "h", "x"});
        P.set_bracket(3, 1, Scalar(l), CommPoly(3));
        P.set_bracket(3, 2, Scalar(-l), CommPoly(3));
        return P;
    }
    throw UnknownCorpusEntry("unknown Poisson corpus entry '" + std::string(name) + "'");
}

}  // namespace

std::string companion_tower_name(std::string_view poisson_name) {
    if (poisson_name == "pweyl") return "weyl";
    if (poisson_name == "psl2") return "uqsl2";
    if (poisson_name == "pmmo") return "uqsl2_s3";
    if (poisson_name == "pplane") return "qplane";
    if (poisson_name == "pmat2") return "qmat2";
    if (poisson_name == "plwz32") return "lwz32";
    if (poisson_name == "plwz33") return "lwz33";
    if (poisson_name == "ptorus") return "torus";
    throw UnknownCorpusEntry("unknown Poisson corpus entry '" + std::string(poisson_name) + "'");
}

std::vector<std::string> corpus_tower_names() {
    return {"weyl", "trigweyl", "uqsl2", "uqsl2_s3", "qplane", "qmat2", "lwz32", "lwz33", "torus"};
}

std::vector<std::string> corpus_poisson_names() {
    return {"pweyl", "psl2", "pmmo", "pplane", "pmat2", "plwz32", "plwz33", "ptorus"};
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out = corpus_tower_names();
    for (const std::string& name : corpus_poisson_names()) out.push_back(name);
    out.push_back("potential_mmo");
    return out;
}

TowerPresentation corpus_tower(std::string_view name, const CorpusParams& params) {
    return build_tower(tower_tables(name, params));
}

PoissonPresentation corpus_poisson(std::string_view name, const CorpusParams& params) {
    return poisson_tables(name, params);
}

CommPoly corpus_potential(std::string_view name) {
    if (name != "potential_mmo") {
        throw UnknownCorpusEntry("unknown potential corpus entry '" + std::string(name) + "'");
    }
    const std::size_t n = 3;
    Monomial x123(n);
    x123.exps = {1, 1, 1};
    CommPoly h = CommPoly::term(x123, Scalar(-2));
    for (int v = 1; v <= 3; ++v) h += cvar(n, v).scaled(Scalar(2));
    return h;
}

Document corpus(std::string_view name, const CorpusParams& params) {
    const std::vector<std::string> towers = corpus_tower_names();
    if (std::find(towers.begin(), towers.end(), name) != towers.end()) {
        return tower_document(corpus_tower(name, params));
    }
    const std::vector<std::string> poissons = corpus_poisson_names();
    if (std::find(poissons.begin(), poissons.end(), name) != poissons.end()) {
        return poisson_document(corpus_poisson(name, params));
    }
    if (name == "potential_mmo") return potential_document(corpus_potential(name), numbered(3));
    throw UnknownCorpusEntry("unknown corpus entry '" + std::string(name) + "'");
}

LiftStrategy designated_strategy(std::string_view poisson_name, const CorpusParams& params) {
    const TowerPresentation companion = corpus_tower(companion_tower_name(poisson_name), params);
    const std::size_t n = companion.size();
    auto override_pair = [&](LiftStrategy& s, int j, int i) {
        s.overrides.push_back({j, i, companion.a(j, i), companion.u(j, i)});
    };
    if (poisson_name == "pweyl") return LiftStrategy::parse("affine+linear");
    if (poisson_name == "pplane" || poisson_name == "ptorus") return LiftStrategy::parse("power");
    if (poisson_name == "psl2" || poisson_name == "pmat2") {
        LiftStrategy s = LiftStrategy::parse("power");
        override_pair(s, 4, 3);
        return s;
    }
    if (poisson_name == "pmmo") {
        LiftStrategy s = LiftStrategy::parse("power");
        for (int j = 2; j <= static_cast<int>(n); ++j) {
            for (int i = 1; i < j; ++i) override_pair(s, j, i);
        }
        return s;
    }
    // lwz entries: shifted(N) when every f uses the same N, explicit u otherwise.
    const std::size_t count = poisson_name == "plwz32" ? 3 : 5;
    const int first = shift_at(params, 0);
    bool uniform = true;
    for (std::size_t idx = 1; idx < count; ++idx) uniform = uniform && shift_at(params, idx) == first;
    LiftStrategy s = LiftStrategy::parse("power+shifted(" + std::to_string(first) + ")");
    if (!uniform) {
        for (int i = 1; i < static_cast<int>(n); ++i) override_pair(s, static_cast<int>(n), i);
    }
    return s;
}

}  // namespace ore
