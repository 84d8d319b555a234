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

#include <gtest/gtest.h>

#include "ore/corpus.hpp"
#include "ore/dsl.hpp"
#include "ore/errors.hpp"
#include "ore/free.hpp"
#include "ore/pbw.hpp"
#include "support/gen.hpp"

namespace ore {
namespace {

NCPoly x(const TowerPresentation& T, int i) { return NCPoly::generator(T.size(), i, T.mode()); }
NCPoly one(const TowerPresentation& T) { return NCPoly::constant(CoeffElem::one(T.mode()), T.size()); }
NCPoly P(const TowerPresentation& T, std::string_view text) { return parse_ncpoly(text, T); }

CorpusParams weyl2() {
    CorpusParams p;
    p.k = 2;
    return p;
}

TEST(NcPoly, AddCancels) {
    const CoeffMode m = CoeffMode::laurent();
    const NCPoly x1 = NCPoly::generator(2, 1, m);
    EXPECT_TRUE(nc_add(x1, nc_scale(CoeffElem::constant(Scalar(-1), m), x1)).is_zero());
}

TEST(NcPoly, CoefficientsCombine) {
    const CoeffMode m = CoeffMode::laurent();
    const Monomial x1x2({1, 1});
    const NCPoly f = NCPoly::term(x1x2, CoeffElem::t_power(1, m)) + NCPoly::term(x1x2, CoeffElem::one(m));
    EXPECT_EQ(f.coefficient(x1x2), CoeffElem::t_power(1, m) + CoeffElem::one(m));
    EXPECT_EQ(f.terms().size(), 1u);
}

TEST(NcPoly, ScaleByTMinusOne) {
    const CoeffMode m = CoeffMode::laurent();
    const NCPoly f = nc_scale(CoeffElem::t_minus_one(m), NCPoly::generator(2, 1, m));
    EXPECT_EQ(f.coefficient(Monomial({1, 0})), CoeffElem::t_minus_one(m));
}

TEST(NcPoly, MismatchesRejected) {
    const NCPoly a = NCPoly::generator(2, 1, CoeffMode::laurent());
    EXPECT_THROW(nc_add(a, NCPoly::generator(3, 1, CoeffMode::laurent())), AlgebraMismatch);
    EXPECT_THROW(nc_add(a, NCPoly::generator(2, 1, CoeffMode::series(4))), ModeMismatch);
}

TEST(NcPoly, LiesIn) {
    const CoeffMode m = CoeffMode::laurent();
    EXPECT_TRUE(NCPoly::generator(3, 2, m).lies_in(2));
    EXPECT_FALSE(NCPoly::generator(3, 3, m).lies_in(2));
    EXPECT_TRUE(NCPoly::constant(CoeffElem::one(m), 3).lies_in(0));
}

TEST(Beta, Sl2ScalesHK) {
    const TowerPresentation T = corpus_tower("uqsl2");
    const NCPoly hk = P(T, "H*K");
    EXPECT_EQ(apply_beta(T, 3, hk), hk);
    EXPECT_EQ(apply_beta(T, 3, one(T)), one(T));
    EXPECT_EQ(apply_beta(T, 3, x(T, 1)), P(T, "t^2*H"));
}

TEST(Beta, WeylIsIdentity) {
    const TowerPresentation T = corpus_tower("weyl", weyl2());
    testing::Gen g(3);
    for (int trial = 0; trial < 20; ++trial) {
        const NCPoly f = g.ncpoly(4, T.mode(), 3, 3, 3);
        EXPECT_EQ(apply_beta(T, 4, f), f);
    }
}

TEST(Beta, RejectsHigherVariables) {
    const TowerPresentation T = corpus_tower("uqsl2");
    EXPECT_THROW(apply_beta(T, 3, x(T, 3)), AlgebraMismatch);
    EXPECT_THROW(apply_nu(T, 2, x(T, 4)), AlgebraMismatch);
}

TEST(Nu, Weyl) {
    const TowerPresentation T = corpus_tower("weyl", weyl2());
    EXPECT_EQ(apply_nu(T, 2, x(T, 1)), P(T, "t - 1"));
    EXPECT_EQ(apply_nu(T, 4, P(T, "x1*x3")), P(T, "(t - 1)*x1"));
    EXPECT_TRUE(apply_nu(T, 4, one(T)).is_zero());
}

TEST(Mul, WeylCommutation) {
    const TowerPresentation T = corpus_tower("weyl", weyl2());
    EXPECT_EQ(nc_mul(T, x(T, 2), x(T, 1)), P(T, "x1*x2 + t - 1"));
    EXPECT_TRUE(commutator(T, x(T, 1), x(T, 3)).is_zero());
    EXPECT_EQ(scaled_commutator(T, x(T, 2), x(T, 1)), one(T));
}

TEST(Mul, QuantumPlane) {
    const TowerPresentation T = corpus_tower("qplane");
    EXPECT_EQ(nc_mul(T, x(T, 2), x(T, 1)), P(T, "t*x1*x2"));
}

TEST(Mul, Sl2FE) {
    const TowerPresentation T = corpus_tower("uqsl2");
    const int E = T.index_of("E"), F = T.index_of("F");
    const NCPoly expected = P(T, "E*F + (1/4)*(t - t^-1)*(H - K)");
    EXPECT_EQ(nc_mul(T, x(T, F), x(T, E)), expected);
}

TEST(Mul, QuantumMatricesCommutator) {
    const TowerPresentation T = corpus_tower("qmat2");
    const NCPoly w = x(T, T.index_of("w")), xx = x(T, T.index_of("x"));
    EXPECT_EQ(commutator(T, w, xx), P(T, "-(t - t^-1)*y*z"));
}

TEST(Mul, HigherPowersByHand) {
    // Weyl k=1: x2 x1^2 = x1^2 x2 + 2(t-1) x1.
    const TowerPresentation T = corpus_tower("weyl");
    EXPECT_EQ(nc_mul(T, x(T, 2), P(T, "x1^2")), P(T, "x1^2*x2 + 2*(t - 1)*x1"));
    // Quantum plane: x2^2 x1 = t^2 x1 x2^2.
    const TowerPresentation Q = corpus_tower("qplane");
    EXPECT_EQ(nc_mul(Q, P(Q, "x2^2"), x(Q, 1)), P(Q, "t^2*x1*x2^2"));
}

TEST(Central, Sl2) {
    const TowerPresentation T = corpus_tower("uqsl2");
    EXPECT_TRUE(is_central(T, P(T, "H*K - 1")));
    EXPECT_FALSE(is_central(T, x(T, 1)));
    EXPECT_TRUE(is_central(T, one(T)));
}

TEST(Central, Weyl) {
    const TowerPresentation T = corpus_tower("weyl");
    EXPECT_FALSE(is_central(T, x(T, 1)));
}

TEST(ScaledCommutator, Errors) {
    const TowerPresentation T = corpus_tower("weyl");
    const NCPoly big = P(T, "x1^2*x2 + x2");
    TowerPresentation bad({"a", "b"}, CoeffMode::laurent());
    bad.set_relation(2, 1, CoeffElem::constant(Scalar(2), bad.mode()), NCPoly(2, bad.mode()));
    EXPECT_THROW(scaled_commutator(bad, x(bad, 2), x(bad, 1)), NotDivisible);
    EXPECT_TRUE(scaled_commutator(T, big, big).is_zero());
}

class PbwLaws : public ::testing::TestWithParam<std::string> {};

TEST_P(PbwLaws, MatchesRewritingOracle) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Monomial a = g.monomial(T.size(), 4), b = g.monomial(T.size(), 4);
        std::vector<int> letters = a.letters();
        for (int l : b.letters()) letters.push_back(l);
        EXPECT_EQ(nc_mul(T, testing::monomial_poly(a, T.mode()), testing::monomial_poly(b, T.mode())),
                  free_reduce(T, FreeWord{letters}));
    }
}

TEST_P(PbwLaws, Associative) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(12);
    for (int trial = 0; trial < 15; ++trial) {
        const NCPoly f = g.ncpoly(T.size(), T.mode(), 2, 3);
        const NCPoly h = g.ncpoly(T.size(), T.mode(), 2, 3);
        const NCPoly k = g.ncpoly(T.size(), T.mode(), 2, 3);
        EXPECT_EQ(nc_mul(T, nc_mul(T, f, h), k), nc_mul(T, f, nc_mul(T, h, k)));
    }
}

TEST_P(PbwLaws, UnitAndDistributive) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(13);
    for (int trial = 0; trial < 15; ++trial) {
        const NCPoly f = g.ncpoly(T.size(), T.mode());
        const NCPoly h = g.ncpoly(T.size(), T.mode());
        const NCPoly k = g.ncpoly(T.size(), T.mode());
        EXPECT_EQ(nc_mul(T, one(T), f), f);
        EXPECT_EQ(nc_mul(T, f, one(T)), f);
        EXPECT_EQ(nc_mul(T, f, h + k), nc_mul(T, f, h) + nc_mul(T, f, k));
        EXPECT_EQ(nc_mul(T, f + h, k), nc_mul(T, f, k) + nc_mul(T, h, k));
    }
}

TEST_P(PbwLaws, BetaMultiplicativeNuLeibniz) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(14);
    for (int k = 2; k <= static_cast<int>(T.size()); ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            const NCPoly f = g.ncpoly(T.size(), T.mode(), 2, 2, k - 1);
            const NCPoly h = g.ncpoly(T.size(), T.mode(), 2, 2, k - 1);
            const NCPoly fh = nc_mul(T, f, h);
            EXPECT_EQ(apply_beta(T, k, fh), nc_mul(T, apply_beta(T, k, f), apply_beta(T, k, h)));
            EXPECT_EQ(apply_nu(T, k, fh),
                      nc_mul(T, apply_beta(T, k, f), apply_nu(T, k, h)) + nc_mul(T, apply_nu(T, k, f), h));
            EXPECT_TRUE(fh.lies_in(k - 1));
        }
    }
}

TEST_P(PbwLaws, DefiningRelation) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(15);
    for (int k = 2; k <= static_cast<int>(T.size()); ++k) {
        for (int trial = 0; trial < 5; ++trial) {
            const NCPoly h = g.ncpoly(T.size(), T.mode(), 2, 3, k - 1);
            EXPECT_EQ(nc_mul(T, x(T, k), h), nc_mul(T, apply_beta(T, k, h), x(T, k)) + apply_nu(T, k, h));
        }
    }
}

TEST_P(PbwLaws, BetaInjectiveForUnitA) {
    const TowerPresentation T = corpus_tower(GetParam());
    testing::Gen g(16);
    for (int k = 2; k <= static_cast<int>(T.size()); ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            const NCPoly f = g.ncpoly(T.size(), T.mode(), 3, 3, k - 1);
            EXPECT_EQ(apply_beta(T, k, f).is_zero(), f.is_zero());
            EXPECT_EQ(apply_beta(T, k, f).terms().size(), f.terms().size());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Corpus, PbwLaws, ::testing::ValuesIn(corpus_tower_names()));

}  // namespace
}  // namespace ore
