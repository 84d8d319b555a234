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
#include "ore/poisson.hpp"
#include "support/gen.hpp"

namespace ore {
namespace {

const std::vector<std::string> kXYZ = {"x1", "x2", "x3"};

CommPoly C(std::string_view text, const std::vector<std::string>& names = kXYZ) {
    return parse_commpoly(text, names);
}

PoissonPresentation mmo_bracket() {
    PoissonPresentation P(kXYZ);
    P.set_bracket(2, 1, Scalar(2), C("-2"));
    P.set_bracket(3, 1, Scalar(-2), C("2"));
    P.set_bracket(3, 2, Scalar(2), C("-2"));
    return P;
}

PoissonPresentation non_jacobi() {
    PoissonPresentation P(kXYZ);
    P.set_bracket(2, 1, Scalar(0), C("1"));
    P.set_bracket(3, 2, Scalar(0), C("x2"));
    return P;
}

TEST(Presentation, DomainEnforced) {
    PoissonPresentation P(kXYZ);
    EXPECT_THROW(P.set_bracket(3, 1, Scalar(0), C("x2")), DomainError);
    EXPECT_NO_THROW(P.set_bracket(3, 2, Scalar(0), C("x2")));
}

TEST(Presentation, GeneratorBracketIsSkew) {
    const PoissonPresentation P = mmo_bracket();
    EXPECT_EQ(P.generator_bracket(2, 1), C("2*x1*x2 - 2"));
    EXPECT_EQ(P.generator_bracket(1, 2), C("-2*x1*x2 + 2"));
}

TEST(Bracket, WeylGenerators) {
    const PoissonPresentation P = corpus_poisson("pweyl");
    const std::vector<std::string> n = P.names();
    EXPECT_EQ(pbracket(P, C("x2", n), C("x1", n)), C("1", n));
    EXPECT_EQ(pbracket(P, C("x2^2", n), C("x1", n)), C("2*x2", n));
}

TEST(Bracket, SelfBracketVanishes) {
    const PoissonPresentation P = mmo_bracket();
    testing::Gen g(5);
    for (int trial = 0; trial < 20; ++trial) {
        const CommPoly f = g.commpoly(3);
        EXPECT_TRUE(pbracket(P, f, f).is_zero());
    }
}

TEST(Jacobi, WeylOk) { EXPECT_TRUE(jacobi_check(corpus_poisson("pweyl")).ok()); }

TEST(Jacobi, MmoOk) { EXPECT_TRUE(jacobi_check(mmo_bracket()).ok()); }

TEST(Jacobi, ViolationValue) {
    const ValidationReport r = jacobi_check(non_jacobi());
    ASSERT_TRUE(r.has_failure(FailureKind::jacobi, {1, 2, 3}));
    EXPECT_EQ(std::get<CommPoly>(r.failures.front().lhs), C("-1"));
}

TEST(Skew, Weyl) {
    const PoissonPresentation P = corpus_poisson("pweyl");
    EXPECT_TRUE(skew_check(P, 2).ok());
}

TEST(Skew, Mmo) { EXPECT_TRUE(skew_check(mmo_bracket(), 3).ok()); }

TEST(Skew, ViolationDetected) { EXPECT_FALSE(skew_check(non_jacobi(), 3).ok()); }

TEST(Potential, MmoBrackets) {
    const CommPoly h = C("-2*x1*x2*x3 + 2*x3 + 2*x2 + 2*x1");
    EXPECT_EQ(bracket_from_potential(h, C("x2"), C("x1")), C("2*x1*x2 - 2"));
    EXPECT_EQ(bracket_from_potential(h, C("x3"), C("x1")), C("-2*x1*x3 + 2"));
    EXPECT_EQ(bracket_from_potential(h, C("x3"), C("x2")), C("2*x2*x3 - 2"));
}

TEST(Potential, LinearH) {
    const CommPoly h = C("x3");
    EXPECT_EQ(bracket_from_potential(h, C("x1"), C("x2")), C("1"));
    EXPECT_TRUE(bracket_from_potential(h, C("x1"), C("x3")).is_zero());
}

TEST(Potential, HWithItselfVanishes) {
    testing::Gen g(6);
    for (int trial = 0; trial < 20; ++trial) {
        const CommPoly h = g.commpoly(3, 4, 3);
        EXPECT_TRUE(bracket_from_potential(h, h, g.commpoly(3)).is_zero());
    }
}

TEST(Potential, DegreeBound) {
    EXPECT_THROW(bracket_from_potential(C("x1^4"), C("x1"), C("x2")), DegreeTooHigh);
    EXPECT_THROW(classify_potential(C("x1^2*x2^2")), DegreeTooHigh);
}

TEST(Classify, Mmo) {
    const PotentialClassification c = classify_potential(C("-2*x1*x2*x3 + 2*x3 + 2*x2 + 2*x1"));
    ASSERT_TRUE(c.matches);
    EXPECT_EQ(c.lambda, Scalar(-2));
    EXPECT_EQ(c.mu, Scalar(2));
    EXPECT_EQ(c.f1, C("2"));
    EXPECT_EQ(c.f2, C("2*x1"));
    ASSERT_TRUE(c.presentation.has_value());
    EXPECT_EQ(*c.presentation, mmo_bracket());
}

TEST(Classify, LinearH) {
    const PotentialClassification c = classify_potential(C("x3"));
    ASSERT_TRUE(c.matches);
    EXPECT_EQ(c.lambda, Scalar(0));
    EXPECT_EQ(c.mu, Scalar(1));
    EXPECT_TRUE(c.f1.is_zero());
    EXPECT_TRUE(c.f2.is_zero());
}

TEST(Classify, WrongShape) { EXPECT_FALSE(classify_potential(C("x2^2*x3")).matches); }

TEST(Structure, Weyl) {
    const PoissonTowerStructure s = poisson_to_tower_structure(corpus_poisson("pweyl"));
    EXPECT_TRUE(s.report.ok());
    ASSERT_EQ(s.levels.size(), 1u);
    EXPECT_EQ(s.levels[0].k, 2);
    EXPECT_EQ(s.levels[0].delta[0], CommPoly::constant(Scalar(1), 2));
}

TEST(Structure, Lwz32) {
    CorpusParams p;
    p.lambda = {Scalar(2), Scalar(3), Scalar(5)};
    const PoissonTowerStructure s = poisson_to_tower_structure(corpus_poisson("plwz32", p));
    EXPECT_TRUE(s.report.ok());
    const std::vector<std::string> n = {"x1", "x2", "x3"};
    EXPECT_EQ(s.levels.back().delta[1], C("3*x1 + 5*x2", n));
}

TEST(Structure, NonJacobi) { EXPECT_FALSE(poisson_to_tower_structure(non_jacobi()).report.ok()); }

// A random presentation of the (MOC1) shape on n variables.
PoissonPresentation random_presentation(testing::Gen& g, std::size_t n) {
    PoissonPresentation P(default_names(n));
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            const Scalar c = g.coin() ? Scalar(g.integer(-2, 2)) : Scalar(0);
            P.set_bracket(j, i, c, g.coin() ? g.commpoly(n, 2, 2, i) : CommPoly(n));
        }
    }
    return P;
}

class PoissonLaws : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PoissonLaws, AntisymmetryAndLeibniz) {
    testing::Gen g(GetParam());
    const PoissonPresentation P = mmo_bracket();
    for (int trial = 0; trial < 25; ++trial) {
        const CommPoly f = g.commpoly(3), h = g.commpoly(3), k = g.commpoly(3);
        EXPECT_EQ(pbracket(P, f, h), -pbracket(P, h, f));
        EXPECT_EQ(pbracket(P, f * h, k), f * pbracket(P, h, k) + pbracket(P, f, k) * h);
    }
}

TEST_P(PoissonLaws, PotentialBracketsSatisfyJacobi) {
    testing::Gen g(GetParam());
    for (int trial = 0; trial < 15; ++trial) {
        const CommPoly h = g.commpoly(3, 5, 3);
        const CommPoly x1 = CommPoly::variable(3, 1), x2 = CommPoly::variable(3, 2), x3 = CommPoly::variable(3, 3);
        auto br = [&](const CommPoly& a, const CommPoly& b) { return bracket_from_potential(h, a, b); };
        const CommPoly jac = br(br(x1, x2), x3) + br(br(x2, x3), x1) + br(br(x3, x1), x2);
        EXPECT_TRUE(jac.is_zero());
    }
}

TEST_P(PoissonLaws, ClassificationRoundTrip) {
    testing::Gen g(GetParam());
    for (int trial = 0; trial < 20; ++trial) {
        const CommPoly x1 = CommPoly::variable(3, 1), x2 = CommPoly::variable(3, 2), x3 = CommPoly::variable(3, 3);
        const Scalar lambda = g.scalar(), mu = g.scalar();
        const CommPoly f1 = g.commpoly(3, 3, 2, 1), f2 = g.commpoly(3, 3, 3, 1);
        const CommPoly h = (x1 * x2 * x3).scaled(lambda) + x3.scaled(mu) + f1 * x2 + f2;
        const PotentialClassification c = classify_potential(h);
        ASSERT_TRUE(c.matches);
        const CommPoly rebuilt = (x1 * x2 * x3).scaled(c.lambda) + x3.scaled(c.mu) + c.f1 * x2 + c.f2;
        const CommPoly diff = h - rebuilt;
        EXPECT_LE(diff.degree(), 0);
        ASSERT_TRUE(c.presentation.has_value());
        EXPECT_EQ(c.presentation->generator_bracket(2, 1), bracket_from_potential(h, x2, x1));
        EXPECT_EQ(c.presentation->generator_bracket(3, 1), bracket_from_potential(h, x3, x1));
        EXPECT_EQ(c.presentation->generator_bracket(3, 2), bracket_from_potential(h, x3, x2));
    }
}

TEST_P(PoissonLaws, JacobiIffSkewAtEveryLevel) {
    testing::Gen g(GetParam());
    int failing = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
        const PoissonPresentation P = random_presentation(g, n);
        bool skew = true;
        for (int k = 2; k <= static_cast<int>(n); ++k) skew = skew && skew_check(P, k).ok();
        const bool jacobi = jacobi_check(P).ok();
        EXPECT_EQ(jacobi, skew);
        failing += jacobi ? 0 : 1;
    }
    EXPECT_GT(failing, 0);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PoissonLaws, ::testing::Values(1u, 7u, 99u));

TEST(PoissonCorpus, JacobiAndSkew) {
    for (const std::string& name : corpus_poisson_names()) {
        const PoissonPresentation P = corpus_poisson(name);
        EXPECT_TRUE(jacobi_check(P).ok()) << name;
        for (int k = 2; k <= static_cast<int>(P.size()); ++k) EXPECT_TRUE(skew_check(P, k).ok()) << name << k;
    }
}

}  // namespace
}  // namespace ore
