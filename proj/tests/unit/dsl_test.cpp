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

#include <algorithm>
#include <sstream>

#include "ore/corpus.hpp"
#include "ore/dsl.hpp"
#include "ore/errors.hpp"
#include "ore/pbw.hpp"
#include "support/gen.hpp"

namespace ore {
namespace {

const CoeffMode kL = CoeffMode::laurent();

const char* kSl2 = R"(kind tower
coeff laurent
vars H K E F
rel E H = t^2 * H E
rel E K = t^-2 * K E
rel F H = t^-2 * H F
rel F K = t^2 * K F
rel F E = 1 * E F + (1/4)*(t - t^-1)*(H - K)
)";

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool span_inside(const SourceSpan& s, std::string_view text) {
    const std::vector<std::string> lines = lines_of(text);
    if (s.line < 1 || s.line > static_cast<int>(lines.size())) return false;
    const int width = static_cast<int>(lines[static_cast<std::size_t>(s.line - 1)].size());
    return s.column >= 1 && s.column <= width + 1 && s.length >= 1;
}

SourceSpan span_of(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.span();
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return {};
}

TEST(Parse, Sl2Document) {
    const Document d = parse_document(kSl2);
    ASSERT_TRUE(d.tower.has_value());
    EXPECT_EQ(build_tower(*d.tower), corpus_tower("uqsl2"));
}

TEST(Parse, PoissonDocument) {
    const Document d = parse_document(R"(kind poisson
vars x1 x2 x3
bracket {x2,x1} = 2*x1*x2 - 2
bracket {x3,x1} = -2*x1*x3 + 2
bracket {x3,x2} = 2*x2*x3 - 2
)");
    ASSERT_TRUE(d.poisson.has_value());
    EXPECT_EQ(*d.poisson, corpus_poisson("pmmo"));
}

TEST(Parse, ReversedBracketIsNegated) {
    const Document d = parse_document("kind poisson\nvars a b\nbracket {a, b} = -1\n");
    EXPECT_EQ(d.poisson->generator_bracket(2, 1), CommPoly::constant(Scalar(1), 2));
}

TEST(Parse, DomainViolation) {
    EXPECT_THROW(parse_document("kind tower\nvars x1 x2 x3\nrel x3 x1 = 1 * x1 x3 + x2\n"), DomainError);
    EXPECT_THROW(parse_document("kind poisson\nvars x1 x2 x3\nbracket {x3, x1} = x2\n"), DomainError);
}

TEST(Parse, DisplayFormS3) {
    const Document d = parse_document(R"(kind tower
vars x1 x2 x3
rel t^2*x1*x2 - x2*x1 = t^2 - 1
rel t^-2*x1*x3 - x3*x1 = t^-2 - 1
rel t^2*x2*x3 - x3*x2 = t^2 - 1
)");
    EXPECT_EQ(build_tower(*d.tower), corpus_tower("uqsl2_s3"));
}

TEST(Parse, SeriesCoefficients) {
    const Document d = parse_document(
        "kind tower\ncoeff series prec=12\nvars x1 x2\nrel x2 x1 = cos(t - 1) * x1 x2 + sin(t - 1)\n");
    EXPECT_EQ(build_tower(*d.tower), corpus_tower("trigweyl"));
}

TEST(Parse, PrecisionOverride) {
    ParseOptions opts;
    opts.prec_override = 5;
    const Document d = parse_document("kind tower\ncoeff series prec=12\nvars a b\n", opts);
    EXPECT_EQ(d.mode, CoeffMode::series(5));
    opts = {};
    opts.default_prec = 7;
    EXPECT_EQ(parse_document("kind tower\ncoeff series\nvars a b\n", opts).mode, CoeffMode::series(7));
}

TEST(Parse, CommentsAndWhitespace) {
    const Document d = parse_document("# quantum plane\n  kind   tower\nvars a b   # two\n\nrel b a=t*a b\n");
    EXPECT_EQ(d.tower->a(2, 1), CoeffElem::t_power(1, kL));
}

TEST(Parse, StatementOrderIrrelevant) {
    std::vector<std::string> lines = lines_of(kSl2);
    const Document reference = parse_document(kSl2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(lines.begin() + 3, lines.end(), rng);
        std::string text;
        for (const std::string& l : lines) text += l + "\n";
        EXPECT_EQ(parse_document(text), reference);
    }
}

TEST(ParseErrors, Spans) {
    struct Case {
        const char* text;
        int line, column;
    };
    const Case cases[] = {
        {"kind tower\nvars a b\nrel b a = t * a c\n", 3, 17},
        {"kind tower\nvars a b\nrel b a = t * a b $\n", 3, 19},
        {"kind ring\nvars a\n", 1, 6},
        {"kind tower\nvars a t\n", 2, 8},
        {"kind poisson\nvars a b\nbracket {b, a} = t\n", 3, 18},
        {"kind tower\nvars a b\nrel (t - 1)*b a = a b\n", 3, 5},
        {"kind tower\nvars a b\nrel b a = t * a b\nrel b a = a b\n", 4, 5},
        {"kind tower\ncoeff laurent\nvars a b\nrel b a = cos(t - 1) * a b\n", 4, 11},
    };
    for (const Case& c : cases) {
        const SourceSpan s = span_of(c.text);
        EXPECT_EQ(s.line, c.line) << c.text;
        EXPECT_EQ(s.column, c.column) << c.text;
        EXPECT_TRUE(span_inside(s, c.text)) << c.text;
    }
}

TEST(ParseErrors, UnknownIdentifierType) {
    EXPECT_THROW(parse_document("kind tower\nvars a b\nrel b a = q * a b\n"), UnknownIdentifier);
}

TEST(Expr, Coefficient) {
    EXPECT_EQ(parse_coeff("(t^2 - 1)", kL), CoeffElem::t_power(2, kL) - CoeffElem::one(kL));
    EXPECT_EQ(parse_coeff("t^(-2) / 3", kL), CoeffElem::t_power(-2, kL).scaled(Scalar(1, 3)));
    EXPECT_THROW(parse_coeff("1 / (t - 1)", kL), ParseError);
}

TEST(Expr, CommPolySorted) {
    const std::vector<std::string> names = {"H", "K", "E", "F"};
    const CommPoly f = parse_commpoly("K*H - 1", names);
    EXPECT_EQ(f, parse_commpoly("H K - 1", names));
    EXPECT_EQ(format_commpoly(f, names), "H*K - 1");
}

TEST(Expr, NcPolyNormalized) {
    const TowerPresentation T = corpus_tower("weyl");
    EXPECT_EQ(parse_ncpoly("x2*x1", T), nc_mul(T, NCPoly::generator(2, 2, kL), NCPoly::generator(2, 1, kL)));
    EXPECT_EQ(format_ncpoly(parse_ncpoly("x2*x1", T), T.names()), "x1*x2 + (t - 1)");
}

TEST(Expr, RelationOverride) {
    const LiftOverride o = parse_relation("F E = E F + (1/4)*(t - t^-1)*(H - K)", {"H", "K", "E", "F"}, kL);
    EXPECT_EQ(o.j, 4);
    EXPECT_EQ(o.i, 3);
    EXPECT_TRUE(o.a.is_one());
}

TEST(Emit, WeylText) {
    const std::string text = emit_text(corpus("weyl"));
    EXPECT_NE(text.find("rel x2 x1 = 1 * x1 x2 + (t - 1)"), std::string::npos) << text;
}

TEST(Emit, Deterministic) {
    for (const std::string& name : corpus_names()) EXPECT_EQ(emit_text(corpus(name)), emit_text(corpus(name)));
}

TEST(RoundTrip, Corpus) {
    CorpusParams p;
    p.k = 2;
    for (const std::string& name : corpus_names()) {
        const Document d = corpus(name, p);
        EXPECT_EQ(parse_document(emit_text(d)), d) << name << "\n" << emit_text(d);
    }
}

Document random_tower_document(testing::Gen& g) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const CoeffMode mode = g.integer(0, 3) == 0 ? CoeffMode::series(g.integer(2, 6)) : kL;
    TowerPresentation T(default_names(n), mode);
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) {
            if (g.coin()) continue;
            const CoeffElem a = mode.is_series() ? g.series(mode.prec) : g.laurent(2, 2);
            T.set_relation(j, i, a, g.ncpoly(n, mode, 3, 2, i));
        }
    }
    return tower_document(T);
}

Document random_poisson_document(testing::Gen& g) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    PoissonPresentation P(default_names(n));
    for (int j = 2; j <= static_cast<int>(n); ++j) {
        for (int i = 1; i < j; ++i) P.set_bracket(j, i, g.scalar(), g.commpoly(n, 3, 3, i));
    }
    return poisson_document(P);
}

class DslFuzz : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DslFuzz, RandomDocumentsRoundTrip) {
    testing::Gen g(GetParam());
    for (int trial = 0; trial < 40; ++trial) {
        const Document d = g.coin() ? random_tower_document(g) : random_poisson_document(g);
        const std::string text = emit_text(d);
        EXPECT_EQ(parse_document(text), d) << text;
        EXPECT_EQ(emit_text(parse_document(text)), text);
    }
}

TEST_P(DslFuzz, CorruptedInputsFailCleanly) {
    testing::Gen g(GetParam());
    const std::vector<std::string> names = corpus_names();
    const std::string alphabet = "xt^*+-(){}=,/# 0123456789abHKEF\n";
    for (int trial = 0; trial < 200; ++trial) {
        std::string text = emit_text(corpus(names[static_cast<std::size_t>(g.integer(0, static_cast<int>(names.size()) - 1))]));
        const int edits = g.integer(1, 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = static_cast<std::size_t>(g.integer(0, static_cast<int>(text.size()) - 1));
            switch (g.integer(0, 2)) {
                case 0: text.erase(pos, 1); break;
                case 1: text.insert(pos, 1, alphabet[static_cast<std::size_t>(g.integer(0, static_cast<int>(alphabet.size()) - 1))]); break;
                default: text[pos] = alphabet[static_cast<std::size_t>(g.integer(0, static_cast<int>(alphabet.size()) - 1))];
            }
        }
        try {
            const Document d = parse_document(text);
            EXPECT_EQ(parse_document(emit_text(d)), d) << text;
        } catch (const ParseError& e) {
            EXPECT_TRUE(span_inside(e.span(), text)) << e.what() << "\n" << text;
        } catch (const DomainError&) {
        } catch (const std::exception& e) {
            ADD_FAILURE() << "unexpected " << e.what() << "\n" << text;
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DslFuzz, ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace ore
