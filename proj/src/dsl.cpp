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

#include "ore/dsl.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "ore/errors.hpp"
#include "ore/format.hpp"
#include "ore/free.hpp"

namespace ore {

std::string_view to_string(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::tower: return "tower";
        case DocumentKind::poisson: return "poisson";
        case DocumentKind::potential: return "potential";
    }
    return "tower";
}

namespace {

enum class Tok { ident, number, symbol, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourceSpan span;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, int line_no, int column_offset = 0) {
    std::vector<Token> out;
    std::size_t p = 0;
    auto span_at = [&](std::size_t start, std::size_t len) {
        return SourceSpan{line_no, static_cast<int>(start) + 1 + column_offset, static_cast<int>(std::max<std::size_t>(len, 1))};
    };
    while (p < line.size()) {
        const char c = line[p];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        const std::size_t start = p;
        if (is_ident_start(c)) {
            while (p < line.size() && is_ident_char(line[p])) ++p;
            out.push_back({Tok::ident, std::string(line.substr(start, p - start)), span_at(start, p - start)});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) ++p;
            out.push_back({Tok::number, std::string(line.substr(start, p - start)), span_at(start, p - start)});
        } else if (std::string_view("+-*/^(){},=").find(c) != std::string_view::npos) {
            ++p;
            out.push_back({Tok::symbol, std::string(1, c), span_at(start, 1)});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", span_at(start, 1));
        }
    }
    out.push_back({Tok::end, "", span_at(line.size(), 1)});
    return out;
}

struct ExprContext {
    const std::vector<std::string>* names = nullptr;
    CoeffMode mode;
    bool allow_t = true;
};

// Recursive-descent evaluator producing free-algebra elements.
class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens, std::size_t pos, const ExprContext& ctx)
        : toks_(tokens), pos_(pos), ctx_(ctx), n_(ctx.names->size()) {}

    FreePoly parse_expr() {
        FreePoly acc = parse_term();
        while (at_symbol("+") || at_symbol("-")) {
            const bool minus = next().text == "-";
            FreePoly rhs = parse_term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    std::size_t position() const { return pos_; }
    const Token& peek() const { return toks_[pos_]; }

private:
    const Token& next() { return toks_[pos_++]; }
    bool at_symbol(const char* s) const { return peek().kind == Tok::symbol && peek().text == s; }

    bool starts_factor() const {
        const Token& t = peek();
        return t.kind == Tok::ident || t.kind == Tok::number || (t.kind == Tok::symbol && t.text == "(");
    }

    FreePoly parse_term() {
        FreePoly acc = parse_unary();
        while (true) {
            if (at_symbol("*")) {
                next();
                acc = acc * parse_unary();
            } else if (at_symbol("/")) {
                const Token& slash = next();
                const SourceSpan divisor_span = peek().span;
                FreePoly divisor = parse_unary();
                acc = acc.scaled(invert_constant(divisor, divisor_span, slash));
            } else if (starts_factor()) {
                acc = acc * parse_unary();
            } else {
                return acc;
            }
        }
    }

    FreePoly parse_unary() {
        if (at_symbol("-")) {
            next();
            return -parse_unary();
        }
        if (at_symbol("+")) {
            next();
            return parse_unary();
        }
        return parse_power();
    }

    FreePoly parse_power() {
        const SourceSpan base_span = peek().span;
        FreePoly base = parse_atom();
        if (!at_symbol("^")) return base;
        const Token& caret = next();
        int sign = 1;
        bool paren = false;
        if (at_symbol("(")) {
            next();
            paren = true;
        }
        if (at_symbol("-")) {
            next();
            sign = -1;
        }
        if (peek().kind != Tok::number) throw ParseError("exponent must be an integer", peek().span);
        const Token& num = next();
        if (paren) expect(")");
        if (num.text.size() > 6) throw ParseError("exponent too large", num.span);
        const int e = sign * std::stoi(num.text);
        if (e >= 0) {
            FreePoly out = FreePoly::constant(CoeffElem::one(ctx_.mode), n_);
            for (int k = 0; k < e; ++k) out = out * base;
            return out;
        }
        const CoeffElem inv = invert_constant(base, base_span, caret);
        return FreePoly::constant(inv.pow(-e), n_);
    }

    FreePoly parse_atom() {
        const Token& tok = peek();
        if (tok.kind == Tok::number) {
            next();
            return FreePoly::constant(CoeffElem::constant(Scalar(mpz_class(tok.text)), ctx_.mode), n_);
        }
        if (tok.kind == Tok::symbol && tok.text == "(") {
            next();
            FreePoly inner = parse_expr();
            expect(")");
            return inner;
        }
        if (tok.kind == Tok::ident) {
            next();
            for (std::size_t v = 0; v < n_; ++v) {
                if ((*ctx_.names)[v] == tok.text) return FreePoly::generator(n_, static_cast<int>(v + 1), ctx_.mode);
            }
            if (tok.text == "t") {
                if (!ctx_.allow_t) throw ParseError("'t' is not allowed in this context", tok.span);
                return FreePoly::constant(CoeffElem::t_power(1, ctx_.mode), n_);
            }
            static const std::map<std::string, SeriesName> functions = {
                {"cos", SeriesName::cos}, {"sin", SeriesName::sin}, {"sec", SeriesName::sec}, {"exp", SeriesName::exp}};
            if (auto it = functions.find(tok.text); it != functions.end()) {
                if (!ctx_.allow_t) throw ParseError("'" + tok.text + "' is not allowed in this context", tok.span);
                if (!ctx_.mode.is_series()) {
                    throw ParseError("'" + tok.text + "' needs series coefficients (coeff series)", tok.span);
                }
                expect("(");
                const SourceSpan arg_span = peek().span;
                FreePoly arg = parse_expr();
                expect(")");
                const CoeffElem g = constant_of(arg, arg_span);
                if (!ore::is_zero(g.series_coeffs()[0])) {
                    throw ParseError("argument of " + tok.text + " must vanish at t = 1", arg_span);
                }
                return FreePoly::constant(compose_series(it->second, g), n_);
            }
            throw UnknownIdentifier("unknown identifier '" + tok.text + "'", tok.span);
        }
        if (tok.kind == Tok::end) throw ParseError("unexpected end of expression", tok.span);
        throw ParseError("unexpected '" + tok.text + "'", tok.span);
    }

    CoeffElem constant_of(const FreePoly& f, const SourceSpan& span) const {
        for (const auto& [w, c] : f.terms()) {
            if (!w.empty()) throw ParseError("expected an expression without variables", span);
        }
        return f.is_zero() ? CoeffElem::zero(ctx_.mode) : f.terms().begin()->second;
    }

    CoeffElem invert_constant(const FreePoly& f, const SourceSpan& span, const Token& op) const {
        const CoeffElem c = constant_of(f, span);
        try {
            return coeff_invert(c);
        } catch (const NotAUnit&) {
            throw ParseError("'" + op.text + "' needs a unit operand", span);
        }
    }

    void expect(const char* s) {
        if (!at_symbol(s)) throw ParseError(std::string("expected '") + s + "'", peek().span);
        next();
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    ExprContext ctx_;
    std::size_t n_;
};

FreePoly parse_free(const std::vector<Token>& tokens, std::size_t& pos, const ExprContext& ctx,
                    bool stop_at_equals) {
    ExprParser parser(tokens, pos, ctx);
    FreePoly out = parser.parse_expr();
    pos = parser.position();
    const Token& tok = tokens[pos];
    if (tok.kind != Tok::end && !(stop_at_equals && tok.kind == Tok::symbol && tok.text == "=")) {
        throw ParseError("unexpected '" + tok.text + "'", tok.span);
    }
    return out;
}

CommPoly to_commpoly(const FreePoly& f) {
    CommPoly out(f.nvars());
    for (const auto& [w, c] : f.terms()) {
        out.add_term(Monomial::from_letters(f.nvars(), w), *c.as_constant());
    }
    return out;
}

std::string pair_text(const std::vector<std::string>& names, int j, int i) {
    return "(" + names[static_cast<std::size_t>(j - 1)] + ", " + names[static_cast<std::size_t>(i - 1)] + ")";
}

// lhs = rhs with exactly one descent word x_j x_i, solved for that word.
LiftOverride solve_relation(const FreePoly& lhs, const FreePoly& rhs, const std::vector<std::string>& names,
                            const CoeffMode& mode, const SourceSpan& span) {
    const std::size_t n = names.size();
    const FreePoly diff = lhs - rhs;
    std::vector<int> descent;
    for (const auto& [w, c] : diff.terms()) {
        if (std::is_sorted(w.begin(), w.end())) continue;
        if (w.size() != 2 || !descent.empty()) {
            throw ParseError("a relation must contain exactly one word x_j x_i with j > i and no other unordered words",
                             span);
        }
        descent = w;
    }
    if (descent.empty()) throw ParseError("relation has no word x_j x_i with j > i", span);
    const int j = descent[0], i = descent[1];
    const CoeffElem gamma = diff.terms().at(descent);
    CoeffElem inv;
    try {
        inv = coeff_invert(gamma);
    } catch (const NotAUnit&) {
        throw ParseError("coefficient of " + names[static_cast<std::size_t>(j - 1)] + " " +
                             names[static_cast<std::size_t>(i - 1)] + " must be a unit",
                         span);
    }
    // x_j x_i = -gamma^{-1} (diff - gamma x_j x_i)
    const CoeffElem factor = -inv;
    LiftOverride out{j, i, CoeffElem::zero(mode), NCPoly(n, mode)};
    for (const auto& [w, c] : diff.terms()) {
        if (w == descent) continue;
        const CoeffElem value = c * factor;
        if (w == std::vector<int>{i, j}) {
            out.a = value;
        } else {
            out.u.add_term(Monomial::from_letters(n, w), value);
        }
    }
    if (!out.u.lies_in(i)) {
        throw DomainError("line " + std::to_string(span.line) + ": u" + pair_text(names, j, i) +
                          " must lie in the subalgebra generated by " + names.front() + " .. " +
                          names[static_cast<std::size_t>(i - 1)]);
    }
    return out;
}

struct Statement {
    int line_no = 0;
    std::vector<Token> tokens;
};

std::vector<Statement> split_lines(std::string_view text) {
    std::vector<Statement> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        std::vector<Token> tokens = tokenize(line, line_no);
        if (tokens.size() > 1) out.push_back({line_no, std::move(tokens)});
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

bool is_reserved(const std::string& name) {
    static const std::set<std::string> reserved = {"t", "cos", "sin", "sec", "exp", "kind", "coeff",
                                                   "vars", "rel", "bracket"};
    return reserved.count(name) > 0;
}

void expect_symbol(const std::vector<Token>& toks, std::size_t& pos, const char* s) {
    const Token& tok = toks[pos];
    if (tok.kind != Tok::symbol || tok.text != s) throw ParseError(std::string("expected '") + s + "'", tok.span);
    ++pos;
}

void expect_end(const std::vector<Token>& toks, std::size_t pos) {
    if (toks[pos].kind != Tok::end) throw ParseError("unexpected '" + toks[pos].text + "'", toks[pos].span);
}

int variable_index(const std::vector<std::string>& names, const Token& tok) {
    if (tok.kind != Tok::ident) throw ParseError("expected a variable name", tok.span);
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (names[v] == tok.text) return static_cast<int>(v + 1);
    }
    throw UnknownIdentifier("unknown variable '" + tok.text + "'", tok.span);
}

}  // namespace

Document parse_document(std::string_view text, const ParseOptions& options) {
    const std::vector<Statement> statements = split_lines(text);
    Document doc;
    doc.mode = CoeffMode::laurent();
    bool have_kind = false, have_coeff = false, have_vars = false, have_body = false;
    std::set<std::pair<int, int>> seen_pairs;
    SourceSpan last_span{1, 1, 1};

    auto require_header = [&](const Token& tok) {
        if (!have_kind) throw ParseError("'kind' must come before relations", tok.span);
        if (!have_vars) throw ParseError("'vars' must come before relations", tok.span);
    };

    for (const Statement& st : statements) {
        const auto& toks = st.tokens;
        const Token& head = toks[0];
        last_span = head.span;
        std::size_t pos = 1;
        if (head.kind != Tok::ident) throw ParseError("expected a statement keyword", head.span);

        if (head.text == "kind") {
            if (have_kind) throw ParseError("duplicate 'kind'", head.span);
            const Token& k = toks[pos++];
            if (k.text == "tower") {
                doc.kind = DocumentKind::tower;
            } else if (k.text == "poisson") {
                doc.kind = DocumentKind::poisson;
            } else if (k.text == "potential") {
                doc.kind = DocumentKind::potential;
            } else {
                throw ParseError("kind must be tower, poisson or potential", k.span);
            }
            expect_end(toks, pos);
            have_kind = true;
        } else if (head.text == "coeff") {
            if (have_coeff) throw ParseError("duplicate 'coeff'", head.span);
            if (have_body) throw ParseError("'coeff' must come before relations", head.span);
            const Token& m = toks[pos++];
            if (m.text == "laurent") {
                doc.mode = CoeffMode::laurent();
            } else if (m.text == "series") {
                int prec = options.default_prec;
                if (toks[pos].kind == Tok::ident && toks[pos].text == "prec") {
                    ++pos;
                    expect_symbol(toks, pos, "=");
                    const Token& num = toks[pos++];
                    if (num.kind != Tok::number || num.text.size() > 6) {
                        throw ParseError("prec must be a positive integer", num.span);
                    }
                    prec = std::stoi(num.text);
                    if (prec < 1) throw ParseError("prec must be a positive integer", num.span);
                }
                doc.mode = CoeffMode::series(options.prec_override.value_or(prec));
            } else {
                throw ParseError("coeff must be laurent or series", m.span);
            }
            expect_end(toks, pos);
            have_coeff = true;
        } else if (head.text == "vars") {
            if (have_vars) throw ParseError("duplicate 'vars'", head.span);
            for (; toks[pos].kind != Tok::end; ++pos) {
                const Token& v = toks[pos];
                if (v.kind != Tok::ident) throw ParseError("expected a variable name", v.span);
                if (is_reserved(v.text)) throw ParseError("'" + v.text + "' is reserved", v.span);
                for (const std::string& prev : doc.names) {
                    if (prev == v.text) throw ParseError("duplicate variable '" + v.text + "'", v.span);
                }
                doc.names.push_back(v.text);
            }
            if (doc.names.empty()) throw ParseError("'vars' needs at least one name", head.span);
            have_vars = true;
        } else if (head.text == "rel") {
            require_header(head);
            if (doc.kind != DocumentKind::tower) throw ParseError("'rel' belongs in a tower document", head.span);
            if (!doc.tower) doc.tower.emplace(doc.names, doc.mode);
            have_body = true;
            const ExprContext ctx{&doc.names, doc.mode, true};
            const SourceSpan span{st.line_no, toks[pos].span.column,
                                  toks[toks.size() - 1].span.column - toks[pos].span.column};
            FreePoly lhs = parse_free(toks, pos, ctx, true);
            expect_symbol(toks, pos, "=");
            FreePoly rhs = parse_free(toks, pos, ctx, false);
            const LiftOverride r = solve_relation(lhs, rhs, doc.names, doc.mode, span);
            if (!seen_pairs.insert({r.j, r.i}).second) {
                throw ParseError("duplicate relation for " + pair_text(doc.names, r.j, r.i), span);
            }
            doc.tower->set_relation(r.j, r.i, r.a, r.u);
        } else if (head.text == "bracket") {
            require_header(head);
            if (doc.kind != DocumentKind::poisson) {
                throw ParseError("'bracket' belongs in a poisson document", head.span);
            }
            if (!doc.poisson) doc.poisson.emplace(doc.names);
            have_body = true;
            expect_symbol(toks, pos, "{");
            const Token& first = toks[pos++];
            int j = variable_index(doc.names, first);
            expect_symbol(toks, pos, ",");
            int i = variable_index(doc.names, toks[pos++]);
            expect_symbol(toks, pos, "}");
            expect_symbol(toks, pos, "=");
            if (i == j) throw ParseError("a bracket needs two distinct variables", first.span);
            const ExprContext ctx{&doc.names, CoeffMode::laurent(), false};
            CommPoly value = to_commpoly(parse_free(toks, pos, ctx, false));
            if (j < i) {
                std::swap(i, j);
                value = -value;
            }
            if (!seen_pairs.insert({j, i}).second) {
                throw ParseError("duplicate bracket for " + pair_text(doc.names, j, i), first.span);
            }
            Monomial m(doc.names.size());
            m.exps[static_cast<std::size_t>(i - 1)] = 1;
            m.exps[static_cast<std::size_t>(j - 1)] = 1;
            const Scalar c = value.coefficient(m);
            CommPoly p = value - CommPoly::term(m, c);
            if (!p.lies_in(i)) {
                throw DomainError("line " + std::to_string(st.line_no) + ": p" + pair_text(doc.names, j, i) +
                                  " must lie in the polynomial ring of " + doc.names.front() + " .. " +
                                  doc.names[static_cast<std::size_t>(i - 1)]);
            }
            doc.poisson->set_bracket(j, i, c, std::move(p));
        } else if (head.text == "h") {
            require_header(head);
            if (doc.kind != DocumentKind::potential) {
                throw ParseError("'h =' belongs in a potential document", head.span);
            }
            if (doc.potential) throw ParseError("duplicate potential", head.span);
            if (doc.names.size() != 3) throw ParseError("a potential needs exactly three variables", head.span);
            have_body = true;
            expect_symbol(toks, pos, "=");
            const ExprContext ctx{&doc.names, CoeffMode::laurent(), false};
            doc.potential = to_commpoly(parse_free(toks, pos, ctx, false));
        } else {
            throw ParseError("unknown statement '" + head.text + "'", head.span);
        }
    }

    if (!have_kind) throw ParseError("missing 'kind' statement", last_span);
    if (!have_vars) throw ParseError("missing 'vars' statement", last_span);
    switch (doc.kind) {
        case DocumentKind::tower:
            if (!doc.tower) doc.tower.emplace(doc.names, doc.mode);
            break;
        case DocumentKind::poisson:
            if (have_coeff && doc.mode.is_series()) throw ParseError("poisson documents have no t-coefficients", last_span);
            if (!doc.poisson) doc.poisson.emplace(doc.names);
            break;
        case DocumentKind::potential:
            if (have_coeff && doc.mode.is_series()) throw ParseError("potential documents have no t-coefficients", last_span);
            if (!doc.potential) throw ParseError("missing 'h = ...' statement", last_span);
            break;
    }
    return doc;
}

Document tower_document(const TowerPresentation& tower) {
    Document doc;
    doc.kind = DocumentKind::tower;
    doc.mode = tower.mode();
    doc.names = tower.names();
    doc.tower = tower;
    return doc;
}

Document poisson_document(const PoissonPresentation& P) {
    Document doc;
    doc.kind = DocumentKind::poisson;
    doc.names = P.names();
    doc.poisson = P;
    return doc;
}

Document potential_document(const CommPoly& h, const std::vector<std::string>& names) {
    Document doc;
    doc.kind = DocumentKind::potential;
    doc.names = names;
    doc.potential = h;
    return doc;
}

std::string emit_text(const Document& doc) {
    std::ostringstream out;
    out << "kind " << to_string(doc.kind) << "\n";
    if (doc.mode.is_series()) {
        out << "coeff series prec=" << doc.mode.prec << "\n";
    } else {
        out << "coeff laurent\n";
    }
    out << "vars";
    for (const std::string& name : doc.names) out << " " << name;
    out << "\n";
    const std::size_t n = doc.names.size();
    if (doc.tower) {
        const TowerPresentation& T = *doc.tower;
        for (int j = 2; j <= static_cast<int>(n); ++j) {
            for (int i = 1; i < j; ++i) {
                const CoeffElem& a = T.a(j, i);
                const NCPoly& u = T.u(j, i);
                if (a.is_one() && u.is_zero()) continue;
                std::string a_text = format_coeff(a);
                if (a.term_count() > 1 || a_text.find(' ') != std::string::npos) a_text = "(" + a_text + ")";
                const std::string& xj = doc.names[static_cast<std::size_t>(j - 1)];
                const std::string& xi = doc.names[static_cast<std::size_t>(i - 1)];
                out << "rel " << xj << " " << xi << " = " << a_text << " * " << xi << " " << xj;
                if (!u.is_zero()) {
                    const std::string u_text = format_ncpoly(u, doc.names);
                    if (u_text[0] == '-') {
                        out << " - " << u_text.substr(1);
                    } else {
                        out << " + " << u_text;
                    }
                }
                out << "\n";
            }
        }
    }
    if (doc.poisson) {
        const PoissonPresentation& P = *doc.poisson;
        for (int j = 2; j <= static_cast<int>(n); ++j) {
            for (int i = 1; i < j; ++i) {
                const CommPoly b = P.generator_bracket(j, i);
                if (b.is_zero()) continue;
                out << "bracket {" << doc.names[static_cast<std::size_t>(j - 1)] << ", "
                    << doc.names[static_cast<std::size_t>(i - 1)] << "} = " << format_commpoly(b, doc.names) << "\n";
            }
        }
    }
    if (doc.potential) out << "h = " << format_commpoly(*doc.potential, doc.names) << "\n";
    return out.str();
}

CoeffElem parse_coeff(std::string_view text, const CoeffMode& mode) {
    const std::vector<std::string> none;
    const std::vector<Token> toks = tokenize(text, 1);
    std::size_t pos = 0;
    const ExprContext ctx{&none, mode, true};
    const FreePoly f = parse_free(toks, pos, ctx, false);
    return f.is_zero() ? CoeffElem::zero(mode) : f.terms().begin()->second;
}

NCPoly parse_ncpoly(std::string_view text, const TowerPresentation& tower) {
    const std::vector<Token> toks = tokenize(text, 1);
    std::size_t pos = 0;
    const ExprContext ctx{&tower.names(), tower.mode(), true};
    return free_reduce(tower, parse_free(toks, pos, ctx, false));
}

CommPoly parse_commpoly(std::string_view text, const std::vector<std::string>& names) {
    const std::vector<Token> toks = tokenize(text, 1);
    std::size_t pos = 0;
    const ExprContext ctx{&names, CoeffMode::laurent(), false};
    return to_commpoly(parse_free(toks, pos, ctx, false));
}

LiftOverride parse_relation(std::string_view text, const std::vector<std::string>& names, const CoeffMode& mode) {
    const std::vector<Token> toks = tokenize(text, 1);
    std::size_t pos = 0;
    const ExprContext ctx{&names, mode, true};
    FreePoly lhs = parse_free(toks, pos, ctx, true);
    expect_symbol(toks, pos, "=");
    FreePoly rhs = parse_free(toks, pos, ctx, false);
    return solve_relation(lhs, rhs, names, mode, SourceSpan{1, 1, static_cast<int>(std::max<std::size_t>(text.size(), 1))});
}

}  // namespace ore
