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

#include "ore/format.hpp"

#include <sstream>

namespace ore {

namespace {

struct SignedText {
    bool negative = false;
    std::string body;
};

// Joins signed pieces as "a + b - c"; a leading negative piece gets "-".
std::string join_signed(const std::vector<SignedText>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            out += pieces[k].negative ? "-" : "";
        } else {
            out += pieces[k].negative ? " - " : " + ";
        }
        out += pieces[k].body;
    }
    return out;
}

// |c| as a factor in front of `rest`; empty rest means a bare constant.
std::string scalar_factor(const Scalar& magnitude, const std::string& rest) {
    if (rest.empty()) return to_string(magnitude);
    if (magnitude == 1) return rest;
    if (is_integer(magnitude)) return to_string(magnitude) + "*" + rest;
    return "(" + to_string(magnitude) + ")*" + rest;
}

std::string t_power_text(int k) {
    if (k == 0) return "";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

std::string s_power_text(int k) {
    if (k == 0) return "";
    if (k == 1) return "(t - 1)";
    return "(t - 1)^" + std::to_string(k);
}

std::vector<SignedText> coeff_pieces(const CoeffElem& c) {
    std::vector<SignedText> pieces;
    if (c.is_laurent()) {
        const auto& terms = c.laurent_terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            pieces.push_back({sgn(it->second) < 0, scalar_factor(abs(it->second), t_power_text(it->first))});
        }
    } else {
        const auto& coeffs = c.series_coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (ore::is_zero(coeffs[k])) continue;
            pieces.push_back({sgn(coeffs[k]) < 0, scalar_factor(abs(coeffs[k]), s_power_text(static_cast<int>(k)))});
        }
    }
    return pieces;
}

// A coefficient multiplying a non-unit monomial text `mono` (empty for the unit monomial).
SignedText coeff_times(const CoeffElem& c, const std::string& mono) {
    if (auto k = c.as_constant()) return {sgn(*k) < 0, scalar_factor(abs(*k), mono)};
    if (c.term_count() == 1) {
        SignedText single = coeff_pieces(c).front();
        if (!mono.empty()) single.body += "*" + mono;
        return single;
    }
    const Scalar g = content(c);
    const CoeffElem rest = c.scaled(Scalar(1) / g);
    std::string body = "(" + join_signed(coeff_pieces(rest)) + ")";
    if (!mono.empty()) body += "*" + mono;
    if (abs(g) != 1) body = (is_integer(g) ? to_string(abs(g)) : "(" + to_string(abs(g)) + ")") + "*" + body;
    return {sgn(g) < 0, body};
}

}  // namespace

std::vector<std::string> default_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t v = 1; v <= nvars; ++v) names.push_back("x" + std::to_string(v));
    return names;
}

std::string format_coeff(const CoeffElem& c) { return join_signed(coeff_pieces(c)); }

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names, const char* sep) {
    std::string out;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        const int e = m.exps[v];
        if (e == 0) continue;
        if (!out.empty()) out += sep;
        out += names[v];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string format_ncpoly(const NCPoly& f, const std::vector<std::string>& names) {
    std::vector<SignedText> pieces;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const std::string mono = it->first.is_unit() ? "" : format_monomial(it->first, names);
        pieces.push_back(coeff_times(it->second, mono));
    }
    return join_signed(pieces);
}

std::string format_ncpoly(const NCPoly& f) { return format_ncpoly(f, default_names(f.nvars())); }

std::string format_commpoly(const CommPoly& f, const std::vector<std::string>& names) {
    std::vector<SignedText> pieces;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const std::string mono = it->first.is_unit() ? "" : format_monomial(it->first, names);
        pieces.push_back({sgn(it->second) < 0, scalar_factor(abs(it->second), mono)});
    }
    return join_signed(pieces);
}

std::string format_commpoly(const CommPoly& f) { return format_commpoly(f, default_names(f.nvars())); }

std::string format_value(const ReportValue& v, const std::vector<std::string>& names) {
    if (const auto* p = std::get_if<NCPoly>(&v)) return format_ncpoly(*p, names);
    if (const auto* q = std::get_if<CommPoly>(&v)) return format_commpoly(*q, names);
    return "";
}

std::string format_report(const ValidationReport& report, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << (report.ok() ? "ok" : "FAILED") << "\n";
    for (const Failure& f : report.failures) {
        out << "  " << to_string(f.kind) << " (";
        for (std::size_t k = 0; k < f.indices.size(); ++k) out << (k ? "," : "") << f.indices[k];
        out << "): " << f.detail << "\n";
        if (!std::holds_alternative<std::monostate>(f.lhs)) out << "    lhs: " << format_value(f.lhs, names) << "\n";
        if (!std::holds_alternative<std::monostate>(f.rhs)) out << "    rhs: " << format_value(f.rhs, names) << "\n";
    }
    for (const std::string& w : report.warnings) out << "  warning: " << w << "\n";
    return out.str();
}

}  // namespace ore
