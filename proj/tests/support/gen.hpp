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

#pragma once

#include <random>
#include <string>
#include <vector>

#include <ostream>

#include "ore/coeff.hpp"
#include "ore/commpoly.hpp"
#include "ore/format.hpp"
#include "ore/free.hpp"
#include "ore/ncpoly.hpp"
#include "ore/scalar.hpp"

namespace ore {

// gtest printers.
inline void PrintTo(const CoeffElem& c, std::ostream* os) {
    *os << (c.is_series() ? "[series] " : "") << format_coeff(c);
}
inline void PrintTo(const NCPoly& f, std::ostream* os) { *os << format_ncpoly(f); }
inline void PrintTo(const CommPoly& f, std::ostream* os) { *os << format_commpoly(f); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << format_monomial(m, default_names(m.nvars())); }

}  // namespace ore

// Seeded generators for the property suites. Everything is driven by an
// mt19937_64 so failures replay from the printed seed.
namespace ore::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Scalar scalar(int bound = 5) {
        const int den = integer(1, 3);
        return make_scalar(integer(-bound, bound), den);
    }
    Scalar nonzero_scalar(int bound = 5) {
        Scalar s;
        do s = scalar(bound);
        while (ore::is_zero(s));
        return s;
    }

    CoeffElem laurent(int max_terms = 3, int max_exp = 3) {
        CoeffElem::LaurentTerms terms;
        const int count = integer(0, max_terms);
        for (int c = 0; c < count; ++c) terms[integer(-max_exp, max_exp)] += scalar();
        std::erase_if(terms, [](const auto& kv) { return ore::is_zero(kv.second); });
        return CoeffElem::from_laurent(std::move(terms));
    }
    CoeffElem laurent_unit(int max_exp = 3) {
        return CoeffElem::from_laurent({{integer(-max_exp, max_exp), nonzero_scalar()}});
    }

    CoeffElem series(int prec) {
        CoeffElem::SeriesCoeffs coeffs(static_cast<std::size_t>(prec));
        for (auto& c : coeffs) c = scalar();
        return CoeffElem::from_series(std::move(coeffs));
    }
    CoeffElem series_unit(int prec) {
        CoeffElem s = series(prec);
        CoeffElem::SeriesCoeffs coeffs = s.series_coeffs();
        coeffs[0] = nonzero_scalar();
        return CoeffElem::from_series(std::move(coeffs));
    }

    CoeffElem coeff(const CoeffMode& mode) { return mode.is_series() ? series(mode.prec) : laurent(); }

    Monomial monomial(std::size_t nvars, int max_degree, int max_var = 0) {
        const int top = max_var > 0 ? max_var : static_cast<int>(nvars);
        Monomial m(nvars);
        const int deg = integer(0, max_degree);
        for (int d = 0; d < deg; ++d) ++m.exps[static_cast<std::size_t>(integer(1, top) - 1)];
        return m;
    }

    NCPoly ncpoly(std::size_t nvars, const CoeffMode& mode, int max_terms = 3, int max_degree = 3,
                  int max_var = 0) {
        NCPoly f(nvars, mode);
        const int count = integer(0, max_terms);
        for (int c = 0; c < count; ++c) {
            const CoeffElem k = mode.is_series() ? CoeffElem::constant(nonzero_scalar(), mode)
                                                 : CoeffElem::t_power(integer(-1, 1), mode).scaled(nonzero_scalar());
            f.add_term(monomial(nvars, max_degree, max_var), k);
        }
        return f;
    }

    CommPoly commpoly(std::size_t nvars, int max_terms = 3, int max_degree = 3, int max_var = 0) {
        CommPoly f(nvars);
        const int count = integer(0, max_terms);
        for (int c = 0; c < count; ++c) f.add_term(monomial(nvars, max_degree, max_var), nonzero_scalar());
        return f;
    }

    FreeWord word(std::size_t nvars, int max_length) {
        FreeWord w;
        const int len = integer(0, max_length);
        for (int l = 0; l < len; ++l) w.letters.push_back(integer(1, static_cast<int>(nvars)));
        return w;
    }

private:
    std::mt19937_64 rng_;
};

inline NCPoly monomial_poly(const Monomial& m, const CoeffMode& mode) {
    return NCPoly::term(m, CoeffElem::one(mode));
}

}  // namespace ore::testing
