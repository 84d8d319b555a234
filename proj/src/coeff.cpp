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

#include "ore/coeff.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

namespace {

using LaurentTerms = CoeffElem::LaurentTerms;
using SeriesCoeffs = CoeffElem::SeriesCoeffs;

void require_same_mode(const CoeffMode& a, const CoeffMode& b) {
    if (!(a == b)) {
        throw ModeMismatch("coefficient modes differ: " + to_string(a) + " vs " + to_string(b));
    }
}

void accumulate(LaurentTerms& terms, int exponent, const Scalar& value) {
    if (is_zero(value)) return;
    auto [it, inserted] = terms.try_emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (is_zero(it->second)) terms.erase(it);
    }
}

SeriesCoeffs series_product(const SeriesCoeffs& a, const SeriesCoeffs& b) {
    const std::size_t n = a.size();
    SeriesCoeffs out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// (1 + s)^k for any integer k, truncated.
SeriesCoeffs binomial_series(int k, int prec) {
    SeriesCoeffs out(prec);
    out[0] = 1;
    for (int m = 0; m + 1 < prec; ++m) {
        out[m + 1] = out[m] * Scalar(k - m) / Scalar(m + 1);
    }
    return out;
}

SeriesCoeffs series_inverse(const SeriesCoeffs& a) {
    const std::size_t n = a.size();
    if (n == 0 || is_zero(a[0])) throw NotAUnit("series with zero constant term is not a unit");
    SeriesCoeffs out(n);
    Scalar inv0 = Scalar(1) / a[0];
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero(a[j])) acc += a[j] * out[k - j];
        }
        out[k] = -acc * inv0;
    }
    return out;
}

Scalar factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Scalar(f);
}

// Taylor coefficients of name(x) at x = 0.
SeriesCoeffs taylor(SeriesName name, int prec) {
    SeriesCoeffs out(prec);
    if (name == SeriesName::sec) return series_inverse(taylor(SeriesName::cos, prec));
    for (int k = 0; k < prec; ++k) {
        Scalar inv = Scalar(1) / factorial(k);
        switch (name) {
            case SeriesName::exp: out[k] = inv; break;
            case SeriesName::cos:
                if (k % 2 == 0) out[k] = (k / 2) % 2 == 0 ? inv : Scalar(-inv);
                break;
            case SeriesName::sin:
                if (k % 2 == 1) out[k] = (k / 2) % 2 == 0 ? inv : Scalar(-inv);
                break;
            case SeriesName::sec: break;
        }
    }
    return out;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace

CoeffMode CoeffMode::series(int prec) {
    if (prec < 1) throw InsufficientPrecision("series precision must be at least 1");
    return {Kind::series, prec};
}

std::string to_string(const CoeffMode& mode) {
    return mode.is_series() ? "series(prec=" + std::to_string(mode.prec) + ")" : "laurent";
}

CoeffElem CoeffElem::zero(const CoeffMode& mode) {
    if (mode.is_series()) return CoeffElem(SeriesCoeffs(mode.prec));
    return CoeffElem(LaurentTerms{});
}

CoeffElem CoeffElem::one(const CoeffMode& mode) { return constant(Scalar(1), mode); }

CoeffElem CoeffElem::constant(const Scalar& value, const CoeffMode& mode) {
    CoeffElem out = zero(mode);
    if (mode.is_series()) {
        std::get<SeriesCoeffs>(out.rep_)[0] = value;
    } else if (!ore::is_zero(value)) {
        std::get<LaurentTerms>(out.rep_).emplace(0, value);
    }
    return out;
}

CoeffElem CoeffElem::t_power(int k, const CoeffMode& mode) {
    if (mode.is_series()) return CoeffElem(binomial_series(k, mode.prec));
    return CoeffElem(LaurentTerms{{k, Scalar(1)}});
}

CoeffElem CoeffElem::t_minus_one(const CoeffMode& mode) {
    if (mode.is_series()) {
        SeriesCoeffs coeffs(mode.prec);
        if (mode.prec > 1) coeffs[1] = 1;
        return CoeffElem(std::move(coeffs));
    }
    return CoeffElem(LaurentTerms{{0, Scalar(-1)}, {1, Scalar(1)}});
}

CoeffElem CoeffElem::from_laurent(LaurentTerms terms) {
    std::erase_if(terms, [](const auto& kv) { return ore::is_zero(kv.second); });
    return CoeffElem(std::move(terms));
}

CoeffElem CoeffElem::from_series(SeriesCoeffs coeffs) {
    if (coeffs.empty()) throw InsufficientPrecision("series precision must be at least 1");
    return CoeffElem(std::move(coeffs));
}

CoeffMode CoeffElem::mode() const {
    if (is_laurent()) return CoeffMode::laurent();
    return {CoeffMode::Kind::series, static_cast<int>(std::get<SeriesCoeffs>(rep_).size())};
}

const LaurentTerms& CoeffElem::laurent_terms() const {
    if (!is_laurent()) throw ModeMismatch("expected a Laurent coefficient");
    return std::get<LaurentTerms>(rep_);
}

const SeriesCoeffs& CoeffElem::series_coeffs() const {
    if (!is_series()) throw ModeMismatch("expected a series coefficient");
    return std::get<SeriesCoeffs>(rep_);
}

bool CoeffElem::is_zero() const {
    if (is_laurent()) return laurent_terms().empty();
    const auto& c = series_coeffs();
    return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return ore::is_zero(x); });
}

bool CoeffElem::is_one() const {
    auto c = as_constant();
    return c && *c == 1;
}

std::optional<Scalar> CoeffElem::as_constant() const {
    if (is_laurent()) {
        const auto& terms = laurent_terms();
        if (terms.empty()) return Scalar(0);
        if (terms.size() == 1 && terms.begin()->first == 0) return terms.begin()->second;
        return std::nullopt;
    }
    const auto& c = series_coeffs();
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (!ore::is_zero(c[k])) return std::nullopt;
    }
    return c[0];
}

std::size_t CoeffElem::term_count() const {
    if (is_laurent()) return laurent_terms().size();
    const auto& c = series_coeffs();
    return static_cast<std::size_t>(
        std::count_if(c.begin(), c.end(), [](const Scalar& x) { return !ore::is_zero(x); }));
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& other) {
    require_same_mode(mode(), other.mode());
    if (is_laurent()) {
        auto& terms = std::get<LaurentTerms>(rep_);
        for (const auto& [k, c] : other.laurent_terms()) accumulate(terms, k, c);
    } else {
        auto& mine = std::get<SeriesCoeffs>(rep_);
        const auto& theirs = other.series_coeffs();
        for (std::size_t k = 0; k < mine.size(); ++k) mine[k] += theirs[k];
    }
    return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& other) { return *this += -other; }

CoeffElem& CoeffElem::operator*=(const CoeffElem& other) {
    require_same_mode(mode(), other.mode());
    if (is_laurent()) {
        LaurentTerms out;
        for (const auto& [ka, ca] : laurent_terms()) {
            for (const auto& [kb, cb] : other.laurent_terms()) accumulate(out, ka + kb, ca * cb);
        }
        rep_ = std::move(out);
    } else {
        rep_ = series_product(series_coeffs(), other.series_coeffs());
    }
    return *this;
}

CoeffElem CoeffElem::operator-() const { return scaled(Scalar(-1)); }

CoeffElem CoeffElem::scaled(const Scalar& factor) const {
    if (ore::is_zero(factor)) return zero(mode());
    CoeffElem out = *this;
    if (out.is_laurent()) {
        for (auto& [k, c] : std::get<LaurentTerms>(out.rep_)) c *= factor;
    } else {
        for (auto& c : std::get<SeriesCoeffs>(out.rep_)) c *= factor;
    }
    return out;
}

CoeffElem CoeffElem::pow(int exponent) const {
    if (exponent < 0) return coeff_invert(*this).pow(-exponent);
    CoeffElem result = one(mode()), base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

CoeffElem coeff_arith(ArithOp op, const CoeffElem& a, const CoeffElem& b) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    return a;
}

CoeffElem coeff_invert(const CoeffElem& a) {
    if (a.is_laurent()) {
        const auto& terms = a.laurent_terms();
        if (terms.size() != 1) throw NotAUnit("Laurent element is a unit only when it is a single term c*t^k");
        const auto& [k, c] = *terms.begin();
        return CoeffElem::from_laurent({{-k, Scalar(1) / c}});
    }
    return CoeffElem::from_series(series_inverse(a.series_coeffs()));
}

CoeffElem named_series(SeriesName name, const Scalar& param, int prec) {
    if (prec < 1) throw InsufficientPrecision("series precision must be at least 1");
    SeriesCoeffs coeffs = taylor(name, prec);
    Scalar scale(1);
    for (auto& c : coeffs) {
        c *= scale;
        scale *= param;
    }
    return CoeffElem::from_series(std::move(coeffs));
}

CoeffElem compose_series(SeriesName name, const CoeffElem& g) {
    const auto& gc = g.series_coeffs();
    if (!is_zero(gc[0])) throw DomainError("series argument must vanish at t = 1");
    const int prec = static_cast<int>(gc.size());
    SeriesCoeffs f = taylor(name, prec);
    CoeffElem result = CoeffElem::zero(g.mode());
    CoeffElem g_power = CoeffElem::one(g.mode());
    for (int k = 0; k < prec; ++k) {
        if (!is_zero(f[k])) result += g_power.scaled(f[k]);
        g_power *= g;
    }
    return result;
}

Scalar eval_at(const CoeffElem& a, const Scalar& q) {
    if (a.is_series()) throw SeriesNotEvaluable("series coefficients can only be evaluated at t = 1");
    Scalar value;
    for (const auto& [k, c] : a.laurent_terms()) {
        if (k < 0 && is_zero(q)) throw DivisionByZero("negative power of t evaluated at t = 0");
        value += c * power(q, k);
    }
    return value;
}

Scalar eval_at_one(const CoeffElem& a) {
    if (a.is_series()) return a.series_coeffs()[0];
    Scalar value;
    for (const auto& [k, c] : a.laurent_terms()) value += c;
    return value;
}

Scalar derivative_at_one(const CoeffElem& a) {
    if (a.is_series()) {
        const auto& c = a.series_coeffs();
        if (c.size() < 2) throw InsufficientPrecision("derivative at t = 1 needs precision >= 2");
        return c[1];
    }
    Scalar value;
    for (const auto& [k, c] : a.laurent_terms()) value += c * k;
    return value;
}

CoeffElem divide_by_t_minus_one(const CoeffElem& a) {
    if (!is_zero(eval_at_one(a))) throw NotDivisible("element does not vanish at t = 1");
    if (a.is_series()) {
        const auto& c = a.series_coeffs();
        if (c.size() < 2) throw InsufficientPrecision("cannot divide a precision-1 series by t - 1");
        return CoeffElem::from_series(SeriesCoeffs(c.begin() + 1, c.end()));
    }
    const auto& terms = a.laurent_terms();
    if (terms.empty()) return a;
    // Synthetic division from the top exponent down: b_{k-1} = a_k + b_k.
    LaurentTerms out;
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    Scalar carry;
    for (int k = hi; k > lo; --k) {
        auto it = terms.find(k);
        if (it != terms.end()) carry += it->second;
        accumulate(out, k - 1, carry);
    }
    return CoeffElem::from_laurent(std::move(out));
}

CoeffElem to_series(const CoeffElem& a, int prec) {
    if (prec < 1) throw InsufficientPrecision("series precision must be at least 1");
    if (a.is_series()) {
        const auto& c = a.series_coeffs();
        if (static_cast<int>(c.size()) < prec) {
            throw InsufficientPrecision("cannot extend a series beyond its precision");
        }
        return CoeffElem::from_series(SeriesCoeffs(c.begin(), c.begin() + prec));
    }
    SeriesCoeffs out(prec);
    for (const auto& [k, c] : a.laurent_terms()) {
        SeriesCoeffs b = binomial_series(k, prec);
        for (int m = 0; m < prec; ++m) out[m] += c * b[m];
    }
    return CoeffElem::from_series(std::move(out));
}

Scalar content(const CoeffElem& a) {
    std::vector<Scalar> values;
    if (a.is_laurent()) {
        for (auto it = a.laurent_terms().rbegin(); it != a.laurent_terms().rend(); ++it) {
            values.push_back(it->second);
        }
    } else {
        for (const auto& c : a.series_coeffs()) {
            if (!is_zero(c)) values.push_back(c);
        }
    }
    if (values.empty()) return Scalar(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& v : values) {
        num_gcd = gcd_z(num_gcd, v.get_num());
        den_lcm = lcm_z(den_lcm, v.get_den());
    }
    Scalar out(num_gcd, den_lcm);
    out.canonicalize();
    if (sgn(values.front()) < 0) out = -out;
    return out;
}

}  // namespace ore
