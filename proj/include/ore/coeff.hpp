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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

inline constexpr int kDefaultSeriesPrecision = 16;

/// Which concrete coefficient ring an element lives in. Series elements are
/// truncated power series in s = t - 1 and carry their precision.
struct CoeffMode {
    enum class Kind { laurent, series };

    Kind kind = Kind::laurent;
    int prec = 0;

    static CoeffMode laurent() { return {}; }
    static CoeffMode series(int prec);

    bool is_series() const { return kind == Kind::series; }

    friend bool operator==(const CoeffMode&, const CoeffMode&) = default;
};

std::string to_string(const CoeffMode& mode);

/// Element of the coefficient ring F with C[t] <= F <= C[[t-1]].
///
/// Laurent mode stores a sparse map exponent -> coefficient with no zero entries.
/// Series mode stores exactly prec coefficients of s^0 .. s^(prec-1); all
/// arithmetic is modulo s^prec. Mixing modes (or precisions) throws ModeMismatch.
class CoeffElem {
public:
    using LaurentTerms = std::map<int, Scalar>;
    using SeriesCoeffs = std::vector<Scalar>;

    CoeffElem() = default;

    static CoeffElem zero(const CoeffMode& mode);
    static CoeffElem one(const CoeffMode& mode);
    static CoeffElem constant(const Scalar& value, const CoeffMode& mode);
    /// t^k; in series mode this is the expansion of (1 + s)^k.
    static CoeffElem t_power(int k, const CoeffMode& mode);
    /// t - 1 (i.e. s).
    static CoeffElem t_minus_one(const CoeffMode& mode);
    static CoeffElem from_laurent(LaurentTerms terms);
    static CoeffElem from_series(SeriesCoeffs coeffs);

    CoeffMode mode() const;
    bool is_laurent() const { return std::holds_alternative<LaurentTerms>(rep_); }
    bool is_series() const { return !is_laurent(); }

    const LaurentTerms& laurent_terms() const;
    const SeriesCoeffs& series_coeffs() const;

    bool is_zero() const;
    bool is_one() const;
    /// The element as a rational when it has no t-dependence.
    std::optional<Scalar> as_constant() const;
    /// Number of stored nonzero coefficients.
    std::size_t term_count() const;

    CoeffElem& operator+=(const CoeffElem& other);
    CoeffElem& operator-=(const CoeffElem& other);
    CoeffElem& operator*=(const CoeffElem& other);
    CoeffElem operator-() const;
    CoeffElem scaled(const Scalar& factor) const;
    /// Nonnegative integer power.
    CoeffElem pow(int exponent) const;

    friend CoeffElem operator+(CoeffElem lhs, const CoeffElem& rhs) { return lhs += rhs; }
    friend CoeffElem operator-(CoeffElem lhs, const CoeffElem& rhs) { return lhs -= rhs; }
    friend CoeffElem operator*(CoeffElem lhs, const CoeffElem& rhs) { return lhs *= rhs; }
    friend bool operator==(const CoeffElem&, const CoeffElem&) = default;

private:
    explicit CoeffElem(std::variant<LaurentTerms, SeriesCoeffs> rep) : rep_(std::move(rep)) {}

    std::variant<LaurentTerms, SeriesCoeffs> rep_;
};

enum class ArithOp { add, sub, mul };

CoeffElem coeff_arith(ArithOp op, const CoeffElem& a, const CoeffElem& b);

/// Multiplicative inverse. Laurent units are single terms c*t^k; series units
/// have nonzero constant coefficient. Throws NotAUnit otherwise.
CoeffElem coeff_invert(const CoeffElem& a);

enum class SeriesName { cos, sin, sec, exp };

/// Taylor expansion of name(param * s) to order prec with exact coefficients.
CoeffElem named_series(SeriesName name, const Scalar& param, int prec);

/// name(g) for a series g with zero constant term.
CoeffElem compose_series(SeriesName name, const CoeffElem& g);

/// Exact value at t = q (Laurent mode only).
Scalar eval_at(const CoeffElem& a, const Scalar& q);

Scalar eval_at_one(const CoeffElem& a);
Scalar derivative_at_one(const CoeffElem& a);

/// b with b * (t - 1) = a. Series results lose one order of precision.
CoeffElem divide_by_t_minus_one(const CoeffElem& a);

/// Series image modulo s^prec. Series inputs are truncated, never extended.
CoeffElem to_series(const CoeffElem& a, int prec);

/// gcd of numerators over lcm of denominators, carrying the sign of the leading
/// coefficient in display order (highest t-power, or lowest s-power). Zero for zero.
Scalar content(const CoeffElem& a);

}  // namespace ore
