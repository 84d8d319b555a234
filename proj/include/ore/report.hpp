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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ore/commpoly.hpp"
#include "ore/errors.hpp"
#include "ore/ncpoly.hpp"

namespace ore {

enum class FailureKind {
    endo1,               // beta_k(u_ji) = a_kj a_ki u_ji
    endo2,               // nu-compatibility on the pair (x_j, x_i)
    con1,                // a_ji(1) = 1 and u_ji(1) = 0
    diamond,             // two reductions of one word disagree
    domain,              // u_ji (or p_ji) escapes A_i
    jacobi,
    skew,
    poisson_derivation,  // alpha_k fails to be a Poisson derivation
    compat,              // scaled commutator and limit bracket disagree
    mder,                // a quantization lift misses the prescribed derivative
};

std::string_view to_string(FailureKind kind);

using ReportValue = std::variant<std::monostate, NCPoly, CommPoly>;

struct Failure {
    FailureKind kind;
    /// (k, j, i) for triples or (k, i) / (j, i) for pairs; 1-based.
    std::vector<int> indices;
    ReportValue lhs;
    ReportValue rhs;
    std::string detail;
};

struct ValidationReport {
    std::vector<Failure> failures;
    /// Non-fatal observations, e.g. a_ji = 0 making beta_j non-injective.
    std::vector<std::string> warnings;

    bool ok() const { return failures.empty(); }
    void append(const ValidationReport& other);
    bool has_failure(FailureKind kind, const std::vector<int>& indices) const;
    bool has_failure(FailureKind kind) const;
};

/// Base for errors that carry the report explaining them.
class ReportError : public Error {
public:
    ReportError(const std::string& message, ValidationReport report)
        : Error(message), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

class TowerRejected : public ReportError {
public:
    using ReportError::ReportError;
};

class Con1Violation : public ReportError {
public:
    using ReportError::ReportError;
};

class LiftValidationFailure : public ReportError {
public:
    using ReportError::ReportError;
};

}  // namespace ore
