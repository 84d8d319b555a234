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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ore/bridge.hpp"
#include "ore/poisson.hpp"
#include "ore/tower.hpp"

namespace ore {

enum class DocumentKind { tower, poisson, potential };

std::string_view to_string(DocumentKind kind);

/// A parsed .ore file. Exactly one of tower / poisson / potential is set,
/// matching kind. Towers come back as unvalidated relation tables.
struct Document {
    DocumentKind kind = DocumentKind::tower;
    CoeffMode mode;
    std::vector<std::string> names;
    std::optional<TowerPresentation> tower;
    std::optional<PoissonPresentation> poisson;
    std::optional<CommPoly> potential;

    friend bool operator==(const Document&, const Document&) = default;
};

struct ParseOptions {
    /// Precision for "coeff series" without prec=.
    int default_prec = kDefaultSeriesPrecision;
    /// Replaces every declared precision when set.
    std::optional<int> prec_override;
};

/// Line-oriented format:
///
///     # comment
///     kind tower | poisson | potential
///     coeff laurent | coeff series [prec=N]
///     vars <name>...
///     rel <lhs> = <rhs>                 (tower; solved for the unique x_j x_i with j > i)
///     bracket {<xj>, <xi>} = <expr>     (poisson)
///     h = <expr>                        (potential)
///
/// Expressions use + - * / ^, parentheses, juxtaposition for products,
/// the indeterminate t and, in series mode, cos/sin/sec/exp of an argument
/// vanishing at t = 1.
Document parse_document(std::string_view text, const ParseOptions& options = {});

/// Canonical text; parse_document(emit_text(d)) == d.
std::string emit_text(const Document& doc);

Document tower_document(const TowerPresentation& tower);
Document poisson_document(const PoissonPresentation& P);
Document potential_document(const CommPoly& h, const std::vector<std::string>& names);

/// An expression with no variables.
CoeffElem parse_coeff(std::string_view text, const CoeffMode& mode);
/// Any product order is accepted; the result is normalized by rewriting.
NCPoly parse_ncpoly(std::string_view text, const TowerPresentation& tower);
CommPoly parse_commpoly(std::string_view text, const std::vector<std::string>& names);
/// "<lhs> = <rhs>" solved as in a rel line, e.g. "F E = E F + (1/4)*(t - t^-1)*(H - K)".
LiftOverride parse_relation(std::string_view text, const std::vector<std::string>& names, const CoeffMode& mode);

}  // namespace ore
