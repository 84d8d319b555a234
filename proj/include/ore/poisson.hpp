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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ore/commpoly.hpp"
#include "ore/report.hpp"

namespace ore {

/// Poisson polynomial algebra B_n = Q[x_1..x_n] with
/// {x_j, x_i} = c_ji x_i x_j + p_ji for i < j, where p_ji lies in B_i.
class PoissonPresentation {
public:
    PoissonPresentation() = default;
    explicit PoissonPresentation(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(std::string_view name) const;

    const Scalar& c(int j, int i) const;
    const CommPoly& p(int j, int i) const;
    /// Throws DomainError when p escapes B_i.
    void set_bracket(int j, int i, const Scalar& c, CommPoly p);

    /// {x_j, x_i} for any j != i.
    CommPoly generator_bracket(int j, int i) const;

    friend bool operator==(const PoissonPresentation&, const PoissonPresentation&) = default;

private:
    void check_pair(int j, int i) const;

    std::vector<std::string> names_;
    std::vector<std::vector<Scalar>> c_;
    std::vector<std::vector<CommPoly>> p_;
};

CommPoly pbracket(const PoissonPresentation& P, const CommPoly& f, const CommPoly& g);

/// Jacobiator on all generator triples (reported as (i, j, k) ascending),
/// followed by `random_trials` seeded polynomial triples.
ValidationReport jacobi_check(const PoissonPresentation& P, int random_trials = 20, std::uint64_t seed = 7);

/// For alpha_k = sum c_ki x_i d/dx_i and delta_k = sum p_ki d/dx_i on B_{k-1}:
/// alpha_k is a Poisson derivation (PDERIV) and the skew condition holds (SKEW),
/// on generator pairs and then `random_trials` seeded polynomial pairs.
ValidationReport skew_check(const PoissonPresentation& P, int k, int random_trials = 20, std::uint64_t seed = 7);

/// det of the Jacobian rows (grad h, grad f, grad g) in three variables.
/// Throws DegreeTooHigh when deg h > 3.
CommPoly bracket_from_potential(const CommPoly& h, const CommPoly& f, const CommPoly& g);

struct PotentialClassification {
    bool matches = false;
    Scalar lambda;
    Scalar mu;
    CommPoly f1;  // polynomial in x1
    CommPoly f2;  // polynomial in x1 without constant term
    std::optional<PoissonPresentation> presentation;
};

/// Recognizes h = lambda x1 x2 x3 + mu x3 + f1(x1) x2 + f2(x1) + const.
PotentialClassification classify_potential(const CommPoly& h,
                                           const std::vector<std::string>& names = {"x1", "x2", "x3"});

struct PoissonLevel {
    int k = 0;
    std::vector<Scalar> alpha;    // alpha_k(x_i) = alpha[i-1] x_i
    std::vector<CommPoly> delta;  // delta_k(x_i) = delta[i-1]
};

struct PoissonTowerStructure {
    std::vector<PoissonLevel> levels;
    ValidationReport report;
};

PoissonTowerStructure poisson_to_tower_structure(const PoissonPresentation& P);

}  // namespace ore
