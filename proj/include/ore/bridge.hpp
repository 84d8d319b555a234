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

#include "ore/poisson.hpp"
#include "ore/tower.hpp"

namespace ore {

/// Requires a validated tower satisfying CON1; throws NotValidated or Con1Violation.
PoissonPresentation semiclassical_limit(const TowerPresentation& tower);

/// Coefficient-wise value at t = 1.
CommPoly limit_element(const TowerPresentation& tower, const NCPoly& f);

/// limit(scaled_commutator(f, g)) against the limit bracket, on generator
/// pairs and then seeded random monomial pairs of degree <= max_degree.
ValidationReport limit_bracket_compat(const TowerPresentation& tower, int random_trials = 20, int max_degree = 3,
                                      std::uint64_t seed = 7);

struct LiftOverride {
    int j = 0;
    int i = 0;
    CoeffElem a;
    NCPoly u;
};

/// How quantize lifts (c_ji, p_ji):
///   power        a = t^c (integer c)
///   affine       a = 1 + c (t - 1)
///   exp          a = exp(c (t - 1)), series mode only
///   linear       u = (t - 1) [p]
///   shifted(N)   u = (t - 1) t^N [p]
/// Text form "<a_rule>[+<u_rule>]", e.g. "power+shifted(2)" or "affine".
struct LiftStrategy {
    enum class ARule { automatic, power, affine, exp };
    enum class URule { linear, shifted };

    ARule a_rule = ARule::automatic;
    URule u_rule = URule::linear;
    int shift = 0;
    /// Unset means Laurent unless the exp rule asks for series.
    std::optional<CoeffMode> mode;
    std::vector<LiftOverride> overrides;

    static LiftStrategy parse(std::string_view text);
    std::string to_string() const;
};

/// Builds and validates the lifted tower; verifies its limit is P again.
/// Throws LiftValidationFailure carrying the failing report, or InvalidStrategy.
TowerPresentation quantize(const PoissonPresentation& P, const LiftStrategy& strategy = {});

struct DeformedRelation {
    int j = 0;
    int i = 0;
    Scalar a;
    CommPoly u;  // standard monomials with rational coefficients
};

/// x_j x_i = a x_i x_j + u over Q, for every pair i < j.
struct DeformedPresentation {
    std::vector<std::string> names;
    Scalar q;
    std::vector<DeformedRelation> relations;

    const DeformedRelation& relation(int j, int i) const;
};

DeformedPresentation deform(const TowerPresentation& tower, const Scalar& q);

/// "x2*x1 - 3*x1*x2 = 0".
std::string format_relation(const DeformedPresentation& D, const DeformedRelation& r);

}  // namespace ore
