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
#include <string>
#include <vector>

#include "ore/report.hpp"
#include "ore/tower.hpp"

namespace ore {

/// Checks ENDO1/ENDO2 for the extension adding x_k, assuming levels below k
/// are sound. Domain violations (u_ki outside A_i) are reported as DOMAIN
/// and stop the check. With use_shortcuts, two sufficient conditions skip
/// the pairwise work: every u through level k vanishes, or A_{k-1} is
/// commutative and every a_ki = 1.
ValidationReport validate_level(const TowerPresentation& tower, int k, bool use_shortcuts = true);

/// validate_level applied to `base` extended by one variable with the given data.
/// u_k entries may live in k-1 or k variables; one escaping A_i throws DomainError.
ValidationReport validate_extension(const TowerPresentation& base, const std::vector<CoeffElem>& a_k,
                                    const std::vector<NCPoly>& u_k);

/// Levels 2..n in order; stops at the first failing level.
ValidationReport validate_tower(const TowerPresentation& tower);

/// a_ji(1) = 1 and u_ji(1) = 0 for every pair.
ValidationReport check_con1(const TowerPresentation& tower);

/// Resolves every overlap x_k x_j x_i two ways with free_reduce. When all
/// overlaps agree, also compares free_reduce with the PBW engine on seeded
/// random words of length up to 3 + max_extra_degree.
ValidationReport diamond_check(const TowerPresentation& tower, int max_extra_degree = 4, int trials = 100,
                               std::uint64_t seed = 7);

/// nc_mul of random standard monomial pairs against free_reduce of the
/// concatenated word.
ValidationReport random_assoc_check(const TowerPresentation& tower, int trials = 100, int max_degree = 4,
                                    std::uint64_t seed = 7);

}  // namespace ore
