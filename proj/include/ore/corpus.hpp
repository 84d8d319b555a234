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
#include <vector>

#include "ore/bridge.hpp"
#include "ore/dsl.hpp"

namespace ore {

/// Parameters shared by parametrized corpus entries; each entry reads only
/// the fields it needs.
struct CorpusParams {
    int k = 1;                  // weyl, trigweyl, pweyl: 2k variables
    int n = 3;                  // qplane, pplane
    std::vector<Scalar> lambda; // lwz32: l11 l21 l22; lwz33: l11 l21 l22 l31 l32; torus: l
    std::vector<int> shift;     // lwz32/lwz33: N for f = (t - 1) t^N, same order as lambda
    int prec = 12;              // trigweyl
};

/// Tower entries: weyl, trigweyl, uqsl2, uqsl2_s3, qplane, qmat2, lwz32, lwz33, torus.
/// Poisson entries: pweyl, psl2, pmmo, pplane, pmat2, plwz32, plwz33, ptorus.
/// Potential entries: potential_mmo.
std::vector<std::string> corpus_names();
std::vector<std::string> corpus_tower_names();
std::vector<std::string> corpus_poisson_names();

/// Throws UnknownCorpusEntry, or AlgebraMismatch for parameters out of range.
Document corpus(std::string_view name, const CorpusParams& params = {});

/// Validated tower for a tower entry.
TowerPresentation corpus_tower(std::string_view name, const CorpusParams& params = {});
PoissonPresentation corpus_poisson(std::string_view name, const CorpusParams& params = {});
CommPoly corpus_potential(std::string_view name);

/// Tower entry whose limit is the given Poisson entry.
std::string companion_tower_name(std::string_view poisson_name);
/// The lift strategy under which quantize reproduces the entry's companion tower.
LiftStrategy designated_strategy(std::string_view poisson_name, const CorpusParams& params = {});

}  // namespace ore
