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

#include <json.hpp>

#include "ore/bridge.hpp"
#include "ore/dsl.hpp"
#include "ore/report.hpp"

namespace ore {

/// {ok, failures: [{kind, indices, lhs, rhs, detail}], warnings}
nlohmann::ordered_json to_json(const ValidationReport& report, const std::vector<std::string>& names);

/// {names, mode, validated, a: [[...]], u: [[...]]}; row j-1 lists i = 1..j-1.
nlohmann::ordered_json to_json(const TowerPresentation& tower);

/// {names, c: [[...]], p: [[...]]}; row j-1 lists i = 1..j-1.
nlohmann::ordered_json to_json(const PoissonPresentation& P);

/// {names, q, relations: [{j, i, a, u, text}]}
nlohmann::ordered_json to_json(const DeformedPresentation& D);

nlohmann::ordered_json to_json(const PotentialClassification& c, const std::vector<std::string>& names);

nlohmann::ordered_json to_json(const Document& doc);

}  // namespace ore
