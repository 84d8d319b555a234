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

#include "ore/report.hpp"

#include <algorithm>

namespace ore {

std::string_view to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::endo1: return "ENDO1";
        case FailureKind::endo2: return "ENDO2";
        case FailureKind::con1: return "CON1";
        case FailureKind::diamond: return "DIAMOND";
        case FailureKind::domain: return "DOMAIN";
        case FailureKind::jacobi: return "JACOBI";
        case FailureKind::skew: return "SKEW";
        case FailureKind::poisson_derivation: return "PDERIV";
        case FailureKind::compat: return "COMPAT";
        case FailureKind::mder: return "MDER";
    }
    return "UNKNOWN";
}

void ValidationReport::append(const ValidationReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool ValidationReport::has_failure(FailureKind kind, const std::vector<int>& indices) const {
    return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) {
        return f.kind == kind && f.indices == indices;
    });
}

bool ValidationReport::has_failure(FailureKind kind) const {
    return std::any_of(failures.begin(), failures.end(),
                       [&](const Failure& f) { return f.kind == kind; });
}

}  // namespace ore
