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
#include <vector>

#include "ore/commpoly.hpp"
#include "ore/ncpoly.hpp"
#include "ore/report.hpp"

namespace ore {

/// x1 .. xn.
std::vector<std::string> default_names(std::size_t nvars);

/// Laurent elements in descending powers of t ("t^2 - 1", "(1/4)*t - (1/4)*t^-1");
/// series elements in ascending powers of (t - 1).
std::string format_coeff(const CoeffElem& c);

/// Terms in descending graded-lex order, e.g. "(1/4)*(t - t^-1)*H - (1/4)*(t - t^-1)*K".
std::string format_ncpoly(const NCPoly& f, const std::vector<std::string>& names);
std::string format_ncpoly(const NCPoly& f);

std::string format_commpoly(const CommPoly& f, const std::vector<std::string>& names);
std::string format_commpoly(const CommPoly& f);

/// Monomial as "H*E^2"; "1" for the unit monomial.
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names, const char* sep = "*");

std::string format_value(const ReportValue& v, const std::vector<std::string>& names);

/// Multi-line human summary of a report.
std::string format_report(const ValidationReport& report, const std::vector<std::string>& names);

}  // namespace ore
