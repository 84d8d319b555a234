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

#include "ore/json.hpp"

#include "ore/format.hpp"

namespace ore {

using nlohmann::ordered_json;

namespace {

ordered_json mode_json(const CoeffMode& mode) {
    ordered_json out;
    out["kind"] = mode.is_series() ? "series" : "laurent";
    if (mode.is_series()) out["prec"] = mode.prec;
    return out;
}

}  // namespace

ordered_json to_json(const ValidationReport& report, const std::vector<std::string>& names) {
    ordered_json out;
    out["ok"] = report.ok();
    out["failures"] = ordered_json::array();
    for (const Failure& f : report.failures) {
        ordered_json item;
        item["kind"] = std::string(to_string(f.kind));
        item["indices"] = f.indices;
        item["lhs"] = format_value(f.lhs, names);
        item["rhs"] = format_value(f.rhs, names);
        item["detail"] = f.detail;
        out["failures"].push_back(std::move(item));
    }
    out["warnings"] = report.warnings;
    return out;
}

ordered_json to_json(const TowerPresentation& tower) {
    ordered_json out;
    out["names"] = tower.names();
    out["mode"] = mode_json(tower.mode());
    out["validated"] = tower.validated();
    ordered_json a = ordered_json::array(), u = ordered_json::array();
    for (int j = 1; j <= static_cast<int>(tower.size()); ++j) {
        ordered_json arow = ordered_json::array(), urow = ordered_json::array();
        for (int i = 1; i < j; ++i) {
            arow.push_back(format_coeff(tower.a(j, i)));
            urow.push_back(format_ncpoly(tower.u(j, i), tower.names()));
        }
        a.push_back(std::move(arow));
        u.push_back(std::move(urow));
    }
    out["a"] = std::move(a);
    out["u"] = std::move(u);
    return out;
}

ordered_json to_json(const PoissonPresentation& P) {
    ordered_json out;
    out["names"] = P.names();
    ordered_json c = ordered_json::array(), p = ordered_json::array();
    for (int j = 1; j <= static_cast<int>(P.size()); ++j) {
        ordered_json crow = ordered_json::array(), prow = ordered_json::array();
        for (int i = 1; i < j; ++i) {
            crow.push_back(to_string(P.c(j, i)));
            prow.push_back(format_commpoly(P.p(j, i), P.names()));
        }
        c.push_back(std::move(crow));
        p.push_back(std::move(prow));
    }
    out["c"] = std::move(c);
    out["p"] = std::move(p);
    return out;
}

ordered_json to_json(const DeformedPresentation& D) {
    ordered_json out;
    out["names"] = D.names;
    out["q"] = to_string(D.q);
    out["relations"] = ordered_json::array();
    for (const DeformedRelation& r : D.relations) {
        ordered_json item;
        item["j"] = r.j;
        item["i"] = r.i;
        item["a"] = to_string(r.a);
        item["u"] = format_commpoly(r.u, D.names);
        item["text"] = format_relation(D, r);
        out["relations"].push_back(std::move(item));
    }
    return out;
}

ordered_json to_json(const PotentialClassification& c, const std::vector<std::string>& names) {
    ordered_json out;
    out["matches"] = c.matches;
    if (c.matches) {
        out["lambda"] = to_string(c.lambda);
        out["mu"] = to_string(c.mu);
        out["f1"] = format_commpoly(c.f1, names);
        out["f2"] = format_commpoly(c.f2, names);
        if (c.presentation) out["presentation"] = to_json(*c.presentation);
    }
    return out;
}

ordered_json to_json(const Document& doc) {
    ordered_json out;
    out["kind"] = std::string(to_string(doc.kind));
    if (doc.tower) out["tower"] = to_json(*doc.tower);
    if (doc.poisson) out["poisson"] = to_json(*doc.poisson);
    if (doc.potential) {
        out["names"] = doc.names;
        out["h"] = format_commpoly(*doc.potential, doc.names);
    }
    return out;
}

}  // namespace ore
