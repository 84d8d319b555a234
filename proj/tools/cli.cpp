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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ore/bridge.hpp"
#include "ore/corpus.hpp"
#include "ore/dsl.hpp"
#include "ore/errors.hpp"
#include "ore/format.hpp"
#include "ore/json.hpp"
#include "ore/pbw.hpp"
#include "ore/validate.hpp"

namespace ore::cli {

namespace {

struct Source {
    std::string file;
    int k = 1;
    int n = 3;
    std::string lambda;
    std::string shift;
};

struct Globals {
    bool json = false;
    int prec = 0;  // 0: not given
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int env_prec() {
    const char* value = std::getenv("ORE_PREC");
    if (value == nullptr || *value == '\0') return 0;
    char* end = nullptr;
    const long p = std::strtol(value, &end, 10);
    if (*end != '\0' || p < 1 || p > 100000) throw Error("ORE_PREC must be a positive integer");
    return static_cast<int>(p);
}

Document load(const Source& src, const Globals& g) {
    const int env = env_prec();
    if (src.file.rfind("corpus:", 0) == 0) {
        CorpusParams params;
        params.k = src.k;
        params.n = src.n;
        for (const std::string& l : split_list(src.lambda)) params.lambda.push_back(parse_scalar(l));
        for (const std::string& s : split_list(src.shift)) params.shift.push_back(std::stoi(s));
        if (g.prec > 0) {
            params.prec = g.prec;
        } else if (env > 0) {
            params.prec = env;
        }
        return corpus(src.file.substr(7), params);
    }
    std::ifstream in(src.file);
    if (!in) throw ParseError("cannot open '" + src.file + "'", SourceSpan{});
    std::stringstream buffer;
    buffer << in.rdbuf();
    ParseOptions options;
    if (env > 0) options.default_prec = env;
    if (g.prec > 0) options.prec_override = g.prec;
    return parse_document(buffer.str(), options);
}

const TowerPresentation& require_tower(const Document& doc) {
    if (!doc.tower) throw Error("this command needs a tower document");
    return *doc.tower;
}

const PoissonPresentation& require_poisson(const Document& doc) {
    if (!doc.poisson) throw Error("this command needs a poisson document");
    return *doc.poisson;
}

void print_report(std::ostream& out, const Globals& g, const ValidationReport& r,
                  const std::vector<std::string>& names) {
    if (g.json) {
        out << to_json(r, names).dump(2) << "\n";
    } else {
        out << format_report(r, names);
    }
}

int report_exit(const ValidationReport& r) { return r.ok() ? kOk : kValidationFailure; }

void add_source(CLI::App* cmd, Source& src) {
    cmd->add_option("file", src.file, "an .ore file or corpus:<name>")->required();
    cmd->add_option("--k", src.k, "corpus parameter k");
    cmd->add_option("--n", src.n, "corpus parameter n");
    cmd->add_option("--lambda", src.lambda, "corpus lambda values, comma separated");
    cmd->add_option("--shift", src.shift, "corpus shifts N, comma separated");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ore: iterated Ore extensions, semiclassical limits and quantizations"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "emit JSON");
    app.add_option("--prec", g.prec, "series precision override")->check(CLI::PositiveNumber);

    Source src;
    std::vector<std::string> exprs;
    std::string strategy;
    std::vector<std::string> overrides;
    std::string q_text;
    int degree = 4, trials = 100;
    std::uint64_t seed = 7;
    bool emit = false;

    auto* validate = app.add_subcommand("validate", "check a tower, Poisson or potential document");
    add_source(validate, src);
    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    add_source(nf, src);
    nf->add_option("-e,--expr", exprs, "expression")->required();
    auto* mul = app.add_subcommand("mul", "product of two expressions");
    add_source(mul, src);
    mul->add_option("-e,--expr", exprs, "expression (twice)")->required()->expected(2);
    auto* limit = app.add_subcommand("limit", "semiclassical limit of a tower");
    add_source(limit, src);
    auto* quant = app.add_subcommand("quantize", "lift a Poisson presentation to a tower");
    add_source(quant, src);
    quant->add_option("--strategy", strategy, "<a_rule>[+<u_rule>], e.g. power+shifted(2)");
    quant->add_option("--override", overrides, "explicit relation, e.g. \"F E = E F + (t - 1)*H\"");
    auto* def = app.add_subcommand("deform", "evaluate a tower at t = q");
    add_source(def, src);
    def->add_option("--q", q_text, "rational value of t")->required();
    auto* diamond = app.add_subcommand("diamond", "overlap and random-word check by rewriting");
    add_source(diamond, src);
    diamond->add_option("--degree", degree, "extra word length")->check(CLI::NonNegativeNumber);
    diamond->add_option("--trials", trials, "random words")->check(CLI::NonNegativeNumber);
    diamond->add_option("--seed", seed, "random seed");
    auto* central = app.add_subcommand("central", "test whether an element is central");
    add_source(central, src);
    central->add_option("-e,--expr", exprs, "expression")->required();
    auto* jacobi = app.add_subcommand("jacobi", "Jacobi and skew checks of a Poisson presentation");
    add_source(jacobi, src);
    auto* pot = app.add_subcommand("potential", "brackets and classification of a potential");
    add_source(pot, src);
    std::string corpus_name;
    auto* corp = app.add_subcommand("corpus", "built-in examples");
    corp->add_option("name", corpus_name, "entry name")->required();
    corp->add_option("--k", src.k, "parameter k");
    corp->add_option("--n", src.n, "parameter n");
    corp->add_option("--lambda", src.lambda, "lambda values, comma separated");
    corp->add_option("--shift", src.shift, "shifts N, comma separated");
    corp->add_flag("--emit", emit, "print the .ore text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    std::vector<std::string> report_names;
    try {
        if (*corp) {
            src.file = "corpus:" + corpus_name;
            const Document doc = load(src, g);
            if (emit) {
                out << emit_text(doc);
            } else if (g.json) {
                out << to_json(doc).dump(2) << "\n";
            } else {
                out << "kind " << to_string(doc.kind) << ", " << doc.names.size() << " variables\n";
                out << emit_text(doc);
            }
            return kOk;
        }

        const Document doc = load(src, g);
        const std::vector<std::string>& names = doc.names;
        report_names = names;

        if (*validate) {
            ValidationReport r;
            if (doc.tower) {
                r = validate_tower(*doc.tower);
            } else if (doc.poisson) {
                r = poisson_to_tower_structure(*doc.poisson).report;
            } else {
                const PotentialClassification c = classify_potential(*doc.potential, names);
                if (c.presentation) r = jacobi_check(*c.presentation);
            }
            print_report(out, g, r, names);
            return report_exit(r);
        }
        if (*nf || *central || *mul) {
            const TowerPresentation tower = build_tower(require_tower(doc));
            std::vector<NCPoly> values;
            for (const std::string& e : exprs) values.push_back(parse_ncpoly(e, tower));
            if (*central) {
                const bool c = is_central(tower, values.front());
                out << (g.json ? (c ? "{\"central\": true}" : "{\"central\": false}") : (c ? "true" : "false")) << "\n";
                return kOk;
            }
            const NCPoly result = *mul ? nc_mul(tower, values[0], values[1]) : values.front();
            if (g.json) {
                nlohmann::ordered_json j;
                j["result"] = format_ncpoly(result, names);
                out << j.dump(2) << "\n";
            } else {
                out << format_ncpoly(result, names) << "\n";
            }
            return kOk;
        }
        if (*limit) {
            const PoissonPresentation P = semiclassical_limit(build_tower(require_tower(doc)));
            out << (g.json ? to_json(P).dump(2) + "\n" : emit_text(poisson_document(P)));
            return kOk;
        }
        if (*quant) {
            const PoissonPresentation& P = require_poisson(doc);
            LiftStrategy s = LiftStrategy::parse(strategy);
            if (s.a_rule == LiftStrategy::ARule::exp) {
                const int env = env_prec();
                s.mode = CoeffMode::series(g.prec > 0 ? g.prec : env > 0 ? env : kDefaultSeriesPrecision);
            }
            const CoeffMode mode = s.mode.value_or(CoeffMode::laurent());
            for (const std::string& o : overrides) s.overrides.push_back(parse_relation(o, names, mode));
            const TowerPresentation T = quantize(P, s);
            out << (g.json ? to_json(T).dump(2) + "\n" : emit_text(tower_document(T)));
            return kOk;
        }
        if (*def) {
            const DeformedPresentation D = deform(build_tower(require_tower(doc)), parse_scalar(q_text));
            if (g.json) {
                out << to_json(D).dump(2) << "\n";
            } else {
                for (const DeformedRelation& r : D.relations) out << format_relation(D, r) << "\n";
            }
            return kOk;
        }
        if (*diamond) {
            const ValidationReport r = diamond_check(require_tower(doc), degree, trials, seed);
            print_report(out, g, r, names);
            return report_exit(r);
        }
        if (*jacobi) {
            const ValidationReport r = poisson_to_tower_structure(require_poisson(doc)).report;
            print_report(out, g, r, names);
            return report_exit(r);
        }
        if (*pot) {
            if (!doc.potential) throw Error("this command needs a potential document");
            const CommPoly& h = *doc.potential;
            const PotentialClassification c = classify_potential(h, names);
            if (g.json) {
                out << to_json(c, names).dump(2) << "\n";
            } else {
                for (int j = 2; j <= 3; ++j) {
                    for (int i = 1; i < j; ++i) {
                        const CommPoly b = bracket_from_potential(h, CommPoly::variable(3, j), CommPoly::variable(3, i));
                        out << "{" << names[static_cast<std::size_t>(j - 1)] << ", "
                            << names[static_cast<std::size_t>(i - 1)] << "} = " << format_commpoly(b, names) << "\n";
                    }
                }
                if (c.matches) {
                    out << "matches: lambda = " << to_string(c.lambda) << ", mu = " << to_string(c.mu)
                        << ", f1 = " << format_commpoly(c.f1, names) << ", f2 = " << format_commpoly(c.f2, names)
                        << "\n";
                } else {
                    out << "no match\n";
                }
            }
            return kOk;
        }
    } catch (const ReportError& e) {
        err << "error: " << e.what() << "\n";
        print_report(out, g, e.report(), report_names);
        return kValidationFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kArithmeticError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kArithmeticError;
    }
    return kOk;
}

}  // namespace ore::cli
