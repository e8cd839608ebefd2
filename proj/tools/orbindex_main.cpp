// Command-line front end: evaluates orbital, higher-orbital and
// non-semisimple index contributions for the catalog groups, and assembles
// the finite-volume index from user-supplied Gamma constants.

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <sstream>

#include "orbindex/errors.hpp"
#include "orbindex/json_io.hpp"

namespace {

using namespace orbindex;

struct Options {
    std::string group;
    std::string group_file;
    std::string lambda;
    std::string element_json;
    std::string gamma_file;
    std::string mode = "orbital";
    std::string levi;
    std::string format = "text";
    std::string sign_flag = "minus";
    std::string bernoulli_mode = "classical";
    std::string lambda_norm = "restricted";
    std::string rem_subscript = "display";
    std::string catalog_dir;
    bool diagnostics = false;
};

WeightVec parse_lambda(const std::string& text, int rank) {
    std::vector<Rat> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            coords.push_back(parse_rational(part));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad --lambda entry: ") + e.what());
        }
    }
    if (static_cast<int>(coords.size()) != rank)
        throw UsageError("--lambda needs " + std::to_string(rank) + " comma-separated rationals");
    return WeightVec(std::move(coords));
}

Json complex_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

void emit(const Options& opt, const Json& out) {
    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : out.items()) {
        if (key == "diagnostics" && !opt.diagnostics) continue;
        std::cout << key << ": " << value.dump() << "\n";
    }
}

int run(const Options& opt) {
    CatalogEntry entry = !opt.group_file.empty() ? load_group_file(opt.group_file)
                                                 : catalog_lookup(opt.group, opt.catalog_dir);
    if (opt.lambda.empty()) throw UsageError("--lambda is required");
    DiracInput input(entry.pair, parse_lambda(opt.lambda, entry.pair.rank));

    const DenomSign sign = opt.sign_flag == "plus" ? DenomSign::PlusExp : DenomSign::MinusExp;
    AssembleOptions aopts;
    aopts.display_sign = sign;
    aopts.bernoulli = opt.bernoulli_mode == "modern" ? BernoulliConvention::Modern
                                                     : BernoulliConvention::Classical;
    aopts.lambda_norm = opt.lambda_norm == "highest-weight" ? LambdaNormSource::HighestWeight
                                                            : LambdaNormSource::RestrictedRoot;
    aopts.rem_subscript =
        opt.rem_subscript == "prose" ? RemSubscript::Prose : RemSubscript::Display;

    Json out;
    out["group"] = entry.pair.name;
    out["lambda"] = weight_to_json(input.lambda);
    out["mode"] = opt.mode;

    if (opt.mode == "orbital" || opt.mode == "higher") {
        if (opt.element_json.empty()) throw UsageError("--element is required for this mode");
        Json ej;
        try {
            ej = Json::parse(opt.element_json);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError(std::string("bad --element JSON: ") + e.what());
        }
        ElementDescriptor el = classify_element(entry.pair, element_from_json(ej));
        out["element"] = element_to_json(el);
        if (el.torus) {
            std::vector<WeightVec> root_vectors;
            for (const auto& r : entry.pair.roots) root_vectors.push_back(r.vec);
            out["element_order"] = torus_order(*el.torus, root_vectors);
        }
        if (opt.mode == "orbital") {
            if (el.kind == ElementDescriptor::Kind::Elliptic) {
                SsContribution c = tau_elliptic(input, *el.torus, sign);
                out["value"] = complex_json(c.value);
                out["diagnostics"] = contribution_to_json(c);
            } else {
                out["value"] = complex_json(tau_semisimple(input, el, sign));
            }
        } else {
            if (opt.levi.empty()) throw UsageError("--levi is required for higher mode");
            const LeviData& levi = entry.levi(opt.levi);
            out["levi"] = levi.name;
            out["maximal"] = levi.maximal;
            out["value"] = complex_json(higher_pairing(input, levi, el, sign));
            if (levi.maximal) {
                Json terms = Json::array();
                for (const auto& t : mU_decomposition(input, levi)) {
                    Json jt;
                    jt["lambda_U"] = weight_to_json(t.lambda_U);
                    jt["m_U"] = t.mult;
                    terms.push_back(std::move(jt));
                }
                out["diagnostics"] =
                    Json{{"m_U_terms", std::move(terms)},
                         {"knm_spin_character",
                          laurent_to_json(knm_spin_character(entry.pair, levi))}};
            }
        }
        emit(opt, out);
        return 0;
    }

    if (opt.mode == "nonss" || opt.mode == "assemble") {
        GammaData gd;
        if (!opt.gamma_file.empty()) gd = gamma_from_json(load_json_file(opt.gamma_file));
        if (!entry.rank_one)
            throw NotSupported("group '" + entry.pair.name + "' has no rank-one data");
        if (opt.mode == "nonss") {
            // The four parts are evaluated independently: a part that is
            // undefined for this input (singular remainder branch, missing
            // Gamma constants) is reported in-field and does not block the
            // others.
            auto term = [&out](const char* key, auto&& compute) {
                try {
                    out[key] = compute();
                } catch (const Error& e) {
                    out[key] = Json{{"error", e.what()}};
                }
            };
            term("tau_n0_term", [&] {
                return tau_n0_contribution(input, *entry.rank_one, gd, aopts.bernoulli,
                                           aopts.lambda_norm);
            });
            term("tau_lambda_term", [&] { return tau_lambda_contribution(); });
            term("tau_res_value", [&] { return tau_res_contribution(input, gd); });
            term("tau_rem_term", [&] {
                return tau_rem_contribution(input, *entry.rank_one, gd, aopts.rem_subscript);
            });
            emit(opt, out);
            return 0;
        }
        IndexReport report = assemble_index(input, entry, gd, aopts);
        emit(opt, report_to_json(report));
        return 0;
    }
    throw UsageError("unknown mode '" + opt.mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluator of index pairings on finite-volume locally symmetric spaces"};
    Options opt;
    app.add_option("--group", opt.group, "catalog group name (su11, su21, su31, su41, su22, su32, so21, so41, so61)");
    app.add_option("--group-file", opt.group_file, "path to a group specification JSON");
    app.add_option("--lambda", opt.lambda, "highest weight, comma-separated rationals");
    app.add_option("--element", opt.element_json, "element JSON, e.g. '{\"type\":\"central\",\"X\":[\"0\",\"0\"]}'");
    app.add_option("--gamma-file", opt.gamma_file, "path to a Gamma constants JSON");
    app.add_option("--mode", opt.mode, "orbital | higher | nonss | assemble")
        ->check(CLI::IsMember({"orbital", "higher", "nonss", "assemble"}));
    app.add_option("--levi", opt.levi, "levi name for higher mode");
    app.add_option("--format", opt.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--diagnostics", opt.diagnostics, "include per-coset / per-term diagnostics");
    app.add_option("--sign-flag", opt.sign_flag, "display denominator convention: minus | plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    app.add_option("--bernoulli", opt.bernoulli_mode, "classical | modern")
        ->check(CLI::IsMember({"classical", "modern"}));
    app.add_option("--lambda-norm", opt.lambda_norm, "restricted | highest-weight")
        ->check(CLI::IsMember({"restricted", "highest-weight"}));
    app.add_option("--rem-subscript", opt.rem_subscript, "display | prose")
        ->check(CLI::IsMember({"display", "prose"}));
    app.add_option("--catalog-dir", opt.catalog_dir, "override the catalog directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; malformed flags exit 2.
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (opt.group.empty() && opt.group_file.empty()) {
        std::cerr << "error: one of --group or --group-file is required\n";
        return 2;
    }

    try {
        return run(opt);
    } catch (const orbindex::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const orbindex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
