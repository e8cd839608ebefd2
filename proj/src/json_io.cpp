#include "orbindex/json_io.hpp"

#include <fstream>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw UsageError(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw UsageError(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<double> double_list(const Json& j, const char* what) {
    if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) throw UsageError(std::string(what) + " must hold numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::complex<double> complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw UsageError("complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

RankOneData rank_one_from_json(const Json& j, const SymmetricPair& pair) {
    RankOneData d;
    d.dim_n_lambda = require(j, "dim_n_lambda").get<int>();
    d.dim_n_2lambda = require(j, "dim_n_2lambda").get<int>();
    if (d.dim_n_lambda < 0 || d.dim_n_2lambda < 0)
        throw UsageError("restricted root space dimensions must be nonnegative");
    d.lambda_res_norm_sq = rational_from_json(require(j, "lambda_res_norm_sq"));
    if (j.contains("su_family_n") && !j["su_family_n"].is_null())
        d.su_family_n = j["su_family_n"].get<int>();
    if (j.contains("z0") && !j["z0"].is_null()) d.z0 = weight_from_json(j["z0"]);
    d.zvec = weight_from_json(require(j, "zvec"));
    if (j.contains("rplus0")) d.rplus0 = int_list(j["rplus0"], "rplus0");
    if (j.contains("real_hyperbolic_dim") && !j["real_hyperbolic_dim"].is_null())
        d.real_hyperbolic_dim = j["real_hyperbolic_dim"].get<int>();
    d.wm_positive_indices = int_list(require(j, "wm_root_indices"), "wm_root_indices");

    const int m_rank = require(j, "m_rank").get<int>();
    BilinearForm m_form = BilinearForm::identity(m_rank);
    if (j.contains("m_gram")) {
        m_form.gram.clear();
        for (const auto& row : j["m_gram"])
            for (const auto& e : row) m_form.gram.push_back(rational_from_json(e));
        if (m_form.gram.size() != static_cast<size_t>(m_rank) * m_rank)
            throw UsageError("m_gram has wrong shape");
    }
    std::vector<WeightVec> m_simple;
    for (const auto& e : require(j, "m_simple_roots")) m_simple.push_back(weight_from_json(e));
    std::vector<WeightVec> m_positives;
    if (!m_simple.empty()) {
        for (const auto& r : generate_root_system(m_simple, m_form))
            if (r.positive) m_positives.push_back(r.vec);
    }
    auto compact_indices = int_list(require(j, "m_compact_roots"), "m_compact_roots");
    std::vector<bool> compact(m_positives.size(), false);
    for (int idx : compact_indices) {
        if (idx < 0 || static_cast<size_t>(idx) >= m_positives.size())
            throw UsageError("m_compact_roots index out of range");
        compact[idx] = true;
    }
    d.m_pair = SymmetricPair::assemble(pair.name + ":M", m_rank, m_form, std::move(m_positives),
                                       std::move(compact));

    for (const auto& row : require(j, "restriction")) d.restriction.push_back(weight_from_json(row));
    if (d.restriction.size() != static_cast<size_t>(m_rank))
        throw UsageError("restriction must have m_rank rows");
    for (const auto& row : d.restriction)
        if (row.rank() != pair.rank) throw UsageError("restriction rows must have ambient rank");

    if (pair.dim_GK != d.dim_n_lambda + d.dim_n_2lambda + 1)
        throw UsageError("rank-one data inconsistent: dim(G/K) != dim n_lambda + dim n_2lambda + 1");
    return d;
}

}  // namespace

Rat rational_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad rational: ") + e.what());
    }
    throw UsageError("rationals must be \"p/q\" strings or integers");
}

WeightVec weight_from_json(const Json& j) {
    if (!j.is_array()) throw UsageError("weights must be arrays of rationals");
    std::vector<Rat> coords;
    for (const auto& e : j) coords.push_back(rational_from_json(e));
    return WeightVec(std::move(coords));
}

CatalogEntry catalog_from_json(const Json& j) {
    CatalogEntry entry;
    const std::string name = require(j, "name").get<std::string>();
    const int rank = require(j, "rank").get<int>();

    BilinearForm form;
    form.rank = rank;
    for (const auto& row : require(j, "gram"))
        for (const auto& e : row) form.gram.push_back(rational_from_json(e));
    if (form.gram.size() != static_cast<size_t>(rank) * rank)
        throw UsageError("gram matrix has wrong shape");

    std::vector<WeightVec> simple;
    for (const auto& e : require(j, "simple_roots")) {
        WeightVec v = weight_from_json(e);
        if (v.rank() != rank) throw UsageError("simple root rank mismatch");
        simple.push_back(std::move(v));
    }
    auto roots = generate_root_system(simple, form);
    std::vector<WeightVec> positives;
    for (const auto& r : roots)
        if (r.positive) positives.push_back(r.vec);
    std::vector<bool> compact(positives.size(), false);
    for (int idx : int_list(require(j, "compact_roots"), "compact_roots")) {
        if (idx < 0 || static_cast<size_t>(idx) >= positives.size())
            throw UsageError("compact root index out of range");
        compact[idx] = true;
    }
    const bool equal_rank = j.value("equal_rank", true);
    entry.pair =
        SymmetricPair::assemble(name, rank, std::move(form), std::move(positives),
                                std::move(compact), equal_rank);

    if (j.contains("dim_gk") && j["dim_gk"].get<int>() != entry.pair.dim_GK)
        throw InvalidRootDatum("catalog dim_gk = " + std::to_string(j["dim_gk"].get<int>()) +
                               " but the pair has " + std::to_string(entry.pair.dim_GK));
    if (auto violations = validate_pair(entry.pair); !violations.empty()) {
        std::string msg = "group '" + name + "' fails validation:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw InvalidRootDatum(msg);
    }

    if (j.contains("levis"))
        for (const auto& l : j["levis"]) {
            LeviData levi;
            levi.name = require(l, "name").get<std::string>();
            levi.m_positive_indices = int_list(require(l, "m_root_indices"), "m_root_indices");
            levi.maximal = require(l, "maximal").get<bool>();
            levi_pair(entry.pair, levi);  // validates closure and indices
            entry.levis.push_back(std::move(levi));
        }
    if (j.contains("rank_one") && !j["rank_one"].is_null())
        entry.rank_one = rank_one_from_json(j["rank_one"], entry.pair);
    if (j.contains("notes"))
        for (const auto& n : j["notes"]) entry.notes.push_back(n.get<std::string>());
    return entry;
}

GammaData gamma_from_json(const Json& j) {
    GammaData gd;
    gd.l = require(j, "l").get<long>();
    if (gd.l < 0) throw UsageError("l must be nonnegative");
    if (j.contains("cusp_volume_ratios"))
        gd.cusp_volume_ratios = double_list(j["cusp_volume_ratios"], "cusp_volume_ratios");
    gd.C_lambda = j.value("C_lambda", 0.0);
    gd.C_2lambda = j.value("C_2lambda", 0.0);
    if (j.contains("ss_classes"))
        for (const auto& c : j["ss_classes"]) {
            SsClass cls;
            // Element is validated against the group later, at evaluation time.
            RawElementSpec raw = element_from_json(require(c, "element"));
            cls.element.kind = raw.type == "central"    ? ElementDescriptor::Kind::Central
                               : raw.type == "elliptic" ? ElementDescriptor::Kind::Elliptic
                                                        : ElementDescriptor::Kind::Hyperbolic;
            if (raw.X) cls.element.torus = TorusElement{*raw.X};
            cls.volume = require(c, "vol").get<double>();
            if (cls.volume < 0) throw UsageError("class volumes must be nonnegative");
            gd.ss_classes.push_back(std::move(cls));
        }
    if (j.contains("residual_traces"))
        gd.residual_traces = double_list(j["residual_traces"], "residual_traces");
    return gd;
}

RawElementSpec element_from_json(const Json& j) {
    RawElementSpec raw;
    raw.type = require(j, "type").get<std::string>();
    if (raw.type != "central" && raw.type != "elliptic" && raw.type != "hyperbolic")
        throw UsageError("element type must be central, elliptic or hyperbolic");
    if (j.contains("X") && !j["X"].is_null()) raw.X = weight_from_json(j["X"]);
    return raw;
}

Json weight_to_json(const WeightVec& v) {
    Json out = Json::array();
    for (const auto& c : v.coords) out.push_back(rational_string(c));
    return out;
}

Json element_to_json(const ElementDescriptor& el) {
    Json out;
    switch (el.kind) {
        case ElementDescriptor::Kind::Central: out["type"] = "central"; break;
        case ElementDescriptor::Kind::Elliptic: out["type"] = "elliptic"; break;
        case ElementDescriptor::Kind::Hyperbolic: out["type"] = "hyperbolic"; break;
    }
    if (el.torus) out["X"] = weight_to_json(el.torus->X);
    return out;
}

Json laurent_to_json(const LaurentChar& chi) {
    Json out = Json::array();
    for (const auto& [w, c] : chi.terms()) {
        Json term;
        term["weight"] = weight_to_json(w);
        term["coeff"] = c;
        out.push_back(std::move(term));
    }
    return out;
}

Json contribution_to_json(const SsContribution& c) {
    Json out;
    out["value"] = complex_to_json(c.value);
    out["display_value"] = complex_to_json(c.display_value);
    out["display_sign"] = c.display_sign == DenomSign::MinusExp ? "minus" : "plus";
    out["common_denominator"] = complex_to_json(c.common_denominator);
    Json terms = Json::array();
    for (const auto& [w, v] : c.per_coset_terms) {
        Json t;
        t["length"] = w.length;
        t["det"] = w.det;
        t["term"] = complex_to_json(v);
        terms.push_back(std::move(t));
    }
    out["per_coset_terms"] = std::move(terms);
    return out;
}

Json report_to_json(const IndexReport& r) {
    Json out;
    out["group"] = r.group;
    out["lambda"] = weight_to_json(r.lambda);
    Json ss = Json::array();
    for (const auto& t : r.ss_terms) {
        Json e;
        e["element"] = element_to_json(t.element);
        e["vol"] = t.volume;
        e["value"] = complex_to_json(t.value);
        e["weighted"] = complex_to_json(t.volume * t.value);
        ss.push_back(std::move(e));
    }
    out["semisimple_terms"] = std::move(ss);
    out["tau_n0_term"] = r.tau_n0_term;
    out["tau_lambda_term"] = r.tau_lambda_term;
    out["tau_res_value"] = r.tau_res_value;
    out["tau_rem_term"] = r.tau_rem_term;
    out["assembled_index"] = r.assembled_index;
    out["assembled_imag"] = r.assembled_imag;
    out["near_integer"] = r.near_integer;
    out["integer_deviation"] = r.integer_deviation;
    return out;
}

IndexReport report_from_json(const Json& j) {
    IndexReport r;
    r.group = require(j, "group").get<std::string>();
    r.lambda = weight_from_json(require(j, "lambda"));
    for (const auto& e : require(j, "semisimple_terms")) {
        SsTermReport t;
        RawElementSpec raw = element_from_json(require(e, "element"));
        t.element.kind = raw.type == "central"    ? ElementDescriptor::Kind::Central
                         : raw.type == "elliptic" ? ElementDescriptor::Kind::Elliptic
                                                  : ElementDescriptor::Kind::Hyperbolic;
        if (raw.X) t.element.torus = TorusElement{*raw.X};
        t.volume = require(e, "vol").get<double>();
        t.value = complex_from_json(require(e, "value"));
        r.ss_terms.push_back(std::move(t));
    }
    r.tau_n0_term = require(j, "tau_n0_term").get<double>();
    r.tau_lambda_term = require(j, "tau_lambda_term").get<double>();
    r.tau_res_value = require(j, "tau_res_value").get<double>();
    r.tau_rem_term = require(j, "tau_rem_term").get<double>();
    r.assembled_index = require(j, "assembled_index").get<double>();
    r.assembled_imag = require(j, "assembled_imag").get<double>();
    r.near_integer = require(j, "near_integer").get<bool>();
    r.integer_deviation = require(j, "integer_deviation").get<double>();
    return r;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("JSON parse error in '" + path + "': " + e.what());
    }
}

}  // namespace orbindex
