#include "orbindex/assemble.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "orbindex/errors.hpp"
#include "orbindex/json_io.hpp"

#ifndef ORBINDEX_DEFAULT_CATALOG_DIR
#define ORBINDEX_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace orbindex {

const LeviData& CatalogEntry::levi(const std::string& name) const {
    for (const auto& l : levis)
        if (l.name == name) return l;
    throw UsageError("group '" + pair.name + "' has no levi named '" + name + "'");
}

std::string catalog_directory(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("ORBINDEX_CATALOG_DIR"); env && *env) return env;
    return ORBINDEX_DEFAULT_CATALOG_DIR;
}

CatalogEntry catalog_lookup(const std::string& name, const std::string& dir) {
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw UnknownGroup("bad group name '" + name + "'");
    const std::string path = catalog_directory(dir) + "/" + name + ".json";
    Json j;
    try {
        j = load_json_file(path);
    } catch (const UsageError&) {
        throw UnknownGroup("no catalog entry '" + name + "' (looked for " + path + ")");
    }
    return catalog_from_json(j);
}

CatalogEntry load_group_file(const std::string& path) {
    return catalog_from_json(load_json_file(path));
}

bool operator==(const IndexReport& a, const IndexReport& b) {
    auto same_element = [](const ElementDescriptor& x, const ElementDescriptor& y) {
        if (x.kind != y.kind) return false;
        if (x.torus.has_value() != y.torus.has_value()) return false;
        return !x.torus || x.torus->X == y.torus->X;
    };
    if (a.group != b.group || a.lambda != b.lambda || a.ss_terms.size() != b.ss_terms.size())
        return false;
    for (size_t i = 0; i < a.ss_terms.size(); ++i) {
        const auto& x = a.ss_terms[i];
        const auto& y = b.ss_terms[i];
        if (!same_element(x.element, y.element) || x.volume != y.volume || x.value != y.value)
            return false;
    }
    return a.tau_n0_term == b.tau_n0_term && a.tau_lambda_term == b.tau_lambda_term &&
           a.tau_res_value == b.tau_res_value && a.tau_rem_term == b.tau_rem_term &&
           a.assembled_index == b.assembled_index && a.assembled_imag == b.assembled_imag &&
           a.near_integer == b.near_integer && a.integer_deviation == b.integer_deviation;
}

IndexReport assemble_index(const DiracInput& input, const CatalogEntry& entry,
                           const GammaData& gd, const AssembleOptions& opts) {
    if (!entry.rank_one)
        throw NotSupported("group '" + entry.pair.name +
                           "' carries no rank-one data; assembly needs real rank one");
    const RankOneData& r1 = *entry.rank_one;

    IndexReport report;
    report.group = entry.pair.name;
    report.lambda = input.lambda;

    std::complex<double> ss_sum = 0.0;
    for (const auto& cls : gd.ss_classes) {
        // Re-validate central claims against this group's root data.
        if (cls.element.kind == ElementDescriptor::Kind::Central) {
            if (!cls.element.torus || !is_central(*cls.element.torus, input.pair))
                throw MisclassifiedElement("ss class claims a central element that is not central");
        }
        SsTermReport term;
        term.element = cls.element;
        term.volume = cls.volume;
        term.value = tau_semisimple(input, cls.element, opts.display_sign);
        ss_sum += term.volume * term.value;
        report.ss_terms.push_back(std::move(term));
    }

    report.tau_n0_term = tau_n0_contribution(input, r1, gd, opts.bernoulli, opts.lambda_norm);
    report.tau_lambda_term = tau_lambda_contribution();
    report.tau_res_value = tau_res_contribution(input, gd);
    report.tau_rem_term = tau_rem_contribution(input, r1, gd, opts.rem_subscript);

    const std::complex<double> total = ss_sum + report.tau_n0_term + report.tau_lambda_term -
                                       report.tau_res_value / 4.0 + report.tau_rem_term;
    report.assembled_index = total.real();
    report.assembled_imag = total.imag();
    report.integer_deviation = std::abs(report.assembled_index - std::round(report.assembled_index));
    report.near_integer = report.integer_deviation < 1e-6 && std::abs(report.assembled_imag) < 1e-6;
    return report;
}

}  // namespace orbindex
