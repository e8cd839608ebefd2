#pragma once

#include <string>
#include <vector>

#include "orbindex/indexhigher.hpp"
#include "orbindex/indexnonss.hpp"

namespace orbindex {

/// One group of the shipped catalog: validated root data, its levis, and
/// (for real rank one) the rank-one structure constants.
struct CatalogEntry {
    SymmetricPair pair;
    std::vector<LeviData> levis;
    std::optional<RankOneData> rank_one;
    std::vector<std::string> notes;

    const LeviData& levi(const std::string& name) const;
};

/// Directory holding the catalog JSON files. Resolution order: explicit
/// argument, ORBINDEX_CATALOG_DIR environment variable, compiled-in default.
std::string catalog_directory(const std::string& override_dir = "");

/// Loads and validates <dir>/<name>.json. Unknown names raise UnknownGroup.
CatalogEntry catalog_lookup(const std::string& name, const std::string& dir = "");

/// Loads a user-supplied group file with the same schema.
CatalogEntry load_group_file(const std::string& path);

struct SsTermReport {
    ElementDescriptor element;
    double volume = 0.0;
    std::complex<double> value{};
};

/// Labeled contributions and their assembled finite-volume index value.
/// near_integer is a warning-level flag, never an assertion.
struct IndexReport {
    std::string group;
    WeightVec lambda;
    std::vector<SsTermReport> ss_terms;
    double tau_n0_term = 0.0;
    double tau_lambda_term = 0.0;
    double tau_res_value = 0.0;  // raw part (c) value; enters with weight -1/4
    double tau_rem_term = 0.0;
    double assembled_index = 0.0;
    double assembled_imag = 0.0;
    bool near_integer = false;
    double integer_deviation = 0.0;
};

bool operator==(const IndexReport& a, const IndexReport& b);

struct AssembleOptions {
    BernoulliConvention bernoulli = BernoulliConvention::Classical;
    LambdaNormSource lambda_norm = LambdaNormSource::RestrictedRoot;
    RemSubscript rem_subscript = RemSubscript::Display;
    DenomSign display_sign = DenomSign::MinusExp;
};

/// ind(D_W^Gamma) = sum_ss vol * tau_gamma + tau_n0 + tau_lambda
///                  - tau_res / 4 + tau_rem,
/// each term evaluated at the theorem level (the unipotent term already
/// carries its Gamma coefficient through C_2(Gamma)).
IndexReport assemble_index(const DiracInput& input, const CatalogEntry& entry,
                           const GammaData& gd, const AssembleOptions& opts = {});

}  // namespace orbindex
