#pragma once

#include <json.hpp>

#include "orbindex/assemble.hpp"

namespace orbindex {

using Json = nlohmann::ordered_json;

// Parsing. Malformed input raises UsageError.
Rat rational_from_json(const Json& j);
WeightVec weight_from_json(const Json& j);
CatalogEntry catalog_from_json(const Json& j);
GammaData gamma_from_json(const Json& j);
RawElementSpec element_from_json(const Json& j);

Json weight_to_json(const WeightVec& v);
Json element_to_json(const ElementDescriptor& el);
Json laurent_to_json(const LaurentChar& chi);
Json contribution_to_json(const SsContribution& c);
Json report_to_json(const IndexReport& r);
IndexReport report_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace orbindex
