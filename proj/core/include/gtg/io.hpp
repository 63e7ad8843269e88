#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gtg/catalog.hpp"
#include "gtg/search.hpp"
#include "gtg/smallcancel.hpp"

namespace gtg::io {

using Json = nlohmann::ordered_json;

Json poly_json(const IntPoly& p);
Json form_json(const TargetForm& f);
Json pairlist_json(const PairList& l);
Json witness_json(const std::vector<RepWitness>& ws);
Json class_json(const FoundClass& fc);
Json stats_json(const StageStats& s);
Json search_result_json(const SearchResult& r);
Json case_result_json(const CaseResult& r);
Json catalog_entry_json(const CatalogEntry& e);
Json verify_report_json(const VerifyReport& r);
Json classification_json(const Classification& c);

Json cert_json(const SCCertificate& c);
// Throws std::invalid_argument on malformed or inconsistent documents.
SCCertificate cert_from_json(const Json& j);

// Stable envelope: {schema_version, command, case, payload}.
Json document(const std::string& command, std::optional<Case> c, Json payload);

std::string csv_field(const std::string& s);
std::string poly_csv(const IntPoly& p);

}  // namespace gtg::io
