#pragma once

#include "json.hpp"

#include "domlab/domination.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/extremal.hpp"
#include "domlab/verify.hpp"

namespace domlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const SolverStats& s);
Json to_json(const DominationCertificate& c, bool witness);
Json to_json(const OrthogonalArray& a);
Json to_json(const ExtractionContext& c);
Json to_json(const Classification& c);
Json to_json(const SearchSpec& s);
Json to_json(const SearchReport& r);
Json to_json(const SuiteResult& r);

}  // namespace domlab::cli
