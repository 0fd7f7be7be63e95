#ifndef CWS_JSON_IO_HPP
#define CWS_JSON_IO_HPP

#include <json.hpp>

#include "embedding.hpp"
#include "harness.hpp"
#include "planar.hpp"

namespace cws {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Rationals serialize as plain integers when the denominator is 1 and fits
// int64, and as "num/den" strings otherwise.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json profile_to_json(const Profile& p);
Profile profile_from_json(const Json& j);

Json election_to_json(const SpatialElection& e, const std::optional<Norm>& norm = std::nullopt);
SpatialElection election_from_json(const Json& j, std::optional<Norm>* norm_out = nullptr);

Json certificate_to_json(const WinningSetCertificate& c);
WinningSetCertificate certificate_from_json(const Json& j);

Json dimension_result_to_json(const DimensionResult& r);

Json derived_profile_to_json(const DerivedProfile& d);

Json planar_result_to_json(const PlanarResult& r);

Json experiment_config_to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const Json& j);

Json experiment_report_to_json(const ExperimentReport& r);
Json hunt_result_to_json(const HuntResult& r);

Json error_to_json(const std::string& code, const std::string& detail);

// Parses text, mapping json exceptions to ParseError("MalformedDocument").
Json parse_document(const std::string& text);

} // namespace cws

#endif
