#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "reebcalc/diophantine.hpp"
#include "reebcalc/resonance.hpp"
#include "reebcalc/s3.hpp"
#include "reebcalc/spectra.hpp"

namespace reebcalc::io {

using Json = nlohmann::ordered_json;

// --- input documents (strict: unknown fields are field-addressed errors) ---

// Orbit system document, schema_version 1. Rationals travel as strings
// "p" / "p/q"; decimal strings are rejected unless allow_decimals is set
// (the CLI's --decimal-tolerance), in which case they convert exactly.
OrbitSystem orbit_system_from_json(const Json& doc, bool allow_decimals = false);
Json orbit_system_to_json(const OrbitSystem& system);

TargetHomology target_from_json(const Json& doc, bool allow_decimals = false);

S3Configuration s3_config_from_json(const Json& doc,
                                    std::optional<S3Mode> mode_override = std::nullopt);
Json s3_config_to_json(const S3Configuration& config);

Json parse_json_text(const std::string& text);  // wraps parse errors
Json load_json_file(const std::string& path);

// --- report serialization (deterministic field order, rationals as strings) ---

Json to_json(const DegreeSpectrum& spectrum);
Json to_json(const PerfectionReport& report);
Json to_json(const GeometricPerfectnessReport& report);
Json to_json(const BBoundReport& report);
Json to_json(const EvenCountReport& report);
Json to_json(const ResonanceReport& report);
Json to_json(const RatioReport& report);
Json to_json(const CountingReport& report);
Json to_json(const OrderingReport& report);
Json to_json(const ClusterQuery& query, const ClusterSolution& solution);
Json to_json(const WindowReport& report);
Json to_json(const AbstractWindowReport& report);
Json to_json(const S3Verdict& verdict);
Json to_json(const S3Census& census);
Json to_json(const WitnessEllipsoid& witness);

std::string mode_name(S3Mode mode);
std::string status_name(RuleStatus status);
std::string basis_name(FiringBasis basis);

}  // namespace reebcalc::io
