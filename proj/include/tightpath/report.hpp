#pragma once

#include <json.hpp>

#include "tightpath/extraction.hpp"
#include "tightpath/graph.hpp"

namespace tightpath {

// Field-level configuration error, e.g. "params.k: must be at least 2*ell".
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

nlohmann::json params_to_json(const PipelineParams& p);
// Missing fields keep their defaults; unknown fields are rejected.
PipelineParams params_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ExpansionCertificate& cert);
nlohmann::json connector_to_json(const Connector& conn);
// Timings go under "timings" so reports compare equal modulo that key.
nlohmann::json outcome_to_json(const PipelineOutcome& outcome);

}  // namespace tightpath
