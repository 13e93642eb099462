#pragma once

#include <json.hpp>

#include "netlqg/model.hpp"

namespace netlqg {

/// Strict decoding: unknown keys anywhere in the document are an error
/// (catches typos in sweep scripts). Throws InvalidConfig.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig config_from_json_text(const std::string& text);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

} // namespace netlqg
