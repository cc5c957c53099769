#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace vortex {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kConfigSchemaVersion = 1;

// Parsed and validated run configuration. Validation checks every
// module precondition the scenario will hit, before any file is
// written.
struct ScenarioConfig {
    std::string scenario;
    std::string name; // output directory name
    nlohmann::json doc;
};

std::vector<std::string> scenario_names();

ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig parse_config(const nlohmann::json& doc, const std::string& fallback_name);

// Echo of what a run produced. The manifest file is written last; its
// presence marks a complete run.
struct RunManifest {
    std::filesystem::path run_dir;
    nlohmann::json doc;
};

RunManifest run_config(const ScenarioConfig& config, const std::filesystem::path& out_root);

} // namespace vortex
