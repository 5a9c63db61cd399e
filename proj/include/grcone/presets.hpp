#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "grcone/glsm.hpp"

namespace grcone {

// Bad command-line input; the driver maps this to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PresetConfig {
  std::string label;   // the preset text or the config file path
  std::string family;  // "ci", "isotropic-orthogonal", "isotropic-symplectic",
                       // "beauville-donagi" or "custom"
  GLSMPresentation presentation;
  std::vector<int> ci_degrees;  // populated exactly when family "ci" applies
};

// "ci:N:d1[,d2...]", "isotropic-orth:N:k", "isotropic-symp:N:k",
// "beauville-donagi".
PresetConfig parse_preset(const std::string& text);

PresetConfig config_from_json(const nlohmann::json& doc, const std::string& label);
nlohmann::json config_to_json(const PresetConfig& config);
PresetConfig load_config_file(const std::string& path);

}  // namespace grcone
