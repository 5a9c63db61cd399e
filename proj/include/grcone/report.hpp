#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "grcone/presets.hpp"

namespace grcone {

enum class Command { Validate, Cone, Hilbert, Vanishing, Oracle };

struct RunOptions {
  Command command = Command::Validate;
  std::string preset_text;                  // one of preset_text / config_path set
  std::optional<std::string> config_path;
  int max_degree = 3;
  std::string series = "Lambda";            // "R", "Lambda" or "M"
  std::optional<Partition> alpha;           // required for series "M"
  std::optional<int> max_i;                 // vanishing; defaults to dim B
  int threads = 1;
  std::optional<std::string> cache_path;    // plethysm cache override
};

struct RunResult {
  bool all_pass = true;
  nlohmann::json canonical;  // deterministic body: no timing, no thread count
  std::string text;          // human-readable rendering
  double wall_ms = 0.0;      // sidecar, excluded from the canonical body
};

RunResult run_command(const RunOptions& options);

// Stable serialization of the canonical body (sorted keys, fixed indent).
std::string canonical_dump(const nlohmann::json& body);

std::string command_name(Command c);

}  // namespace grcone
