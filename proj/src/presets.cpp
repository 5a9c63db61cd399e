#include "grcone/presets.hpp"

#include <fstream>
#include <sstream>

namespace grcone {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + tok + "'");
  }
}

bool is_ci_shape(const GLSMPresentation& p) {
  if (p.k() != 1) return false;
  for (const auto& s : p.bundle().summands())
    if (s.lambda.rows() > 1) return false;
  return true;
}

std::vector<int> ci_degrees_of(const GLSMPresentation& p) {
  std::vector<int> out;
  for (const auto& s : p.bundle().summands())
    for (int i = 0; i < s.mult; ++i) out.push_back(s.lambda.part(0));
  return out;
}

}  // namespace

PresetConfig parse_preset(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  const std::string& name = parts.empty() ? text : parts[0];
  try {
    if (name == "beauville-donagi") {
      if (parts.size() != 1) throw UsageError("beauville-donagi takes no arguments");
      GLSMPresentation p(6, 2, 1, BundleSpec(2, {{1, Partition({3})}}));
      return PresetConfig{text, "beauville-donagi", std::move(p), {}};
    }
    if (name == "ci") {
      if (parts.size() != 3) throw UsageError("expected ci:N:d1[,d2...]");
      int N = parse_int(parts[1], "N");
      std::vector<BundleSummand> summands;
      std::vector<int> degrees;
      for (const std::string& tok : split(parts[2], ',')) {
        int d = parse_int(tok, "degree");
        if (d < 1) throw UsageError("hypersurface degrees must be >= 1");
        degrees.push_back(d);
        summands.push_back({1, Partition({d})});
      }
      if (degrees.empty()) throw UsageError("expected at least one degree");
      GLSMPresentation p(N, 1, 1, BundleSpec(1, std::move(summands)));
      return PresetConfig{text, "ci", std::move(p), std::move(degrees)};
    }
    if (name == "isotropic-orth" || name == "isotropic-symp") {
      if (parts.size() != 3) throw UsageError("expected " + name + ":N:k");
      int N = parse_int(parts[1], "N");
      int k = parse_int(parts[2], "k");
      bool orth = name == "isotropic-orth";
      // Throws with the family hypothesis spelled out when N, k are out of range.
      isotropic_dims(N, k, orth ? IsotropicKind::Orthogonal : IsotropicKind::Symplectic);
      Partition shape = orth ? Partition({2}) : Partition({1, 1});
      GLSMPresentation p(N, k, 1, BundleSpec(k, {{1, shape}}));
      return PresetConfig{text, orth ? "isotropic-orthogonal" : "isotropic-symplectic",
                          std::move(p), k == 1 ? std::vector<int>{2} : std::vector<int>{}};
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string(e.what()) + " (preset '" + text + "')");
  }
  throw UsageError("unknown preset '" + text +
                   "'; expected ci:N:d1[,d2...], isotropic-orth:N:k, "
                   "isotropic-symp:N:k or beauville-donagi");
}

PresetConfig config_from_json(const nlohmann::json& doc, const std::string& label) {
  try {
    int N = doc.at("N").get<int>();
    int k = doc.at("k").get<int>();
    int t = doc.at("t").get<int>();
    std::vector<BundleSummand> summands;
    for (const auto& s : doc.at("bundle")) {
      int mult = s.at("mult").get<int>();
      std::vector<int> lam = s.at("lambda").get<std::vector<int>>();
      summands.push_back({mult, Partition(std::move(lam))});
    }
    GLSMPresentation p(N, k, t, BundleSpec(k, std::move(summands)));
    PresetConfig out{label, "custom", std::move(p), {}};
    if (is_ci_shape(out.presentation)) {
      out.family = "ci";
      out.ci_degrees = ci_degrees_of(out.presentation);
    }
    return out;
  } catch (const std::exception& e) {
    throw UsageError("malformed config: " + std::string(e.what()));
  }
}

nlohmann::json config_to_json(const PresetConfig& config) {
  const GLSMPresentation& p = config.presentation;
  nlohmann::json bundle = nlohmann::json::array();
  for (const auto& s : p.bundle().summands()) {
    nlohmann::json item;
    item["mult"] = s.mult;
    item["lambda"] = s.lambda.parts();
    bundle.push_back(std::move(item));
  }
  nlohmann::json doc;
  doc["N"] = p.N();
  doc["k"] = p.k();
  doc["t"] = p.t();
  doc["bundle"] = std::move(bundle);
  return doc;
}

PresetConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("malformed config JSON in '" + path + "': " + e.what());
  }
  return config_from_json(doc, path);
}

}  // namespace grcone
