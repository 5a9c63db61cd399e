#include "grcone/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "grcone/hilbert.hpp"
#include "grcone/oracles.hpp"
#include "grcone/pool.hpp"

namespace grcone {

namespace {

nlohmann::json big(const Int& v) { return v.get_str(); }

nlohmann::json flag_json(const FlagValue& f) {
  nlohmann::json out;
  out["established"] = f.value.has_value() && *f.value;
  out["hypotheses"] = f.hypotheses;
  return out;
}

void render_checks(std::ostringstream& os, const ValidationReport& rep) {
  for (const auto& c : rep.checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
}

nlohmann::json run_validate(const PresetConfig& preset, bool& all_pass, std::ostringstream& os) {
  ValidationReport rep = validate(preset.presentation);
  all_pass = rep.all_pass;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  render_checks(os, rep);
  return nlohmann::json{{"checks", std::move(checks)}};
}

nlohmann::json run_cone(const PresetConfig& preset, bool& all_pass, std::ostringstream& os) {
  const GLSMPresentation& p = preset.presentation;
  ConeInvariants inv = cone_invariants(p);
  all_pass = true;

  nlohmann::json body;
  body["dim_B"] = inv.dim_B;
  body["rank_E"] = big(inv.rank_E);
  body["dim_E"] = big(inv.dim_E);
  body["dim_H"] = big(inv.dim_H);
  body["c_E"] = big(inv.c_E);
  body["crepancy_degree"] = {{"c_E", big(inv.c_E)}, {"N", inv.crepancy_target}};
  body["crepant_hypothesis"] = inv.crepant_hypothesis;
  body["det_trivial"] = inv.det_trivial;
  if (inv.nonstable_codim) body["nonstable_codim"] = *inv.nonstable_codim;
  if (inv.dim_C_E) body["dim_C_E"] = big(*inv.dim_C_E);
  if (inv.birational) body["birational"] = *inv.birational;
  if (!inv.exc_codims.empty()) {
    nlohmann::json codims = nlohmann::json::array();
    for (const Int& c : inv.exc_codims) codims.push_back(big(c));
    body["exc_codims"] = std::move(codims);
    body["min_preimage_codim"] = big(*inv.min_preimage_codim);
  }
  body["flags"] = {{"normal_CM", flag_json(inv.normal_CM)},
                   {"rational_sing", flag_json(inv.rational_sing)},
                   {"gorenstein", flag_json(inv.gorenstein)}};

  if (preset.family == "isotropic-orthogonal" || preset.family == "isotropic-symplectic") {
    IsotropicDims iso = isotropic_dims(p.N(), p.k(),
                                       preset.family == "isotropic-orthogonal"
                                           ? IsotropicKind::Orthogonal
                                           : IsotropicKind::Symplectic);
    body["isotropic"] = {{"dim_B", iso.dim_B},
                         {"rank_E", big(iso.rank_E)},
                         {"dim_S_E", big(iso.dim_S_E)}};
  }

  os << "  dim B = " << inv.dim_B << ", rank E = " << inv.rank_E.get_str()
     << ", dim E = " << inv.dim_E.get_str() << ", dim H = " << inv.dim_H.get_str() << "\n";
  os << "  crepancy degree (c_E, N) = (" << inv.c_E.get_str() << ", " << inv.crepancy_target
     << "), crepant-hypothesis " << (inv.crepant_hypothesis ? "true" : "false") << "\n";
  os << "  det trivial: " << (inv.det_trivial ? "true" : "false") << "\n";
  if (!inv.exc_codims.empty()) {
    os << "  exceptional codims:";
    for (const Int& c : inv.exc_codims) os << ' ' << c.get_str();
    os << " (min " << inv.min_preimage_codim->get_str() << ")\n";
  }
  const std::pair<const char*, const FlagValue*> flag_rows[] = {
      {"normal_CM", &inv.normal_CM},
      {"rational_sing", &inv.rational_sing},
      {"gorenstein", &inv.gorenstein}};
  for (const auto& [name, flag] : flag_rows) {
    os << "  " << name << ": "
       << (flag->value.has_value() && *flag->value ? "established" : "not established") << "\n";
    for (const std::string& h : flag->hypotheses) os << "      - " << h << "\n";
  }
  return body;
}

nlohmann::json table_json(const HilbertTable& table) {
  nlohmann::json dims = nlohmann::json::array();
  for (const Int& d : table.dims) dims.push_back(big(d));
  nlohmann::json out;
  out["series"] = table.series;
  out["route"] = table.route;
  if (table.alpha) out["alpha"] = table.alpha->parts();
  out["dims"] = std::move(dims);
  out["tilting_verified"] = table.tilting_verified;
  return out;
}

nlohmann::json witness_json(const VanishingWitness& w) {
  return {{"alpha", w.alpha.parts()}, {"beta", w.beta.parts()},
          {"m", w.m},                 {"i", w.i},
          {"key", w.gamma.str()}};
}

nlohmann::json run_hilbert(const PresetConfig& preset, const RunOptions& options,
                           bool& all_pass, std::ostringstream& os, PlethysmCache* cache) {
  const GLSMPresentation& p = preset.presentation;
  int M = options.max_degree;
  if (M < 0) throw UsageError("--max-degree must be >= 0");

  std::vector<HilbertTable> tables;
  if (options.series == "R") {
    HilbertTable t{"R", "sections-of-symmetric-powers", {}, std::vector<Int>(M + 1), true};
    parallel_for(options.threads, M + 1,
                 [&](int m) { t.dims[m] = dim_R(p, m, cache); });
    tables.push_back(std::move(t));
  } else if (options.series == "Lambda") {
    HilbertTable t{"Lambda", "cohomology", {}, std::vector<Int>(M + 1), true};
    parallel_for(options.threads, M + 1,
                 [&](int m) { t.dims[m] = dim_Lambda(p, m, cache); });
    VanishingReport vr = vanishing_check(p, p.ctx().dim(), M, cache);
    t.tilting_verified = vr.ok;
    tables.push_back(std::move(t));
    if (preset.family == "ci" || !preset.ci_degrees.empty()) {
      HilbertTable cf{"Lambda", "closed-form", {}, std::vector<Int>(M + 1), tables[0].tilting_verified};
      for (int m = 0; m <= M; ++m)
        cf.dims[m] = dim_Lambda_closed_form_CI(p.N(), preset.ci_degrees, m);
      tables.push_back(std::move(cf));
    }
  } else if (options.series == "M") {
    if (!options.alpha) throw UsageError("series M needs --alpha");
    const Partition& alpha = *options.alpha;
    if (alpha.rows() > p.k() || alpha.part(0) > p.N() - p.k())
      throw UsageError("--alpha must fit in the k x (N-k) box");
    HilbertTable t{"M", "cohomology", alpha, std::vector<Int>(M + 1), true};
    parallel_for(options.threads, M + 1,
                 [&](int m) { t.dims[m] = dim_M_alpha(p, alpha, m, cache); });
    tables.push_back(std::move(t));
  } else {
    throw UsageError("unknown series '" + options.series + "' (expected R, Lambda or M)");
  }

  bool agree = true;
  if (tables.size() == 2) agree = tables[0].dims == tables[1].dims;
  all_pass = agree;

  nlohmann::json body;
  body["max_degree"] = M;
  body["series"] = options.series;
  nlohmann::json jt = nlohmann::json::array();
  for (const auto& t : tables) jt.push_back(table_json(t));
  body["tables"] = std::move(jt);
  if (tables.size() == 2) body["routes_agree"] = agree;

  for (const auto& t : tables) {
    os << "  series " << t.series;
    if (t.alpha) os << "[alpha=" << t.alpha->str() << "]";
    os << " via " << t.route << ":";
    for (const Int& d : t.dims) os << ' ' << d.get_str();
    os << "\n";
    if (!t.tilting_verified)
      os << "      (tilting hypothesis unverified: higher cohomology seen in range)\n";
  }
  if (tables.size() == 2)
    os << "  routes agree: " << (agree ? "yes" : "NO") << "\n";
  return body;
}

nlohmann::json run_vanishing(const PresetConfig& preset, const RunOptions& options,
                             bool& all_pass, std::ostringstream& os, PlethysmCache* cache) {
  const GLSMPresentation& p = preset.presentation;
  int M = options.max_degree;
  int i_max = options.max_i.value_or(p.ctx().dim());
  if (i_max < 1) throw UsageError("--max-i must be >= 1");

  std::vector<VanishingReport> slices(M + 1);
  parallel_for(options.threads, M + 1,
               [&](int m) { slices[m] = vanishing_check_degree(p, i_max, m, cache); });

  VanishingReport merged;
  merged.i_max = i_max;
  merged.m_max = M;
  for (const auto& slice : slices) {
    merged.keys_checked += slice.keys_checked;
    if (!slice.ok && merged.ok) {
      merged.ok = false;
      merged.witness = slice.witness;
    }
  }
  all_pass = merged.ok;

  nlohmann::json body;
  body["i_max"] = i_max;
  body["max_degree"] = M;
  body["ok"] = merged.ok;
  body["keys_checked"] = merged.keys_checked;
  if (merged.witness) body["witness"] = witness_json(*merged.witness);

  os << "  H^i = 0 for 1 <= i <= " << i_max << ", 0 <= m <= " << M << ": "
     << (merged.ok ? "verified" : "VIOLATED") << " (" << merged.keys_checked
     << " irreducible keys checked)\n";
  if (merged.witness) {
    os << "  witness: alpha=" << merged.witness->alpha.str()
       << " beta=" << merged.witness->beta.str() << " m=" << merged.witness->m
       << " i=" << merged.witness->i << " key=" << merged.witness->gamma.str() << "\n";
  }
  return body;
}

nlohmann::json run_oracle(const PresetConfig& preset, const RunOptions& options,
                          bool& all_pass, std::ostringstream& os, PlethysmCache* cache) {
  const GLSMPresentation& p = preset.presentation;
  int M = options.max_degree;
  all_pass = true;

  nlohmann::json body;
  nlohmann::json inv;
  bool supported = p.k() <= 2;
  inv["supported"] = supported;
  if (supported) {
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 0; m <= M; ++m) {
      Int weyl = molien_invariant_dim(p, m);
      Int sections = dim_R(p, m, cache);
      bool agree = weyl == sections;
      all_pass = all_pass && agree;
      rows.push_back({{"m", m},
                      {"invariants", big(weyl)},
                      {"sections", big(sections)},
                      {"agree", agree}});
      os << "  m=" << m << ": invariants " << weyl.get_str() << ", sections "
         << sections.get_str() << (agree ? "" : "  <- MISMATCH") << "\n";
    }
    inv["rows"] = std::move(rows);
  } else {
    os << "  invariant-ring oracle skipped: supported for k <= 2 only\n";
  }
  body["invariant_ring"] = std::move(inv);

  nlohmann::json eulers = nlohmann::json::array();
  GrassmannianContext ctx = p.ctx();
  for (const Partition& a : ctx.box()) {
    HomogeneousBundle bundle = irreducible_bundle(ctx, MixedWeight::from_partition(a, ctx.k));
    Int chi = euler_characteristic(bundle);
    Int loc0 = localization_euler(bundle, 0);
    Int loc1 = localization_euler(bundle, 1);
    bool agree = chi == loc0 && loc0 == loc1;
    all_pass = all_pass && agree;
    eulers.push_back({{"key", a.str()},
                      {"chi", big(chi)},
                      {"localized", big(loc0)},
                      {"agree", agree}});
    if (!agree)
      os << "  euler mismatch at " << a.str() << ": " << chi.get_str() << " vs "
         << loc0.get_str() << " / " << loc1.get_str() << "\n";
  }
  os << "  localization cross-check over " << ctx.box().size()
     << " collection components: " << (all_pass ? "agrees" : "MISMATCH") << "\n";
  body["euler"] = std::move(eulers);
  return body;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Cone: return "cone";
    case Command::Hilbert: return "hilbert";
    case Command::Vanishing: return "vanishing";
    case Command::Oracle: return "oracle";
  }
  return "?";
}

std::string canonical_dump(const nlohmann::json& body) { return body.dump(2) + "\n"; }

RunResult run_command(const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();

  PresetConfig preset = options.config_path ? load_config_file(*options.config_path)
                                            : parse_preset(options.preset_text);

  PlethysmCache cache(options.cache_path ? std::filesystem::path(*options.cache_path)
                                         : PlethysmCache::default_path());

  std::ostringstream os;
  os << "grcone " << command_name(options.command) << " " << preset.label << "\n";

  bool all_pass = true;
  nlohmann::json results;
  switch (options.command) {
    case Command::Validate:
      results = run_validate(preset, all_pass, os);
      break;
    case Command::Cone:
      results = run_cone(preset, all_pass, os);
      break;
    case Command::Hilbert:
      results = run_hilbert(preset, options, all_pass, os, &cache);
      break;
    case Command::Vanishing:
      results = run_vanishing(preset, options, all_pass, os, &cache);
      break;
    case Command::Oracle:
      results = run_oracle(preset, options, all_pass, os, &cache);
      break;
  }
  cache.flush();

  nlohmann::json canonical;
  canonical["schema_version"] = 1;
  canonical["tool"] = {{"name", "grcone"}, {"version", "0.1.0"}};
  canonical["command"] = command_name(options.command);
  canonical["preset"] = {{"label", preset.label},
                         {"family", preset.family},
                         {"config", config_to_json(preset)}};
  nlohmann::json opts;
  switch (options.command) {
    case Command::Hilbert:
      opts["max_degree"] = options.max_degree;
      opts["series"] = options.series;
      break;
    case Command::Vanishing:
      opts["max_degree"] = options.max_degree;
      opts["max_i"] = options.max_i.value_or(preset.presentation.ctx().dim());
      break;
    case Command::Oracle:
      opts["max_degree"] = options.max_degree;
      break;
    default:
      break;
  }
  canonical["options"] = std::move(opts);
  canonical["results"] = std::move(results);
  canonical["all_pass"] = all_pass;

  os << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";

  RunResult out;
  out.all_pass = all_pass;
  out.canonical = std::move(canonical);
  out.text = os.str();
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

}  // namespace grcone
