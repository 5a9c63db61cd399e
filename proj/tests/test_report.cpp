#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "grcone/report.hpp"

using namespace grcone;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "grcone-report-tests";
  fs::create_directories(dir);
  return dir;
}

RunOptions base_options(Command c, const std::string& preset) {
  RunOptions o;
  o.command = c;
  o.preset_text = preset;
  o.cache_path = (scratch_dir() / "cache.json").string();
  return o;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("preset parsing") {
  PresetConfig bd = parse_preset("beauville-donagi");
  CHECK(bd.family == "beauville-donagi");
  CHECK(bd.presentation.N() == 6);
  CHECK(bd.presentation.k() == 2);
  CHECK(bd.presentation.t() == 1);
  REQUIRE(bd.presentation.bundle().summands().size() == 1);
  CHECK(bd.presentation.bundle().summands()[0].lambda == Partition({3}));
  CHECK(bd.ci_degrees.empty());

  PresetConfig ci = parse_preset("ci:4:2,3");
  CHECK(ci.family == "ci");
  CHECK(ci.presentation.k() == 1);
  CHECK(ci.ci_degrees == std::vector<int>{2, 3});
  CHECK(ci.presentation.bundle().summands().size() == 2);

  PresetConfig orth = parse_preset("isotropic-orth:6:2");
  CHECK(orth.family == "isotropic-orthogonal");
  CHECK(orth.presentation.bundle().summands()[0].lambda == Partition({2}));
  CHECK(orth.ci_degrees.empty());

  PresetConfig symp = parse_preset("isotropic-symp:6:2");
  CHECK(symp.family == "isotropic-symplectic");
  CHECK(symp.presentation.bundle().summands()[0].lambda == Partition({1, 1}));

  // A rank-one isotropic-orthogonal bundle is the quadric presentation.
  PresetConfig quadric = parse_preset("isotropic-orth:4:1");
  CHECK(quadric.ci_degrees == std::vector<int>{2});
}

TEST_CASE("preset parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_preset("foo"), UsageError);
  CHECK_THROWS_AS(parse_preset("ci:4"), UsageError);
  CHECK_THROWS_AS(parse_preset("ci:x:2"), UsageError);
  CHECK_THROWS_AS(parse_preset("ci:4:0"), UsageError);
  CHECK_THROWS_AS(parse_preset("beauville-donagi:6"), UsageError);
  CHECK_THROWS_AS(parse_preset("isotropic-orth:5:3"), UsageError);
  CHECK_THROWS_AS(parse_preset("isotropic-symp:6:3"), UsageError);

  try {
    parse_preset("isotropic-orth:5:3");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("preset 'isotropic-orth:5:3'") != std::string::npos);
  }
}

TEST_CASE("config round trips") {
  PresetConfig ci = parse_preset("ci:4:2,3");
  PresetConfig back = config_from_json(config_to_json(ci), "roundtrip");
  CHECK(back.family == "ci");
  CHECK(back.ci_degrees == ci.ci_degrees);
  CHECK(back.presentation.N() == 4);

  // Multiplicities expand into repeated degrees.
  nlohmann::json doc = {{"N", 4}, {"k", 1}, {"t", 1},
                        {"bundle", {{{"mult", 2}, {"lambda", {2}}}}}};
  PresetConfig twice = config_from_json(doc, "pair-of-quadrics");
  CHECK(twice.family == "ci");
  CHECK(twice.ci_degrees == std::vector<int>{2, 2});

  PresetConfig bd = config_from_json(config_to_json(parse_preset("beauville-donagi")), "bd");
  CHECK(bd.family == "custom");
  CHECK(bd.presentation.k() == 2);

  nlohmann::json missing = {{"N", 4}, {"k", 1}};
  CHECK_THROWS_AS(config_from_json(missing, "x"), UsageError);
  nlohmann::json invalid = {{"N", 2}, {"k", 2}, {"t", 1},
                            {"bundle", {{{"mult", 1}, {"lambda", {2}}}}}};
  CHECK_THROWS_AS(config_from_json(invalid, "x"), UsageError);
}

TEST_CASE("config files") {
  fs::path good = scratch_dir() / "good.json";
  std::ofstream(good) << config_to_json(parse_preset("ci:3:3")).dump();
  PresetConfig loaded = load_config_file(good.string());
  CHECK(loaded.family == "ci");
  CHECK(loaded.label == good.string());

  CHECK_THROWS_AS(load_config_file((scratch_dir() / "missing.json").string()), UsageError);

  fs::path bad = scratch_dir() / "bad.json";
  std::ofstream(bad) << "{not json";
  CHECK_THROWS_AS(load_config_file(bad.string()), UsageError);
}

TEST_CASE("validate command body") {
  RunResult r = run_command(base_options(Command::Validate, "beauville-donagi"));
  CHECK(r.all_pass);
  CHECK(r.canonical["schema_version"] == 1);
  CHECK(r.canonical["tool"]["name"] == "grcone");
  CHECK(r.canonical["command"] == "validate");
  CHECK(r.canonical["preset"]["family"] == "beauville-donagi");
  CHECK(r.canonical["results"]["checks"].size() == 4);
  CHECK(r.canonical["all_pass"] == true);
  CHECK(r.text.find("result: PASS") != std::string::npos);

  std::string dump = canonical_dump(r.canonical);
  CHECK(dump.back() == '\n');
  CHECK(dump.find("wall") == std::string::npos);
  CHECK(dump.find("threads") == std::string::npos);
}

TEST_CASE("cone command body") {
  RunResult r = run_command(base_options(Command::Cone, "beauville-donagi"));
  const nlohmann::json& res = r.canonical["results"];
  CHECK(res["dim_B"] == 8);
  CHECK(res["rank_E"] == "4");
  CHECK(res["dim_E"] == "12");
  CHECK(res["dim_H"] == "56");
  CHECK(res["crepancy_degree"]["c_E"] == "6");
  CHECK(res["crepancy_degree"]["N"] == 6);
  CHECK(res["det_trivial"] == true);
  CHECK(!res.contains("nonstable_codim"));
  CHECK(res["exc_codims"] == nlohmann::json({"4", "2"}));
  CHECK(res["min_preimage_codim"] == "2");
  CHECK(res["birational"] == true);
  CHECK(res["flags"]["normal_CM"]["established"] == true);
  CHECK(res["flags"]["gorenstein"]["established"] == false);

  RunResult iso = run_command(base_options(Command::Cone, "isotropic-symp:6:2"));
  CHECK(iso.canonical["results"]["isotropic"]["dim_S_E"] == "7");
}

TEST_CASE("hilbert command bodies") {
  RunOptions r_opts = base_options(Command::Hilbert, "ci:2:2");
  r_opts.series = "R";
  RunResult r = run_command(r_opts);
  CHECK(r.all_pass);
  CHECK(r.canonical["options"]["series"] == "R");
  const nlohmann::json& table = r.canonical["results"]["tables"][0];
  CHECK(table["series"] == "R");
  CHECK(table["dims"] == nlohmann::json({"1", "3", "5", "7"}));

  RunOptions l_opts = base_options(Command::Hilbert, "ci:2:2");
  RunResult l = run_command(l_opts);
  CHECK(l.all_pass);
  REQUIRE(l.canonical["results"]["tables"].size() == 2);
  CHECK(l.canonical["results"]["tables"][0]["route"] == "cohomology");
  CHECK(l.canonical["results"]["tables"][1]["route"] == "closed-form");
  CHECK(l.canonical["results"]["tables"][0]["tilting_verified"] == true);
  CHECK(l.canonical["results"]["routes_agree"] == true);
  CHECK(l.canonical["results"]["tables"][0]["dims"] == nlohmann::json({"4", "12", "20", "28"}));

  RunOptions m_opts = base_options(Command::Hilbert, "beauville-donagi");
  m_opts.series = "M";
  m_opts.alpha = Partition({1});
  m_opts.max_degree = 0;
  RunResult m = run_command(m_opts);
  const nlohmann::json& mt = m.canonical["results"]["tables"][0];
  CHECK(mt["alpha"] == nlohmann::json({1}));
  CHECK(mt["dims"] == nlohmann::json({"6"}));
}

TEST_CASE("hilbert command rejects bad options") {
  RunOptions o = base_options(Command::Hilbert, "ci:2:2");
  o.series = "M";
  CHECK_THROWS_AS(run_command(o), UsageError);
  o.alpha = Partition({2});
  CHECK_THROWS_AS(run_command(o), UsageError);

  RunOptions s = base_options(Command::Hilbert, "ci:2:2");
  s.series = "Q";
  CHECK_THROWS_AS(run_command(s), UsageError);

  RunOptions d = base_options(Command::Hilbert, "ci:2:2");
  d.max_degree = -1;
  CHECK_THROWS_AS(run_command(d), UsageError);

  RunOptions v = base_options(Command::Vanishing, "ci:2:2");
  v.max_i = 0;
  CHECK_THROWS_AS(run_command(v), UsageError);
}

TEST_CASE("vanishing command body") {
  RunOptions o = base_options(Command::Vanishing, "ci:3:3");
  o.max_degree = 2;
  RunResult r = run_command(o);
  CHECK(r.all_pass);
  CHECK(r.canonical["options"]["max_i"] == 2);
  CHECK(r.canonical["results"]["i_max"] == 2);
  CHECK(r.canonical["results"]["ok"] == true);
  CHECK(r.canonical["results"]["keys_checked"].get<long long>() > 0);
  CHECK(!r.canonical["results"].contains("witness"));
}

TEST_CASE("oracle command body") {
  RunOptions o = base_options(Command::Oracle, "ci:2:2");
  o.max_degree = 2;
  RunResult r = run_command(o);
  CHECK(r.all_pass);
  const nlohmann::json& res = r.canonical["results"];
  CHECK(res["invariant_ring"]["supported"] == true);
  REQUIRE(res["invariant_ring"]["rows"].size() == 3);
  for (const auto& row : res["invariant_ring"]["rows"]) CHECK(row["agree"] == true);
  REQUIRE(res["euler"].size() == 2);
  for (const auto& row : res["euler"]) CHECK(row["agree"] == true);
}

TEST_CASE("canonical body is deterministic") {
  RunOptions a = base_options(Command::Hilbert, "ci:2:2");
  RunOptions b = a;
  b.threads = 4;
  std::string da = canonical_dump(run_command(a).canonical);
  std::string db = canonical_dump(run_command(b).canonical);
  CHECK(da == db);
  CHECK(da == canonical_dump(run_command(a).canonical));
}

TEST_CASE("command names") {
  CHECK(command_name(Command::Validate) == "validate");
  CHECK(command_name(Command::Cone) == "cone");
  CHECK(command_name(Command::Hilbert) == "hilbert");
  CHECK(command_name(Command::Vanishing) == "vanishing");
  CHECK(command_name(Command::Oracle) == "oracle");
}

}  // TEST_SUITE
