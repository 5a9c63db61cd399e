#include <CLI11.hpp>

#include <iostream>

#include "grcone/report.hpp"

namespace {

struct CommonArgs {
  std::string preset;
  std::string config;
  bool json = false;
  int threads = 1;
  std::string cache;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  auto* preset = cmd->add_option("--preset", args.preset,
                                 "ci:N:d1[,d2...], isotropic-orth:N:k, "
                                 "isotropic-symp:N:k or beauville-donagi");
  auto* config = cmd->add_option("--config", args.config, "JSON presentation file");
  preset->excludes(config);
  cmd->add_flag("--json", args.json, "print the canonical JSON body instead of text");
  cmd->add_option("--threads", args.threads, "worker threads for degree sweeps")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--plethysm-cache", args.cache,
                  "cache file (or set GRCONE_PLETHYSM_CACHE)");
}

grcone::RunOptions to_options(grcone::Command command, const CommonArgs& args) {
  grcone::RunOptions options;
  options.command = command;
  if (!args.config.empty())
    options.config_path = args.config;
  else if (!args.preset.empty())
    options.preset_text = args.preset;
  else
    throw grcone::UsageError("one of --preset or --config is required");
  options.threads = args.threads;
  if (!args.cache.empty()) options.cache_path = args.cache;
  return options;
}

int emit(const grcone::RunResult& result, bool json) {
  if (json)
    std::cout << grcone::canonical_dump(result.canonical);
  else
    std::cout << result.text;
  std::cerr << "timing_ms=" << result.wall_ms << "\n";
  return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for Grassmannian cone presentations"};
  app.require_subcommand(1);

  CommonArgs validate_args, cone_args, hilbert_args, vanishing_args, oracle_args;

  CLI::App* validate = app.add_subcommand("validate", "check the presentation axioms");
  add_common(validate, validate_args);

  CLI::App* cone = app.add_subcommand("cone", "dimension, codimension and flag bookkeeping");
  add_common(cone, cone_args);

  CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimension tables");
  add_common(hilbert, hilbert_args);
  int max_degree = 3;
  std::string series = "Lambda";
  std::string alpha_text;
  hilbert->add_option("--max-degree", max_degree, "top degree of the sweep")
      ->check(CLI::Range(0, 64));
  hilbert->add_option("--series", series, "R, Lambda or M");
  hilbert->add_option("--alpha", alpha_text,
                      "box partition for series M, e.g. 2,1 ('' is the empty shape)");

  CLI::App* vanishing = app.add_subcommand("vanishing", "higher-cohomology sweep");
  add_common(vanishing, vanishing_args);
  int v_max_degree = 3;
  int v_max_i = -1;
  vanishing->add_option("--max-degree", v_max_degree, "top degree of the sweep")
      ->check(CLI::Range(0, 64));
  vanishing->add_option("--max-i", v_max_i, "top cohomological degree (default dim B)")
      ->check(CLI::Range(1, 256));

  CLI::App* oracle = app.add_subcommand("oracle", "independent cross-checks");
  add_common(oracle, oracle_args);
  int o_max_degree = 3;
  oracle->add_option("--max-degree", o_max_degree, "top degree of the invariant sweep")
      ->check(CLI::Range(0, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    grcone::RunOptions options;
    bool json = false;
    if (validate->parsed()) {
      options = to_options(grcone::Command::Validate, validate_args);
      json = validate_args.json;
    } else if (cone->parsed()) {
      options = to_options(grcone::Command::Cone, cone_args);
      json = cone_args.json;
    } else if (hilbert->parsed()) {
      options = to_options(grcone::Command::Hilbert, hilbert_args);
      options.max_degree = max_degree;
      options.series = series;
      if (hilbert->count("--alpha") > 0)
        options.alpha = grcone::parse_partition(alpha_text);
      json = hilbert_args.json;
    } else if (vanishing->parsed()) {
      options = to_options(grcone::Command::Vanishing, vanishing_args);
      options.max_degree = v_max_degree;
      if (v_max_i > 0) options.max_i = v_max_i;
      json = vanishing_args.json;
    } else if (oracle->parsed()) {
      options = to_options(grcone::Command::Oracle, oracle_args);
      options.max_degree = o_max_degree;
      json = oracle_args.json;
    }
    return emit(grcone::run_command(options), json);
  } catch (const grcone::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
