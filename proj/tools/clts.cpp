// Command-line front end: summarize, evaluate, stats, compress, rank.
#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clts/pipeline.hpp"

namespace {

constexpr const char* kConfigKeys[] = {
    "source",       "target",        "theta_cluster",  "theta_redundancy", "alpha",
    "beta",         "k_best",        "k_enum",         "budget",           "min_words",
    "require_verb", "lda_topics",    "lda_top",        "lda_iterations",   "lda_alpha",
    "lda_beta",     "seed",          "chunks",         "simfusion_lambda", "damping",
    "use_idf",      "provider",      "jobs",
};

// Flags shared by every subcommand. Values stay as strings and go through
// PipelineConfig::set, so the file and the command line parse identically.
struct CommonFlags {
  std::string config_file;
  std::map<std::string, std::string> values;
  std::vector<std::string> provider_options;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "key=value configuration file");
    for (const char* key : kConfigKeys) {
      std::string flag = std::string("--") + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      cmd->add_option_function<std::string>(
          flag, [this, k = std::string(key)](const std::string& v) { values[k] = v; },
          std::string("overrides ") + key);
    }
    cmd->add_option("--provider-option", provider_options,
                    "provider setting as key=value (e.g. url=http://host:8080/translate)");
  }

  clts::PipelineConfig build() const {
    clts::PipelineConfig config;
    if (!config_file.empty()) config.load_file(config_file);
    for (const auto& [k, v] : values) config.set(k, v);
    for (const auto& kv : provider_options) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw clts::ConfigError("--provider-option expects key=value, got '" + kv + "'");
      config.set("provider." + kv.substr(0, eq), kv.substr(eq + 1));
    }
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-language compressive summarization"};
  app.require_subcommand(1);

  std::string corpus;
  std::string out_dir;
  std::string summaries_dir;
  std::string dot_dir;
  std::vector<std::string> systems;
  bool no_clusters = false;
  bool with_compressions = false;
  bool dump_config = false;

  CommonFlags summarize_flags;
  auto* summarize = app.add_subcommand("summarize", "write one summary per system and topic");
  summarize->add_option("corpus", corpus, "corpus root")->required();
  summarize->add_option("-o,--out", out_dir, "output directory")->required();
  summarize->add_option("-s,--system", systems,
                        "system to run (repeatable; default all: " + clts::system_names() + ")");
  summarize->add_flag("--dump-config", dump_config, "print the effective configuration first");
  summarize_flags.attach(summarize);

  CommonFlags evaluate_flags;
  auto* evaluate = app.add_subcommand("evaluate", "score summaries with ROUGE-1/2/SU4");
  evaluate->add_option("summaries", summaries_dir, "directory written by summarize")->required();
  evaluate->add_option("corpus", corpus, "corpus root holding the references")->required();
  evaluate_flags.attach(evaluate);

  CommonFlags stats_flags;
  auto* stats = app.add_subcommand("stats", "corpus and cluster statistics");
  stats->add_option("corpus", corpus, "corpus root")->required();
  stats->add_flag("--no-clusters", no_clusters, "skip clustering and compression statistics");
  stats_flags.attach(stats);

  CommonFlags compress_flags;
  auto* compress = app.add_subcommand("compress", "dump per-cluster compressions");
  compress->add_option("corpus", corpus, "corpus root")->required();
  compress->add_option("--dot", dot_dir, "write one Graphviz file per cluster here");
  compress_flags.attach(compress);

  CommonFlags rank_flags;
  auto* rank = app.add_subcommand("rank", "dump CoRank u/v scores");
  rank->add_option("corpus", corpus, "corpus root")->required();
  rank->add_flag("--with-compressions", with_compressions, "rank the compression-augmented pool");
  rank_flags.attach(rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? clts::kExitOk : clts::kExitUsage;
  }

  const auto config_for = [](const CommonFlags& flags) -> std::optional<clts::PipelineConfig> {
    try {
      return flags.build();
    } catch (const clts::ConfigError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return std::nullopt;
    }
  };

  if (summarize->parsed()) {
    const auto config = config_for(summarize_flags);
    if (!config) return clts::kExitUsage;
    if (dump_config) std::cout << config->dump();
    return clts::cmd_summarize(*config, corpus, systems, out_dir, std::cout, std::cerr);
  }
  if (evaluate->parsed()) {
    const auto config = config_for(evaluate_flags);
    if (!config) return clts::kExitUsage;
    return clts::cmd_evaluate(*config, summaries_dir, corpus, std::cout, std::cerr);
  }
  if (stats->parsed()) {
    const auto config = config_for(stats_flags);
    if (!config) return clts::kExitUsage;
    return clts::cmd_stats(*config, corpus, !no_clusters, std::cout, std::cerr);
  }
  if (compress->parsed()) {
    const auto config = config_for(compress_flags);
    if (!config) return clts::kExitUsage;
    std::optional<std::filesystem::path> dot;
    if (!dot_dir.empty()) dot = dot_dir;
    return clts::cmd_compress(*config, corpus, dot, std::cout, std::cerr);
  }
  if (rank->parsed()) {
    const auto config = config_for(rank_flags);
    if (!config) return clts::kExitUsage;
    return clts::cmd_rank(*config, corpus, with_compressions, std::cout, std::cerr);
  }
  return clts::kExitUsage;
}
