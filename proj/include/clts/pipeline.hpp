#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/summarizer.hpp"

namespace clts {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDataFault = 2 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  std::string source_lang = "fr";
  std::string target_lang = "en";
  double theta_cluster = 0.6;
  double theta_redundancy = 0.5;
  double alpha = 0.5;
  double beta = 0.5;
  std::size_t k_best = 50;
  std::size_t k_enum = 0;  // 0 = 10 * k_best
  std::size_t budget = 250;
  std::size_t min_words = 8;
  bool require_verb = true;
  int lda_topics = 1;
  int lda_top = 5;
  int lda_iterations = 200;
  double lda_alpha = 0.1;
  double lda_beta = 0.01;
  std::uint64_t seed = 2019;
  bool chunks = true;
  double simfusion_lambda = 0.5;
  double damping = 0.85;
  bool use_idf = false;
  std::string provider = "file";
  std::map<std::string, std::string> provider_options;  // "provider.<key>" entries
  int jobs = 1;

  /// Applies one key=value setting. Keys are the field names above;
  /// "provider.<key>" entries go to provider_options. Throws ConfigError.
  void set(const std::string& key, const std::string& value);

  /// Reads a key=value file ('#' starts a comment). Throws ConfigError.
  void load_file(const std::filesystem::path& path);

  /// Throws ConfigError when a field is out of range.
  void validate() const;

  SummarizerConfig summarizer() const;
  LoadOptions load_options() const;

  /// Every setting as key=value lines, in a fixed order.
  std::string dump() const;
};

/// Loads the corpus with the configured provider.
std::vector<Topic> load_corpus(const std::filesystem::path& corpus_root,
                               const PipelineConfig& config);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Metadata sidecar: one JSON object per selected unit.
std::string summary_metadata(const Summary& summary);

/// Runs `systems` (names) on every topic and writes
/// out_dir/<system>/<topic>.txt plus out_dir/<system>/<topic>.meta.jsonl.
int cmd_summarize(const PipelineConfig& config, const std::filesystem::path& corpus_root,
                  const std::vector<std::string>& systems, const std::filesystem::path& out_dir,
                  std::ostream& out, std::ostream& err);

/// Scores summaries_dir/<system>/<topic>.txt against corpus_root/<topic>/ref*.<tgt>.txt,
/// prints the table, and writes evaluation.txt and evaluation.csv into summaries_dir.
int cmd_evaluate(const PipelineConfig& config, const std::filesystem::path& summaries_dir,
                 const std::filesystem::path& corpus_root, std::ostream& out, std::ostream& err);

struct ClusterStats {
  std::int64_t clusters = 0;
  Mean cluster_size;             // members per cluster
  Mean cluster_length;           // words per member sentence
  Mean compression_length;       // words per compression
  Mean compressions_in_summary;  // compression units per our-approach summary
  double compression_rate = 0.0; // mean of compression words / mean member words
  std::int64_t compressions = 0;
};

ClusterStats cluster_stats(const std::vector<Topic>& topics, const PipelineConfig& config);

/// Corpus statistics, and cluster statistics unless `with_clusters` is false.
int cmd_stats(const PipelineConfig& config, const std::filesystem::path& corpus_root,
              bool with_clusters, std::ostream& out, std::ostream& err);

/// Per-cluster keywords, best compression and candidates; optional DOT dumps.
int cmd_compress(const PipelineConfig& config, const std::filesystem::path& corpus_root,
                 const std::optional<std::filesystem::path>& dot_dir, std::ostream& out,
                 std::ostream& err);

/// CoRank u/v scores per unit; `with_compressions` ranks the compression-augmented pool.
int cmd_rank(const PipelineConfig& config, const std::filesystem::path& corpus_root,
             bool with_compressions, std::ostream& out, std::ostream& err);

}  // namespace clts
