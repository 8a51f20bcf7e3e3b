#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/msc.hpp"
#include "clts/similarity.hpp"

namespace clts {

enum class System { Late, Early, SimFusion, CoRank, OurApproach, OurApproachNoChunks };

std::string_view system_name(System system);
std::optional<System> parse_system(std::string_view name);
/// In reporting order.
const std::vector<System>& all_systems();
/// "late, early, ..." for diagnostics.
std::string system_names();

struct CandidateUnit {
  enum class Kind { Original, Compression };

  Kind kind = Kind::Original;
  std::string origin;  // sentence id or cluster id
  std::vector<SentenceId> covers;
  TokenList target_tokens;
  TermVector target_vector;
  TermVector source_vector;
  std::size_t word_count = 0;
  std::size_t pool_index = 0;
  double score = 0.0;

  std::string text() const;
};

struct Summary {
  System system = System::OurApproach;
  std::string topic;
  std::vector<CandidateUnit> units;
  std::size_t word_count = 0;

  /// One unit per line, newline-terminated.
  std::string text() const;
  std::size_t compression_count() const;
};

/// Replaces the members of every compressed cluster by one compression unit placed at
/// the first member's position; the unit's source vector is the members' centroid.
std::vector<CandidateUnit> build_candidate_pool(std::span<const BilingualSentence> sentences,
                                                std::span<const SentenceCluster> clusters,
                                                const std::map<std::string, Compression>& compressions);

/// Scans units by descending score (ties: more words first, then pool order), skipping
/// any unit whose target cosine with a selected unit reaches `redundancy_theta` or that
/// would overflow `budget`.
Summary greedy_select(std::vector<CandidateUnit> units, std::size_t budget = 250,
                      double redundancy_theta = 0.5);

struct SummarizerConfig {
  double theta_cluster = 0.6;
  double theta_redundancy = 0.5;
  double alpha = 0.5;
  double beta = 0.5;
  std::size_t budget = 250;
  double simfusion_lambda = 0.5;
  double damping = 0.85;
  double corank_tol = 1e-6;
  int corank_max_iter = 200;
  bool use_idf = false;
  MscConfig msc;
};

/// Everything a system run produced, for statistics and dumps.
struct SystemRun {
  Summary summary;
  std::vector<BilingualSentence> sentences;
  std::vector<SentenceCluster> clusters;
  std::map<std::string, Compression> compressions;
  std::vector<CandidateUnit> pool;  // scored, in pool order
};

SystemRun run_system_detailed(const Topic& topic, System system, const SummarizerConfig& config);

Summary run_system(const Topic& topic, System system, const SummarizerConfig& config);

}  // namespace clts
