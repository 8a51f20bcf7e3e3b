#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clts/lda.hpp"
#include "clts/similarity.hpp"
#include "clts/word_graph.hpp"

namespace clts {

/// A START -> END path of a word graph read as a sentence.
struct Compression {
  std::string cluster_id;
  std::vector<std::size_t> path;  // vertex ids, START and END included
  TokenList tokens;
  std::size_t word_count = 0;  // ||c||: non-punctuation tokens
  double cohesion = 0.0;       // sum of arc weights along the path
  std::size_t keywords_covered = 0;
  double objective = 0.0;  // cohesion - k * keywords_covered
  double log_score = 0.0;  // objective - ln(word_count)

  /// e^objective / word_count; may overflow to infinity, compare `log_score` instead.
  double normalized() const;
  std::string text() const;
};

struct CompressionOptions {
  std::size_t k_best = 50;
  std::size_t k_enum = 0;  // paths examined at most; 0 means 10 * k_best
  std::size_t min_words = 8;
  bool require_verb = true;
};

/// Loopless paths are drawn in increasing cohesion order and rescored with the keyword
/// term. Enumeration stops at `k_enum` paths, or earlier once no unseen path can enter
/// the current top `k_best`: every later path costs at least the current cohesion, and
/// the keyword term can lower that by at most k times the labels present in the graph.
/// Paths shorter than `min_words` or (optionally) without a verb are dropped. Results
/// are sorted by objective, then by vertex sequence.
std::vector<Compression> enumerate_compressions(const WordGraph& graph,
                                                const CompressionOptions& options);

/// ln(e^objective / word_count) = objective - ln(word_count); +infinity for zero words.
double log_domain_score(double objective, std::size_t word_count);

/// Scores one explicit path (used to replay paths and by tests).
Compression score_path(const WordGraph& graph, std::vector<std::size_t> path, double bonus);

/// Argmin of objective - ln ||c||. Ties: fewer words, then lexicographic text.
/// Throws std::invalid_argument on an empty list.
const Compression& best_compression(std::span<const Compression> candidates);

struct MscConfig {
  LdaOptions lda;                 // lda.seed is ignored; seeds derive from master_seed
  CompressionOptions compression;
  bool use_chunks = true;
  std::uint64_t master_seed = 2019;
};

/// Full trace of one cluster, for inspection.
struct ClusterCompression {
  KeywordSet keywords;
  WordGraph graph;
  std::vector<Compression> candidates;
  std::optional<Compression> best;
};

ClusterCompression compress_cluster(const SentenceCluster& cluster,
                                    std::span<const BilingualSentence> sentences,
                                    const MscConfig& config);

/// Compressions keyed by cluster id; clusters without a valid path are absent.
std::map<std::string, Compression> compress_clusters(std::span<const SentenceCluster> clusters,
                                                     std::span<const BilingualSentence> sentences,
                                                     const MscConfig& config);

}  // namespace clts
