#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/lda.hpp"
#include "clts/similarity.hpp"

namespace clts {

/// A word-graph vertex: one word (keyed by lowercased form and tag) or one multi-word
/// chunk (keyed by its lowercased text).
struct Vertex {
  std::string key;
  TokenList tokens;  // surface form of the first occurrence
  bool is_chunk = false;
  bool is_stopword = false;  // stopwords and punctuation
  bool has_verb = false;
  std::size_t words = 0;     // non-punctuation tokens
  std::uint64_t labels = 0;  // bit l set when keyword label l occurs in the vertex
  /// (sentence index, position) pairs; START is position 0 of every sentence.
  std::vector<std::pair<std::size_t, std::size_t>> occurrences;

  std::size_t frequency() const { return occurrences.size(); }
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

/// Directed word graph of a sentence cluster. Vertex 0 is START and vertex 1 is END.
class WordGraph {
 public:
  static constexpr std::size_t kStart = 0;
  static constexpr std::size_t kEnd = 1;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Arc indices leaving `v`, ordered by target vertex.
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_[v]; }
  std::optional<double> arc_weight(std::size_t from, std::size_t to) const;

  /// Vertex path START -> ... -> END followed by each input sentence.
  const std::vector<std::vector<std::size_t>>& sentence_paths() const { return sentence_paths_; }

  const KeywordSet& keywords() const { return keywords_; }
  /// Bitmask of labels carried by at least one vertex.
  std::uint64_t present_labels() const;

  /// Geometric mean of all arc weights.
  double keyword_bonus() const;

  std::size_t vertex_count() const { return vertices_.size(); }

 private:
  friend WordGraph build_word_graph(std::span<const TokenList>,
                                    std::span<const std::vector<Chunk>>, const KeywordSet&,
                                    bool);

  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> sentence_paths_;
  KeywordSet keywords_;
};

/// Builds the cluster word graph.
///
/// Units are words, or whole chunks of two or more tokens when `use_chunks` is set.
/// A sentence is mapped in stages: content units with zero or one candidate vertex
/// (and no repeat in the sentence) first, then ambiguous content units by context
/// overlap and vertex frequency, then stopwords and punctuation, which only merge
/// when a neighbour matches. No vertex takes two units of one sentence.
///
/// Arc weights follow the cohesion formula
///   w(i,j) = ((f_i + f_j) / sum_s 1/diff(s,i,j)) / (f_i * f_j)
/// where the sum runs over sentences in which i precedes j.
///
/// `chunks` may be empty (no chunks) or hold one list per sentence.
WordGraph build_word_graph(std::span<const TokenList> sentences,
                           std::span<const std::vector<Chunk>> chunks,
                           const KeywordSet& keywords, bool use_chunks = true);

WordGraph build_word_graph(const SentenceCluster& cluster,
                           std::span<const BilingualSentence> sentences,
                           const KeywordSet& keywords, bool use_chunks = true);

/// exp(mean(ln w)); throws std::invalid_argument on an empty list.
double geometric_mean(std::span<const double> weights);

/// The keyword bonus k of a graph; throws std::invalid_argument if it has no arcs.
double keyword_bonus(const WordGraph& graph);

/// Graphviz dump: vertices with labels and frequencies, arcs with weights.
std::string to_dot(const WordGraph& graph, std::string_view name = "word_graph");

}  // namespace clts
