#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/similarity.hpp"

namespace clts {

struct LdaOptions {
  int n_topics = 1;
  int n_top = 5;  // clamped to the vocabulary size
  int iterations = 200;
  double alpha = 0.1;
  double beta = 0.01;
  std::uint64_t seed = 0;
};

/// Keyword labels of a cluster. The label id is the position in `labels`.
struct KeywordSet {
  std::vector<std::string> labels;

  bool empty() const { return labels.empty(); }
  std::size_t size() const { return labels.size(); }
  /// -1 when `term` is not a label.
  int id_of(const std::string& term) const;
  bool operator==(const KeywordSet&) const = default;
};

/// Collapsed Gibbs sampling over `documents` (content tokens only). Returns the `n_top`
/// most probable terms of the dominant topic, i.e. the topic holding the most token
/// assignments after the last sweep. Probability ties are broken alphabetically.
KeywordSet lda_keywords(std::span<const TokenList> documents, const LdaOptions& options);

/// Runs on the target-side sentences of `cluster`.
KeywordSet lda_keywords(const SentenceCluster& cluster,
                        std::span<const BilingualSentence> sentences, const LdaOptions& options);

/// FNV-1a; stable across platforms and runs.
std::uint64_t stable_hash(std::string_view text);

/// Mixes a master seed with an identifier (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::string_view id);

}  // namespace clts
