#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/term_vector.hpp"

namespace clts {

/// Cosine of two non-negative vectors, clamped to [0, 1]; 0 if either is empty.
double cosine(const TermVector& a, const TermVector& b);

/// A group of at least two mutually connected sentences from one topic.
struct SentenceCluster {
  std::string id;                    // "<topic>/c<k>"
  std::string topic;
  std::vector<std::size_t> members;  // indices into the clustered sentence list, ascending
  std::vector<SentenceId> member_ids;

  std::size_t size() const { return members.size(); }
};

/// Connected components (size >= 2) of the graph joining i and j whenever
/// min(cos_src(i,j), cos_tgt(i,j)) >= theta. Sentences of different topics never join.
/// Clusters are ordered by their first member; k counts from 0 within each topic.
std::vector<SentenceCluster> cluster_similar(std::span<const BilingualSentence> sentences,
                                             double theta);

/// Document frequencies over a sentence collection, for optional idf weighting.
class IdfTable {
 public:
  void add_document(const TermVector& v);
  /// log(N / df); terms never seen get log(N + 1).
  double idf(const std::string& term) const;
  TermVector weigh(const TermVector& v) const;

 private:
  std::map<std::string, std::size_t> document_frequency_;
  std::size_t documents_ = 0;
};

/// Rewrites both term vectors of every sentence with tf-idf weights computed over
/// `sentences` (source and target sides use separate tables).
void apply_idf(std::span<BilingualSentence> sentences);

}  // namespace clts
