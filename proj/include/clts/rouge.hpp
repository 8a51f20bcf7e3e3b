#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clts {

enum class RougeMetric { R1, R2, RSU4 };

std::string_view metric_name(RougeMetric metric);

struct RougeScore {
  RougeMetric metric = RougeMetric::R1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// How per-reference scores combine: arithmetic mean of precision and recall (f1 is
/// their harmonic mean), or the reference with the best f1.
enum class Aggregation { Mean, Max };

using NgramCounts = std::map<std::string, int>;

/// Lowercased tokens with every punctuation mark treated as a separator.
std::vector<std::string> rouge_tokens(std::string_view text);

/// Contiguous n-grams (space-joined) with multiplicity; n >= 1.
NgramCounts ngram_counts(std::span<const std::string> tokens, int n);

/// Ordered word pairs with at most `max_gap` words between them.
NgramCounts skip_bigram_counts(std::span<const std::string> tokens, int max_gap = 4);

/// ROUGE-SU4 counting units: skip-bigrams (gap <= 4) plus one "<s> w" pair per token,
/// the sentence-begin pairing that stands for the unigrams.
NgramCounts su4_counts(std::span<const std::string> tokens);

/// Precision/recall/f1 of clipped overlap between two count tables.
RougeScore overlap_score(const NgramCounts& candidate, const NgramCounts& reference,
                         RougeMetric metric);

RougeScore rouge_n(std::string_view candidate, std::span<const std::string> references, int n,
                   Aggregation aggregation = Aggregation::Mean);

RougeScore rouge_su4(std::string_view candidate, std::span<const std::string> references,
                     Aggregation aggregation = Aggregation::Mean);

struct RougeTriple {
  double r1 = 0.0;
  double r2 = 0.0;
  double rsu4 = 0.0;
};

/// f-scores of one candidate against its references.
RougeTriple rouge_f_scores(std::string_view candidate, std::span<const std::string> references,
                           Aggregation aggregation = Aggregation::Mean);

/// Per-system mean f-scores over topics. A system missing any topic gets no mean; its
/// row carries the missing topic names instead.
struct EvaluationReport {
  struct Row {
    std::string system;
    std::optional<RougeTriple> mean;
    std::vector<std::string> missing_topics;
  };

  std::vector<std::string> topics;
  std::vector<Row> rows;
  std::map<std::pair<std::string, std::string>, RougeTriple> cells;  // (system, topic)

  /// Aligned plain text; "--" marks a missing value.
  std::string to_table() const;
  /// system,topic,R-1,R-2,R-SU4 with one "mean" line per system.
  std::string to_csv() const;
};

/// `summaries` maps (system, topic) to summary text; `references` maps topic to its
/// reference texts. Topics without references are skipped.
EvaluationReport evaluate_systems(
    const std::map<std::pair<std::string, std::string>, std::string>& summaries,
    const std::map<std::string, std::vector<std::string>>& references,
    Aggregation aggregation = Aggregation::Mean);

}  // namespace clts
