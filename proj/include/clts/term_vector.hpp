#pragma once

#include <map>
#include <span>
#include <string>

#include "clts/token.hpp"

namespace clts {

/// Sparse term-weight vector with a cached Euclidean norm.
///
/// Sentence vectors hold raw term frequencies. Centroids of several sentences hold the
/// entrywise mean and may carry fractional weights. Zero weights are never stored.
class TermVector {
 public:
  TermVector() = default;

  /// Counts every content token (non-stopword, non-punctuation) by its lowercased form.
  static TermVector from_tokens(const TokenList& tokens);

  /// Entrywise mean of `vectors`; empty input yields an empty vector.
  static TermVector centroid(std::span<const TermVector> vectors);

  void add(const std::string& term, double weight = 1.0);

  double weight(const std::string& term) const;
  double norm() const { return norm_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, double>& entries() const { return entries_; }

  double dot(const TermVector& other) const;

  bool operator==(const TermVector& other) const { return entries_ == other.entries_; }

 private:
  void refresh_norm();

  std::map<std::string, double> entries_;
  double norm_ = 0.0;
};

}  // namespace clts
