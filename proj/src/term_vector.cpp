#include "clts/term_vector.hpp"

#include <cmath>

namespace clts {

TermVector TermVector::from_tokens(const TokenList& tokens) {
  TermVector v;
  for (const auto& t : tokens)
    if (t.is_content()) v.entries_[t.lowercased] += 1.0;
  v.refresh_norm();
  return v;
}

TermVector TermVector::centroid(std::span<const TermVector> vectors) {
  TermVector v;
  if (vectors.empty()) return v;
  for (const auto& member : vectors)
    for (const auto& [term, w] : member.entries_) v.entries_[term] += w;
  const double n = static_cast<double>(vectors.size());
  for (auto& [term, w] : v.entries_) w /= n;
  v.refresh_norm();
  return v;
}

void TermVector::add(const std::string& term, double weight) {
  if (weight <= 0.0) return;
  entries_[term] += weight;
  refresh_norm();
}

double TermVector::weight(const std::string& term) const {
  const auto it = entries_.find(term);
  return it == entries_.end() ? 0.0 : it->second;
}

double TermVector::dot(const TermVector& other) const {
  const auto& small = entries_.size() <= other.entries_.size() ? entries_ : other.entries_;
  const auto& large = &small == &entries_ ? other.entries_ : entries_;
  double sum = 0.0;
  for (const auto& [term, w] : small) {
    const auto it = large.find(term);
    if (it != large.end()) sum += w * it->second;
  }
  return sum;
}

void TermVector::refresh_norm() {
  double sq = 0.0;
  for (const auto& [term, w] : entries_) sq += w * w;
  norm_ = std::sqrt(sq);
}

}  // namespace clts
