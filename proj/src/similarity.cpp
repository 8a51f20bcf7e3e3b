#include "clts/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace clts {

double cosine(const TermVector& a, const TermVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double c = a.dot(b) / (a.norm() * b.norm());
  return std::clamp(c, 0.0, 1.0);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // the smaller index stays representative
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<SentenceCluster> cluster_similar(std::span<const BilingualSentence> sentences,
                                             double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must be in (0, 1]");
  const std::size_t n = sentences.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sentences[i].id.topic != sentences[j].id.topic) continue;
      const double joint = std::min(cosine(sentences[i].source_vector, sentences[j].source_vector),
                                    cosine(sentences[i].target_vector, sentences[j].target_vector));
      if (joint >= theta) sets.unite(i, j);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[sets.find(i)].push_back(i);

  std::vector<SentenceCluster> clusters;
  std::map<std::string, std::size_t> per_topic;
  for (auto& [root, members] : components) {
    if (members.size() < 2) continue;
    SentenceCluster c;
    c.topic = sentences[root].id.topic;
    c.id = c.topic + "/c" + std::to_string(per_topic[c.topic]++);
    c.members = std::move(members);
    for (const std::size_t m : c.members) c.member_ids.push_back(sentences[m].id);
    clusters.push_back(std::move(c));
  }
  return clusters;
}

void IdfTable::add_document(const TermVector& v) {
  ++documents_;
  for (const auto& [term, w] : v.entries()) ++document_frequency_[term];
}

double IdfTable::idf(const std::string& term) const {
  const auto it = document_frequency_.find(term);
  const double n = static_cast<double>(documents_);
  if (it == document_frequency_.end()) return std::log(n + 1.0);
  return std::log(n / static_cast<double>(it->second));
}

TermVector IdfTable::weigh(const TermVector& v) const {
  TermVector out;
  for (const auto& [term, w] : v.entries()) out.add(term, w * idf(term));
  return out;
}

void apply_idf(std::span<BilingualSentence> sentences) {
  IdfTable source;
  IdfTable target;
  for (const auto& s : sentences) {
    source.add_document(s.source_vector);
    target.add_document(s.target_vector);
  }
  for (auto& s : sentences) {
    s.source_vector = source.weigh(s.source_vector);
    s.target_vector = target.weigh(s.target_vector);
  }
}

}  // namespace clts
