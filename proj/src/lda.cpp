#include "clts/lda.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace clts {

int KeywordSet::id_of(const std::string& term) const {
  const auto it = std::find(labels.begin(), labels.end(), term);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view id) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stable_hash(id) | 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Portable uniform draw in [0, 1) from the raw 64-bit engine output.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

KeywordSet lda_keywords(std::span<const TokenList> documents, const LdaOptions& options) {
  if (options.n_topics < 1) throw std::invalid_argument("n_topics must be >= 1");

  std::map<std::string, int> vocab_index;
  for (const auto& doc : documents)
    for (const auto& t : doc)
      if (t.is_content()) vocab_index.emplace(t.lowercased, 0);
  if (vocab_index.empty()) return {};

  std::vector<std::string> vocab;
  for (auto& [term, id] : vocab_index) {
    id = static_cast<int>(vocab.size());
    vocab.push_back(term);
  }
  const int V = static_cast<int>(vocab.size());
  const int T = options.n_topics;

  std::vector<std::vector<int>> words;
  for (const auto& doc : documents) {
    std::vector<int> w;
    for (const auto& t : doc)
      if (t.is_content()) w.push_back(vocab_index.at(t.lowercased));
    words.push_back(std::move(w));
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<int>> z(words.size());
  std::vector<std::vector<int>> doc_topic(words.size(), std::vector<int>(T, 0));
  std::vector<std::vector<int>> topic_word(T, std::vector<int>(V, 0));
  std::vector<int> topic_total(T, 0);

  for (std::size_t d = 0; d < words.size(); ++d) {
    z[d].resize(words[d].size());
    for (std::size_t i = 0; i < words[d].size(); ++i) {
      const int k = std::min(T - 1, static_cast<int>(uniform01(rng) * T));
      z[d][i] = k;
      ++doc_topic[d][k];
      ++topic_word[k][words[d][i]];
      ++topic_total[k];
    }
  }

  const double vbeta = V * options.beta;
  std::vector<double> p(T);
  for (int it = 0; it < options.iterations && T > 1; ++it) {
    for (std::size_t d = 0; d < words.size(); ++d) {
      for (std::size_t i = 0; i < words[d].size(); ++i) {
        const int w = words[d][i];
        int k = z[d][i];
        --doc_topic[d][k];
        --topic_word[k][w];
        --topic_total[k];

        double sum = 0.0;
        for (int t = 0; t < T; ++t) {
          sum += (doc_topic[d][t] + options.alpha) * (topic_word[t][w] + options.beta) /
                 (topic_total[t] + vbeta);
          p[t] = sum;
        }
        const double u = uniform01(rng) * sum;
        k = static_cast<int>(std::upper_bound(p.begin(), p.end(), u) - p.begin());
        k = std::min(k, T - 1);

        z[d][i] = k;
        ++doc_topic[d][k];
        ++topic_word[k][w];
        ++topic_total[k];
      }
    }
  }

  const int dominant =
      static_cast<int>(std::max_element(topic_total.begin(), topic_total.end()) - topic_total.begin());
  std::vector<int> order(V);
  for (int w = 0; w < V; ++w) order[w] = w;
  // phi(w) = (n_tw + beta) / (n_t + V beta); the denominator is shared within a topic.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return topic_word[dominant][a] > topic_word[dominant][b];
  });

  KeywordSet out;
  const int n_top = std::clamp(options.n_top, 0, V);
  for (int i = 0; i < n_top; ++i) out.labels.push_back(vocab[order[i]]);
  return out;
}

KeywordSet lda_keywords(const SentenceCluster& cluster,
                        std::span<const BilingualSentence> sentences, const LdaOptions& options) {
  std::vector<TokenList> docs;
  docs.reserve(cluster.members.size());
  for (const std::size_t m : cluster.members) docs.push_back(sentences[m].target_tokens);
  return lda_keywords(docs, options);
}

}  // namespace clts
