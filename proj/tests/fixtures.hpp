// Shared test data: fixture paths and small random generators.
#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "clts/corpus.hpp"
#include "clts/lda.hpp"
#include "clts/term_vector.hpp"
#include "clts/word_graph.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return CLTS_TEST_DATA; }
inline std::filesystem::path mini_corpus() { return data_dir() / "mini_corpus"; }
inline std::filesystem::path stats_corpus() { return data_dir() / "stats_corpus"; }

inline clts::TokenList tokens(const std::string& tagged, const std::string& lang = "en") {
  return clts::tokenize_sentence(tagged, lang);
}

/// A fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("clts_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct RandomCluster {
  std::vector<clts::TokenList> sentences;
  std::vector<std::vector<clts::Chunk>> chunks;
  clts::KeywordSet keywords;
};

/// 2-4 short English sentences over a tiny vocabulary, so vertices get shared.
inline RandomCluster random_cluster(std::mt19937_64& rng) {
  static const std::vector<std::pair<std::string, clts::Pos>> vocab = {
      {"the", clts::Pos::OTHER},  {"storm", clts::Pos::NC},  {"hit", clts::Pos::VERB},
      {"old", clts::Pos::ADJ},    {"bridge", clts::Pos::NC}, {"near", clts::Pos::OTHER},
      {"river", clts::Pos::NC},   {"damaged", clts::Pos::VERB}, {"city", clts::Pos::NC},
      {"Chile", clts::Pos::NP},   {"quickly", clts::Pos::OTHER}, {".", clts::Pos::PUNCT}};
  static const std::vector<std::string> content = {"storm", "hit",     "old",  "bridge",
                                                   "river", "damaged", "city", "chile"};
  std::uniform_int_distribution<int> n_sentences(2, 4), length(3, 7),
      word(0, static_cast<int>(vocab.size()) - 2), n_labels(0, 4);
  RandomCluster c;
  const int ns = n_sentences(rng);
  for (int s = 0; s < ns; ++s) {
    clts::TokenList t;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      const auto& [surface, pos] = vocab[static_cast<std::size_t>(word(rng))];
      t.push_back(clts::make_token(surface, pos, "en"));
    }
    if (rng() % 2) t.push_back(clts::make_token(".", clts::Pos::PUNCT, "en"));
    c.chunks.push_back(clts::mark_chunks(t, "en"));
    c.sentences.push_back(std::move(t));
  }
  std::vector<std::string> pool = content;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(n_labels(rng)));
  c.keywords.labels = pool;
  return c;
}

/// Bag of words of random length over `vocab`; never empty.
inline clts::TermVector random_vector(std::mt19937_64& rng, const std::vector<std::string>& vocab) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  clts::TokenList t;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) t.push_back(clts::make_token(vocab[pick(rng)], clts::Pos::NC, "en"));
  return clts::TermVector::from_tokens(t);
}

inline const std::vector<std::string>& source_vocab() {
  static const std::vector<std::string> v = {"séisme", "côte", "chili", "port",   "ville",
                                             "maison", "alerte", "tsunami", "armée", "prison"};
  return v;
}
inline const std::vector<std::string>& target_vocab() {
  static const std::vector<std::string> v = {"earthquake", "coast", "chile", "port",   "city",
                                             "house",      "alert", "tsunami", "army", "prison"};
  return v;
}

}  // namespace fixtures
