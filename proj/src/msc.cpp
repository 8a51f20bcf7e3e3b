#include "clts/msc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "clts/k_shortest.hpp"
#include "clts/text.hpp"

namespace clts {

double log_domain_score(double objective, std::size_t word_count) {
  if (word_count == 0) return std::numeric_limits<double>::infinity();
  return objective - std::log(static_cast<double>(word_count));
}

double Compression::normalized() const { return std::exp(log_score); }

std::string Compression::text() const {
  std::string out = detokenize(surfaces(tokens));
  // A path may start on a word that was mid-sentence in its source.
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

Compression score_path(const WordGraph& graph, std::vector<std::size_t> path, double bonus) {
  Compression c;
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex& v = graph.vertices()[path[i]];
    covered |= v.labels;
    c.word_count += v.words;
    c.tokens.insert(c.tokens.end(), v.tokens.begin(), v.tokens.end());
    if (i + 1 < path.size()) {
      const auto w = graph.arc_weight(path[i], path[i + 1]);
      if (!w) throw std::invalid_argument("path uses a missing arc");
      c.cohesion += *w;
    }
  }
  c.keywords_covered = static_cast<std::size_t>(std::popcount(covered));
  c.objective = c.cohesion - bonus * static_cast<double>(c.keywords_covered);
  c.log_score = log_domain_score(c.objective, c.word_count);
  c.path = std::move(path);
  return c;
}

std::vector<Compression> enumerate_compressions(const WordGraph& graph,
                                                const CompressionOptions& options) {
  if (graph.arcs().empty() || options.k_best == 0) return {};
  const std::size_t k_enum = options.k_enum ? options.k_enum : 10 * options.k_best;
  const double bonus = graph.keyword_bonus();
  const double max_gain =
      bonus * static_cast<double>(std::popcount(graph.present_labels()));

  Digraph adjacency(graph.vertex_count());
  for (const auto& a : graph.arcs()) adjacency[a.from].emplace_back(a.to, a.weight);

  const auto better = [](const Compression& a, const Compression& b) {
    if (a.objective != b.objective) return a.objective < b.objective;
    return a.path < b.path;
  };

  std::vector<Compression> kept;
  YenEnumerator paths(adjacency, WordGraph::kStart, WordGraph::kEnd);
  for (std::size_t examined = 0; examined < k_enum; ++examined) {
    auto next = paths.next();
    if (!next) break;
    if (kept.size() >= options.k_best &&
        next->cost - max_gain > kept[options.k_best - 1].objective + 1e-12)
      break;

    bool has_verb = false;
    for (const std::size_t v : next->vertices) has_verb = has_verb || graph.vertices()[v].has_verb;
    Compression c = score_path(graph, std::move(next->vertices), bonus);
    if (c.word_count == 0 || c.word_count < options.min_words) continue;
    if (options.require_verb && !has_verb) continue;

    kept.insert(std::upper_bound(kept.begin(), kept.end(), c, better), std::move(c));
    if (kept.size() > options.k_best) kept.pop_back();
  }
  return kept;
}

const Compression& best_compression(std::span<const Compression> candidates) {
  if (candidates.empty()) throw std::invalid_argument("best_compression of an empty list");
  const Compression* best = &candidates.front();
  for (const auto& c : candidates.subspan(1)) {
    if (c.log_score < best->log_score) {
      best = &c;
    } else if (c.log_score == best->log_score) {
      if (c.word_count < best->word_count ||
          (c.word_count == best->word_count && c.text() < best->text()))
        best = &c;
    }
  }
  return *best;
}

ClusterCompression compress_cluster(const SentenceCluster& cluster,
                                    std::span<const BilingualSentence> sentences,
                                    const MscConfig& config) {
  ClusterCompression out;
  LdaOptions lda = config.lda;
  lda.seed = derive_seed(config.master_seed, cluster.id);
  out.keywords = lda_keywords(cluster, sentences, lda);
  out.graph = build_word_graph(cluster, sentences, out.keywords, config.use_chunks);
  out.candidates = enumerate_compressions(out.graph, config.compression);
  for (auto& c : out.candidates) c.cluster_id = cluster.id;
  if (!out.candidates.empty()) out.best = best_compression(out.candidates);
  return out;
}

std::map<std::string, Compression> compress_clusters(std::span<const SentenceCluster> clusters,
                                                     std::span<const BilingualSentence> sentences,
                                                     const MscConfig& config) {
  std::map<std::string, Compression> out;
  for (const auto& cluster : clusters) {
    auto result = compress_cluster(cluster, sentences, config);
    if (result.best) out.emplace(cluster.id, std::move(*result.best));
  }
  return out;
}

}  // namespace clts
