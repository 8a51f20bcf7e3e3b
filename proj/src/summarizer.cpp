#include "clts/summarizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "clts/rank.hpp"
#include "clts/text.hpp"

namespace clts {

std::string_view system_name(System system) {
  switch (system) {
    case System::Late: return "late";
    case System::Early: return "early";
    case System::SimFusion: return "simfusion";
    case System::CoRank: return "corank";
    case System::OurApproach: return "our-approach";
    case System::OurApproachNoChunks: return "our-approach-no-chunks";
  }
  return "unknown";
}

const std::vector<System>& all_systems() {
  static const std::vector<System> systems = {System::Late,   System::Early,
                                              System::SimFusion, System::CoRank,
                                              System::OurApproach, System::OurApproachNoChunks};
  return systems;
}

std::optional<System> parse_system(std::string_view name) {
  for (const System s : all_systems())
    if (system_name(s) == name) return s;
  return std::nullopt;
}

std::string system_names() {
  std::string out;
  for (const System s : all_systems()) {
    if (!out.empty()) out += ", ";
    out += system_name(s);
  }
  return out;
}

std::string CandidateUnit::text() const { return detokenize(surfaces(target_tokens)); }

std::string Summary::text() const {
  std::string out;
  for (const auto& u : units) out += u.text() + "\n";
  return out;
}

std::size_t Summary::compression_count() const {
  return static_cast<std::size_t>(std::count_if(units.begin(), units.end(), [](const auto& u) {
    return u.kind == CandidateUnit::Kind::Compression;
  }));
}

std::vector<CandidateUnit> build_candidate_pool(std::span<const BilingualSentence> sentences,
                                                std::span<const SentenceCluster> clusters,
                                                const std::map<std::string, Compression>& compressions) {
  // cluster owning each sentence, when its cluster was compressed
  std::vector<const SentenceCluster*> owner(sentences.size(), nullptr);
  for (const auto& c : clusters) {
    if (!compressions.contains(c.id)) continue;
    for (const std::size_t m : c.members) owner.at(m) = &c;
  }

  std::vector<CandidateUnit> pool;
  std::set<std::string> emitted;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const SentenceCluster* cluster = owner[i];
    if (!cluster) {
      CandidateUnit u;
      u.kind = CandidateUnit::Kind::Original;
      u.origin = sentences[i].id.str();
      u.covers = {sentences[i].id};
      u.target_tokens = sentences[i].target_tokens;
      u.target_vector = sentences[i].target_vector;
      u.source_vector = sentences[i].source_vector;
      u.word_count = word_count(u.target_tokens);
      u.pool_index = pool.size();
      pool.push_back(std::move(u));
      continue;
    }
    if (!emitted.insert(cluster->id).second) continue;
    const Compression& c = compressions.at(cluster->id);
    std::vector<TermVector> member_sources;
    for (const std::size_t m : cluster->members) member_sources.push_back(sentences[m].source_vector);

    CandidateUnit u;
    u.kind = CandidateUnit::Kind::Compression;
    u.origin = cluster->id;
    u.covers = cluster->member_ids;
    u.target_tokens = c.tokens;
    u.target_vector = TermVector::from_tokens(c.tokens);
    u.source_vector = TermVector::centroid(member_sources);
    u.word_count = c.word_count;
    u.pool_index = pool.size();
    pool.push_back(std::move(u));
  }
  return pool;
}

Summary greedy_select(std::vector<CandidateUnit> units, std::size_t budget,
                      double redundancy_theta) {
  std::stable_sort(units.begin(), units.end(), [](const CandidateUnit& a, const CandidateUnit& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.word_count != b.word_count) return a.word_count > b.word_count;
    return a.pool_index < b.pool_index;
  });

  Summary summary;
  for (auto& u : units) {
    if (u.word_count == 0 || summary.word_count + u.word_count > budget) continue;
    const bool redundant = std::any_of(summary.units.begin(), summary.units.end(), [&](const auto& s) {
      return cosine(s.target_vector, u.target_vector) >= redundancy_theta;
    });
    if (redundant) continue;
    summary.word_count += u.word_count;
    summary.units.push_back(std::move(u));
  }
  return summary;
}

namespace {

std::vector<RankInput> rank_inputs(const std::vector<CandidateUnit>& pool) {
  std::vector<RankInput> inputs;
  inputs.reserve(pool.size());
  for (const auto& u : pool) inputs.push_back(RankInput{&u.source_vector, &u.target_vector});
  return inputs;
}

void assign_scores(std::vector<CandidateUnit>& pool, const Eigen::VectorXd& scores) {
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].score = scores(static_cast<Eigen::Index>(i));
}

}  // namespace

SystemRun run_system_detailed(const Topic& topic, System system, const SummarizerConfig& config) {
  SystemRun run;
  run.sentences = topic.sentences();
  if (config.use_idf) apply_idf(run.sentences);

  if (system == System::OurApproach || system == System::OurApproachNoChunks) {
    MscConfig msc = config.msc;
    if (system == System::OurApproachNoChunks) msc.use_chunks = false;
    run.clusters = cluster_similar(run.sentences, config.theta_cluster);
    run.compressions = compress_clusters(run.clusters, run.sentences, msc);
  }
  run.pool = build_candidate_pool(run.sentences, run.clusters, run.compressions);

  if (!run.pool.empty()) {
    const auto inputs = rank_inputs(run.pool);
    const SimilarityMatrices m = build_matrices(inputs);
    switch (system) {
      case System::Early:
        assign_scores(run.pool, pagerank(m.target, config.damping));
        break;
      case System::Late:
        assign_scores(run.pool, pagerank(m.source, config.damping));
        break;
      case System::SimFusion:
        assign_scores(run.pool, simfusion(m, config.simfusion_lambda, config.damping));
        break;
      case System::CoRank:
      case System::OurApproach:
      case System::OurApproachNoChunks:
        assign_scores(run.pool, corank(m, config.alpha, config.beta, config.corank_tol,
                                       config.corank_max_iter).v);
        break;
    }
  }

  run.summary = greedy_select(run.pool, config.budget, config.theta_redundancy);
  run.summary.system = system;
  run.summary.topic = topic.id;
  return run;
}

Summary run_system(const Topic& topic, System system, const SummarizerConfig& config) {
  return run_system_detailed(topic, system, config).summary;
}

}  // namespace clts
