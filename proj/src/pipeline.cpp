#include "clts/pipeline.hpp"

#include <fmt/format.h>

#include <atomic>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "clts/rank.hpp"
#include "clts/rouge.hpp"
#include "clts/text.hpp"
#include "clts/translation.hpp"

namespace clts {

namespace fs = std::filesystem;

// Configuration --------------------------------------------------------------

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError("invalid value '" + value + "' for " + key);
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = to_lower(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("invalid boolean '" + value + "' for " + key);
}

}  // namespace

void PipelineConfig::set(const std::string& key, const std::string& value) {
  if (key.starts_with("provider.")) {
    provider_options[key.substr(9)] = value;
    return;
  }
  if (key == "source") source_lang = value;
  else if (key == "target") target_lang = value;
  else if (key == "theta_cluster") theta_cluster = parse_number<double>(key, value);
  else if (key == "theta_redundancy") theta_redundancy = parse_number<double>(key, value);
  else if (key == "alpha") alpha = parse_number<double>(key, value);
  else if (key == "beta") beta = parse_number<double>(key, value);
  else if (key == "k_best") k_best = parse_number<std::size_t>(key, value);
  else if (key == "k_enum") k_enum = parse_number<std::size_t>(key, value);
  else if (key == "budget") budget = parse_number<std::size_t>(key, value);
  else if (key == "min_words") min_words = parse_number<std::size_t>(key, value);
  else if (key == "require_verb") require_verb = parse_bool(key, value);
  else if (key == "lda_topics") lda_topics = parse_number<int>(key, value);
  else if (key == "lda_top") lda_top = parse_number<int>(key, value);
  else if (key == "lda_iterations") lda_iterations = parse_number<int>(key, value);
  else if (key == "lda_alpha") lda_alpha = parse_number<double>(key, value);
  else if (key == "lda_beta") lda_beta = parse_number<double>(key, value);
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "chunks") chunks = parse_bool(key, value);
  else if (key == "simfusion_lambda") simfusion_lambda = parse_number<double>(key, value);
  else if (key == "damping") damping = parse_number<double>(key, value);
  else if (key == "use_idf") use_idf = parse_bool(key, value);
  else if (key == "provider") provider = value;
  else if (key == "jobs") jobs = parse_number<int>(key, value);
  else throw ConfigError("unknown configuration key '" + key + "'");
}

void PipelineConfig::load_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(fmt::format("{}:{}: expected key=value", path.string(), number));
    set(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
  }
}

void PipelineConfig::validate() const {
  const auto unit_interval = [](double x) { return x > 0.0 && x <= 1.0; };
  if (!unit_interval(theta_cluster)) throw ConfigError("theta_cluster must be in (0, 1]");
  if (!unit_interval(theta_redundancy)) throw ConfigError("theta_redundancy must be in (0, 1]");
  if (alpha < 0.0 || beta < 0.0 || std::abs(alpha + beta - 1.0) > 1e-12)
    throw ConfigError("alpha and beta must be non-negative and sum to 1");
  if (budget == 0) throw ConfigError("budget must be positive");
  if (k_best == 0) throw ConfigError("k_best must be positive");
  if (k_enum != 0 && k_enum < k_best) throw ConfigError("k_enum must be 0 or >= k_best");
  if (lda_topics < 1) throw ConfigError("lda_topics must be >= 1");
  if (lda_top < 0 || lda_top > 64) throw ConfigError("lda_top must be in [0, 64]");
  if (lda_iterations < 0) throw ConfigError("lda_iterations must be >= 0");
  if (!(lda_alpha > 0.0) || !(lda_beta > 0.0)) throw ConfigError("LDA priors must be positive");
  if (!(damping > 0.0 && damping < 1.0)) throw ConfigError("damping must be in (0, 1)");
  if (!(simfusion_lambda >= 0.0 && simfusion_lambda <= 1.0))
    throw ConfigError("simfusion_lambda must be in [0, 1]");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  if (provider != "file" && provider != "identity" && provider != "remote")
    throw ConfigError("unknown provider '" + provider + "' (valid: file, identity, remote)");
  if (source_lang.empty() || target_lang.empty()) throw ConfigError("language codes required");
}

SummarizerConfig PipelineConfig::summarizer() const {
  SummarizerConfig c;
  c.theta_cluster = theta_cluster;
  c.theta_redundancy = theta_redundancy;
  c.alpha = alpha;
  c.beta = beta;
  c.budget = budget;
  c.simfusion_lambda = simfusion_lambda;
  c.damping = damping;
  c.use_idf = use_idf;
  c.msc.use_chunks = chunks;
  c.msc.master_seed = seed;
  c.msc.compression.k_best = k_best;
  c.msc.compression.k_enum = k_enum;
  c.msc.compression.min_words = min_words;
  c.msc.compression.require_verb = require_verb;
  c.msc.lda.n_topics = lda_topics;
  c.msc.lda.n_top = lda_top;
  c.msc.lda.iterations = lda_iterations;
  c.msc.lda.alpha = lda_alpha;
  c.msc.lda.beta = lda_beta;
  return c;
}

LoadOptions PipelineConfig::load_options() const {
  LoadOptions o;
  o.mark_chunks = true;  // systems without chunks ignore them
  return o;
}

std::string PipelineConfig::dump() const {
  std::string out;
  const auto line = [&](std::string_view k, const auto& v) { out += fmt::format("{}={}\n", k, v); };
  line("source", source_lang);
  line("target", target_lang);
  line("theta_cluster", theta_cluster);
  line("theta_redundancy", theta_redundancy);
  line("alpha", alpha);
  line("beta", beta);
  line("k_best", k_best);
  line("k_enum", k_enum);
  line("budget", budget);
  line("min_words", min_words);
  line("require_verb", require_verb);
  line("lda_topics", lda_topics);
  line("lda_top", lda_top);
  line("lda_iterations", lda_iterations);
  line("lda_alpha", lda_alpha);
  line("lda_beta", lda_beta);
  line("seed", seed);
  line("chunks", chunks);
  line("simfusion_lambda", simfusion_lambda);
  line("damping", damping);
  line("use_idf", use_idf);
  line("provider", provider);
  for (const auto& [k, v] : provider_options) line("provider." + k, v);
  line("jobs", jobs);
  return out;
}

std::vector<Topic> load_corpus(const fs::path& corpus_root, const PipelineConfig& config) {
  const auto provider = make_provider(config.provider, config.provider_options);
  return load_topics(corpus_root, config.source_lang, config.target_lang, *provider,
                     config.load_options());
}

// Helpers --------------------------------------------------------------------

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string summary_metadata(const Summary& summary) {
  std::string out;
  for (std::size_t i = 0; i < summary.units.size(); ++i) {
    const auto& u = summary.units[i];
    nlohmann::ordered_json j;
    j["system"] = system_name(summary.system);
    j["topic"] = summary.topic;
    j["rank"] = i;
    j["kind"] = u.kind == CandidateUnit::Kind::Compression ? "compression" : "original";
    j["origin"] = u.origin;
    j["score"] = u.score;
    j["words"] = u.word_count;
    std::vector<std::string> covers;
    for (const auto& id : u.covers) covers.push_back(id.str());
    j["covers"] = covers;
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

// Runs fn(i) for i in [0, n) on `jobs` threads; rethrows the first failure by index.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Maps exceptions onto exit codes with a diagnostic.
template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataFault;
  } catch (const TranslationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataFault;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataFault;
  }
}

std::string fixed(double x, int digits) { return fmt::format("{:.{}f}", x, digits); }

}  // namespace

// Commands -------------------------------------------------------------------

int cmd_summarize(const PipelineConfig& config, const fs::path& corpus_root,
                  const std::vector<std::string>& systems, const fs::path& out_dir,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::vector<System> selected;
    for (const auto& name : systems) {
      const auto s = parse_system(name);
      if (!s) {
        err << "error: unknown system '" << name << "' (valid: " << system_names() << ")\n";
        return static_cast<int>(kExitUsage);
      }
      selected.push_back(*s);
    }
    if (selected.empty()) selected = all_systems();

    const auto topics = load_corpus(corpus_root, config);
    const auto summarizer = config.summarizer();
    std::vector<std::vector<Summary>> results(topics.size());
    parallel_for(topics.size(), config.jobs, [&](std::size_t t) {
      for (const System s : selected) {
        Summary summary = run_system(topics[t], s, summarizer);
        const fs::path dir = out_dir / std::string(system_name(s));
        write_file_atomic(dir / (topics[t].id + ".txt"), summary.text());
        write_file_atomic(dir / (topics[t].id + ".meta.jsonl"), summary_metadata(summary));
        results[t].push_back(std::move(summary));
      }
    });

    std::size_t files = 0;
    for (const auto& per_topic : results) {
      for (const auto& s : per_topic) {
        out << fmt::format("{}\t{}\t{} units\t{} words\t{} compressions\n", system_name(s.system),
                           s.topic, s.units.size(), s.word_count, s.compression_count());
        ++files;
      }
    }
    out << fmt::format("wrote {} summaries to {}\n", files, out_dir.string());
    return static_cast<int>(kExitOk);
  });
}

int cmd_evaluate(const PipelineConfig& config, const fs::path& summaries_dir,
                 const fs::path& corpus_root, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::is_directory(summaries_dir))
      throw CorpusError("summaries directory not found: " + summaries_dir.string());
    if (!fs::is_directory(corpus_root))
      throw CorpusError("corpus root is not a directory: " + corpus_root.string());

    std::map<std::pair<std::string, std::string>, std::string> summaries;
    std::vector<fs::path> system_dirs;
    for (const auto& e : fs::directory_iterator(summaries_dir))
      if (e.is_directory()) system_dirs.push_back(e.path());
    std::sort(system_dirs.begin(), system_dirs.end());
    for (const auto& dir : system_dirs) {
      for (const auto& f : fs::directory_iterator(dir)) {
        const std::string name = f.path().filename().string();
        if (!name.ends_with(".txt")) continue;
        std::ifstream in(f.path(), std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        summaries[{dir.filename().string(), name.substr(0, name.size() - 4)}] = text.str();
      }
    }

    std::map<std::string, std::vector<std::string>> references;
    const std::string suffix = "." + config.target_lang + ".txt";
    std::vector<fs::path> topic_dirs;
    for (const auto& e : fs::directory_iterator(corpus_root))
      if (e.is_directory()) topic_dirs.push_back(e.path());
    std::sort(topic_dirs.begin(), topic_dirs.end());
    for (const auto& dir : topic_dirs) {
      std::vector<fs::path> refs;
      for (const auto& f : fs::directory_iterator(dir)) {
        const std::string name = f.path().filename().string();
        if (name.starts_with("ref") && name.ends_with(suffix)) refs.push_back(f.path());
      }
      std::sort(refs.begin(), refs.end());
      auto& texts = references[dir.filename().string()];
      for (const auto& r : refs) {
        std::ifstream in(r, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        texts.push_back(text.str());
      }
    }
    for (const auto& [key, text] : summaries) {
      const auto it = references.find(key.second);
      if (it == references.end() || it->second.empty())
        throw CorpusError("missing references for topic " + key.second + " (expected " +
                          (corpus_root / key.second / ("ref*" + suffix)).string() + ")");
    }
    // Only topics that some system summarized take part.
    std::map<std::string, std::vector<std::string>> used;
    for (const auto& [key, text] : summaries) used[key.second] = references.at(key.second);

    if (summaries.empty()) err << "warning: no summaries found in " << summaries_dir.string() << '\n';
    const auto report = evaluate_systems(summaries, used);
    const std::string table = report.to_table();
    out << table;
    write_file_atomic(summaries_dir / "evaluation.txt", table);
    write_file_atomic(summaries_dir / "evaluation.csv", report.to_csv());
    return static_cast<int>(kExitOk);
  });
}

ClusterStats cluster_stats(const std::vector<Topic>& topics, const PipelineConfig& config) {
  const auto summarizer = config.summarizer();
  std::vector<SystemRun> runs(topics.size());
  parallel_for(topics.size(), config.jobs, [&](std::size_t t) {
    runs[t] = run_system_detailed(topics[t], System::OurApproach, summarizer);
  });

  ClusterStats stats;
  double rate_sum = 0.0;
  for (const auto& run : runs) {
    for (const auto& c : run.clusters) {
      ++stats.clusters;
      stats.cluster_size.total += static_cast<std::int64_t>(c.size());
      ++stats.cluster_size.count;
      std::int64_t member_words = 0;
      for (const std::size_t m : c.members)
        member_words += static_cast<std::int64_t>(word_count(run.sentences[m].target_tokens));
      stats.cluster_length.total += member_words;
      stats.cluster_length.count += static_cast<std::int64_t>(c.size());

      const auto it = run.compressions.find(c.id);
      if (it == run.compressions.end()) continue;
      ++stats.compressions;
      stats.compression_length.total += static_cast<std::int64_t>(it->second.word_count);
      ++stats.compression_length.count;
      const double mean_member = static_cast<double>(member_words) / static_cast<double>(c.size());
      rate_sum += static_cast<double>(it->second.word_count) / mean_member;
    }
    stats.compressions_in_summary.total += static_cast<std::int64_t>(run.summary.compression_count());
    ++stats.compressions_in_summary.count;
  }
  if (stats.compressions > 0) stats.compression_rate = rate_sum / static_cast<double>(stats.compressions);
  return stats;
}

int cmd_stats(const PipelineConfig& config, const fs::path& corpus_root, bool with_clusters,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto topics = load_corpus(corpus_root, config);
    const CorpusStats s = corpus_stats(topics);

    out << fmt::format("corpus statistics ({} -> {}), {} topics\n", config.source_lang,
                       config.target_lang, topics.size());
    out << fmt::format("{:<24}{:>12}{:>12}\n", "", "source", "target");
    out << fmt::format("{:<24}{:>12}{:>12}\n", "#words", s.source.words, s.target.words);
    out << fmt::format("{:<24}{:>12}{:>12}\n", "#vocabulary", s.source.vocabulary,
                       s.target.vocabulary);
    out << fmt::format("{:<24}{:>12}{:>12}\n", "#sentences", s.source.sentences,
                       s.target.sentences);
    out << fmt::format("{:<24}{:>12}{:>12}\n", "sentence length",
                       fixed(s.source.sentence_length.value(), 3),
                       fixed(s.target.sentence_length.value(), 3));
    out << fmt::format("{:<24}{:>12}{:>12}\n", "#chunks", "--", s.target.chunks);
    out << fmt::format("{:<24}{:>12}{:>12}\n", "average chunk length", "--",
                       fixed(s.target.chunk_length.value(), 3));
    if (!with_clusters) return static_cast<int>(kExitOk);

    const ClusterStats c = cluster_stats(topics, config);
    out << fmt::format("\ncluster statistics (theta_cluster={})\n", config.theta_cluster);
    out << fmt::format("{:<40}{:>12}\n", "#clusters", c.clusters);
    out << fmt::format("{:<40}{:>12}\n", "average size of clusters", fixed(c.cluster_size.value(), 3));
    out << fmt::format("{:<40}{:>12}\n", "average length of clusters",
                       fixed(c.cluster_length.value(), 3));
    out << fmt::format("{:<40}{:>12}\n", "#compressions", c.compressions);
    out << fmt::format("{:<40}{:>12}\n", "average length of compressions",
                       fixed(c.compression_length.value(), 3));
    out << fmt::format("{:<40}{:>12}\n", "average compressions in summaries",
                       fixed(c.compressions_in_summary.value(), 3));
    out << fmt::format("{:<40}{:>11}%\n", "average compression rate",
                       fixed(100.0 * c.compression_rate, 1));
    out << "  (compression rate = compression words / mean member sentence words; an interpretation)\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_compress(const PipelineConfig& config, const fs::path& corpus_root,
                 const std::optional<fs::path>& dot_dir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto topics = load_corpus(corpus_root, config);
    const auto summarizer = config.summarizer();
    for (const auto& topic : topics) {
      auto sentences = topic.sentences();
      if (summarizer.use_idf) apply_idf(sentences);
      const auto clusters = cluster_similar(sentences, summarizer.theta_cluster);
      for (const auto& cluster : clusters) {
        const auto result = compress_cluster(cluster, sentences, summarizer.msc);
        out << "# cluster " << cluster.id << " (" << cluster.size() << " sentences)\n";
        for (const std::size_t m : cluster.members)
          out << "  member " << sentences[m].id.str() << ": "
              << detokenize(surfaces(sentences[m].target_tokens)) << '\n';
        out << "  keywords:";
        for (const auto& k : result.keywords.labels) out << ' ' << k;
        out << fmt::format("\n  graph: {} vertices, {} arcs, keyword bonus {:.6f}\n",
                           result.graph.vertex_count(), result.graph.arcs().size(),
                           result.graph.arcs().empty() ? 0.0 : result.graph.keyword_bonus());
        out << fmt::format("  candidates: {}\n", result.candidates.size());
        if (result.best) {
          const auto& b = *result.best;
          out << fmt::format("  compression: {}\n  objective={:.6f} words={} log_score={:.6f}\n",
                             b.text(), b.objective, b.word_count, b.log_score);
        } else {
          out << "  compression: (none)\n";
        }
        if (dot_dir) {
          std::string file = cluster.id;
          std::replace(file.begin(), file.end(), '/', '_');
          write_file_atomic(*dot_dir / (file + ".dot"), to_dot(result.graph));
        }
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_rank(const PipelineConfig& config, const fs::path& corpus_root, bool with_compressions,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto topics = load_corpus(corpus_root, config);
    const auto summarizer = config.summarizer();
    out << "topic\tunit\tkind\tu\tv\ttext\n";
    for (const auto& topic : topics) {
      const System system = with_compressions ? System::OurApproach : System::CoRank;
      const auto run = run_system_detailed(topic, system, summarizer);
      if (run.pool.empty()) continue;
      std::vector<RankInput> inputs;
      for (const auto& u : run.pool) inputs.push_back(RankInput{&u.source_vector, &u.target_vector});
      const auto scores = corank(build_matrices(inputs), summarizer.alpha, summarizer.beta,
                                 summarizer.corank_tol, summarizer.corank_max_iter);
      for (std::size_t i = 0; i < run.pool.size(); ++i) {
        const auto& u = run.pool[i];
        out << fmt::format("{}\t{}\t{}\t{:.8f}\t{:.8f}\t{}\n", topic.id, u.origin,
                           u.kind == CandidateUnit::Kind::Compression ? "compression" : "original",
                           scores.u(static_cast<Eigen::Index>(i)),
                           scores.v(static_cast<Eigen::Index>(i)), u.text());
      }
      if (!scores.converged)
        err << fmt::format("warning: corank did not converge for {} after {} iterations\n",
                           topic.id, scores.iterations);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace clts
