#include "clts/word_graph.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clts {

namespace {

constexpr std::string_view kStartKey = "^START";
constexpr std::string_view kEndKey = "$END";

struct Unit {
  std::string key;
  TokenList tokens;
  bool is_chunk = false;
  bool is_stopword = false;
};

std::vector<Unit> units_of(const TokenList& tokens, const std::vector<Chunk>* chunks,
                           bool use_chunks) {
  std::vector<Unit> units;
  std::size_t next_chunk = 0;
  for (std::size_t i = 0; i < tokens.size();) {
    if (use_chunks && chunks) {
      while (next_chunk < chunks->size() && (*chunks)[next_chunk].begin < i) ++next_chunk;
      if (next_chunk < chunks->size()) {
        const Chunk& c = (*chunks)[next_chunk];
        if (c.begin == i && c.length() >= 2 && c.end <= tokens.size()) {
          Unit u;
          u.is_chunk = true;
          u.tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(c.begin),
                          tokens.begin() + static_cast<std::ptrdiff_t>(c.end));
          u.key = "c:";
          for (std::size_t k = 0; k < u.tokens.size(); ++k) {
            if (k) u.key += ' ';
            u.key += u.tokens[k].lowercased;
          }
          units.push_back(std::move(u));
          i = c.end;
          continue;
        }
      }
    }
    const Token& t = tokens[i];
    Unit u;
    u.key = "w:" + t.lowercased + "/" + std::string(pos_name(t.pos));
    u.tokens = {t};
    u.is_stopword = t.is_stopword || t.pos == Pos::PUNCT;
    units.push_back(std::move(u));
    ++i;
  }
  return units;
}

}  // namespace

std::optional<double> WordGraph::arc_weight(std::size_t from, std::size_t to) const {
  if (from >= out_.size()) return std::nullopt;
  for (const std::size_t a : out_[from])
    if (arcs_[a].to == to) return arcs_[a].weight;
  return std::nullopt;
}

std::uint64_t WordGraph::present_labels() const {
  std::uint64_t mask = 0;
  for (const auto& v : vertices_) mask |= v.labels;
  return mask;
}

double WordGraph::keyword_bonus() const {
  std::vector<double> weights;
  weights.reserve(arcs_.size());
  for (const auto& a : arcs_) weights.push_back(a.weight);
  return geometric_mean(weights);
}

double geometric_mean(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("geometric mean of an empty weight list");
  double log_sum = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("arc weights must be positive");
    log_sum += std::log(w);
  }
  return std::exp(log_sum / static_cast<double>(weights.size()));
}

double keyword_bonus(const WordGraph& graph) {
  if (graph.arcs().empty()) throw std::invalid_argument("keyword bonus of a graph with no arcs");
  return graph.keyword_bonus();
}

WordGraph build_word_graph(std::span<const TokenList> sentences,
                           std::span<const std::vector<Chunk>> chunks,
                           const KeywordSet& keywords, bool use_chunks) {
  if (keywords.size() > 64) throw std::invalid_argument("at most 64 keyword labels supported");
  if (!chunks.empty() && chunks.size() != sentences.size())
    throw std::invalid_argument("chunk lists must match sentences one to one");

  WordGraph g;
  g.keywords_ = keywords;
  g.vertices_.resize(2);
  g.vertices_[WordGraph::kStart].key = kStartKey;
  g.vertices_[WordGraph::kEnd].key = kEndKey;

  std::map<std::string, std::vector<std::size_t>> by_key;
  std::vector<std::set<std::size_t>> pred(2);
  std::vector<std::set<std::size_t>> succ(2);
  std::set<std::pair<std::size_t, std::size_t>> arc_set;

  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto units =
        units_of(sentences[s], chunks.empty() ? nullptr : &chunks[s], use_chunks);
    const std::size_t n = units.size();
    std::vector<std::optional<std::size_t>> mapped(n);
    std::set<std::size_t> used;
    std::map<std::string, int> key_count;
    for (const auto& u : units) ++key_count[u.key];

    const auto candidates = [&](std::size_t i) {
      std::vector<std::size_t> out;
      if (const auto it = by_key.find(units[i].key); it != by_key.end())
        for (const std::size_t v : it->second)
          if (!used.contains(v)) out.push_back(v);
      return out;
    };
    const auto overlap = [&](std::size_t i, std::size_t v) {
      const std::string_view prev = i == 0 ? kStartKey : std::string_view(units[i - 1].key);
      const std::string_view next = i + 1 == n ? kEndKey : std::string_view(units[i + 1].key);
      int o = 0;
      for (const std::size_t p : pred[v])
        if (g.vertices_[p].key == prev) {
          ++o;
          break;
        }
      for (const std::size_t q : succ[v])
        if (g.vertices_[q].key == next) {
          ++o;
          break;
        }
      return o;
    };
    const auto best_of = [&](std::size_t i, const std::vector<std::size_t>& cands, int min_overlap)
        -> std::optional<std::size_t> {
      std::optional<std::size_t> best;
      int best_overlap = -1;
      for (const std::size_t v : cands) {
        const int o = overlap(i, v);
        if (o < min_overlap) continue;
        if (!best || o > best_overlap ||
            (o == best_overlap && g.vertices_[v].frequency() > g.vertices_[*best].frequency())) {
          best = v;
          best_overlap = o;
        }
      }
      return best;
    };
    const auto assign = [&](std::size_t i, std::size_t v) {
      mapped[i] = v;
      used.insert(v);
    };
    const auto create = [&](std::size_t i) {
      Vertex v;
      v.key = units[i].key;
      v.tokens = units[i].tokens;
      v.is_chunk = units[i].is_chunk;
      v.is_stopword = units[i].is_stopword;
      for (const auto& t : v.tokens) {
        if (t.pos == Pos::VERB) v.has_verb = true;
        if (t.is_word()) ++v.words;
      }
      const std::size_t id = g.vertices_.size();
      g.vertices_.push_back(std::move(v));
      pred.emplace_back();
      succ.emplace_back();
      by_key[units[i].key].push_back(id);
      assign(i, id);
    };

    // Content units with a single possible mapping.
    for (std::size_t i = 0; i < n; ++i) {
      if (units[i].is_stopword || key_count[units[i].key] != 1) continue;
      const auto c = candidates(i);
      if (c.empty()) create(i);
      else if (c.size() == 1) assign(i, c.front());
    }
    // Ambiguous content units: best context overlap, then frequency.
    for (std::size_t i = 0; i < n; ++i) {
      if (units[i].is_stopword || mapped[i]) continue;
      const auto best = best_of(i, candidates(i), 0);
      if (best) assign(i, *best);
      else create(i);
    }
    // Stopwords and punctuation merge only on a matching neighbour.
    for (std::size_t i = 0; i < n; ++i) {
      if (!units[i].is_stopword) continue;
      const auto best = best_of(i, candidates(i), 1);
      if (best) assign(i, *best);
      else create(i);
    }

    std::vector<std::size_t> path;
    path.reserve(n + 2);
    path.push_back(WordGraph::kStart);
    g.vertices_[WordGraph::kStart].occurrences.emplace_back(s, 0);
    for (std::size_t i = 0; i < n; ++i) {
      path.push_back(*mapped[i]);
      g.vertices_[*mapped[i]].occurrences.emplace_back(s, i + 1);
    }
    path.push_back(WordGraph::kEnd);
    g.vertices_[WordGraph::kEnd].occurrences.emplace_back(s, n + 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      arc_set.emplace(path[i], path[i + 1]);
      succ[path[i]].insert(path[i + 1]);
      pred[path[i + 1]].insert(path[i]);
    }
    g.sentence_paths_.push_back(std::move(path));
  }

  for (std::size_t v = 2; v < g.vertices_.size(); ++v) {
    for (const auto& t : g.vertices_[v].tokens) {
      if (!t.is_content()) continue;
      const int id = keywords.id_of(t.lowercased);
      if (id >= 0) g.vertices_[v].labels |= std::uint64_t{1} << id;
    }
  }

  // Position of every vertex in every sentence (at most one, by construction).
  const std::size_t S = sentences.size();
  std::vector<std::vector<long>> position(g.vertices_.size(), std::vector<long>(S, -1));
  for (std::size_t v = 0; v < g.vertices_.size(); ++v)
    for (const auto& [s, p] : g.vertices_[v].occurrences) position[v][s] = static_cast<long>(p);

  g.out_.assign(g.vertices_.size(), {});
  for (const auto& [from, to] : arc_set) {
    double inverse_distance = 0.0;
    for (std::size_t s = 0; s < S; ++s) {
      const long pi = position[from][s];
      const long pj = position[to][s];
      if (pi >= 0 && pj > pi) inverse_distance += 1.0 / static_cast<double>(pj - pi);
    }
    const double fi = static_cast<double>(g.vertices_[from].frequency());
    const double fj = static_cast<double>(g.vertices_[to].frequency());
    const double cohesion = (fi + fj) / inverse_distance;
    g.out_[from].push_back(g.arcs_.size());
    g.arcs_.push_back(Arc{from, to, cohesion / (fi * fj)});
  }
  return g;
}

WordGraph build_word_graph(const SentenceCluster& cluster,
                           std::span<const BilingualSentence> sentences,
                           const KeywordSet& keywords, bool use_chunks) {
  std::vector<TokenList> tokens;
  std::vector<std::vector<Chunk>> chunks;
  for (const std::size_t m : cluster.members) {
    tokens.push_back(sentences[m].target_tokens);
    chunks.push_back(sentences[m].target_chunks);
  }
  return build_word_graph(tokens, chunks, keywords, use_chunks);
}

std::string to_dot(const WordGraph& graph, std::string_view name) {
  const auto escape = [](const std::string& s) {
    std::string out;
    for (const char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  const auto& vs = graph.vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::string label;
    if (v == WordGraph::kStart) label = "START";
    else if (v == WordGraph::kEnd) label = "END";
    else {
      for (std::size_t k = 0; k < vs[v].tokens.size(); ++k) {
        if (k) label += ' ';
        label += vs[v].tokens[k].surface;
      }
    }
    os << "  " << v << " [label=\"" << escape(label) << "\\nf=" << vs[v].frequency() << "\"";
    if (vs[v].labels) {
      os << ", keywords=\"";
      bool first = true;
      for (std::size_t l = 0; l < graph.keywords().size(); ++l)
        if (vs[v].labels & (std::uint64_t{1} << l)) {
          os << (first ? "" : ",") << escape(graph.keywords().labels[l]);
          first = false;
        }
      os << "\", shape=box";
    }
    os << "];\n";
  }
  os << std::setprecision(6);
  for (const auto& a : graph.arcs())
    os << "  " << a.from << " -> " << a.to << " [label=\"" << a.weight << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clts
