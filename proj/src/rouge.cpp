#include "clts/rouge.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clts/summarizer.hpp"
#include "clts/text.hpp"

namespace clts {

std::string_view metric_name(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::R1: return "R-1";
    case RougeMetric::R2: return "R-2";
    case RougeMetric::RSU4: return "R-SU4";
  }
  return "?";
}

std::vector<std::string> rouge_tokens(std::string_view text) {
  const std::string lowered = to_lower(text);
  std::string cleaned;
  cleaned.reserve(lowered.size());
  for (std::size_t pos = 0; pos < lowered.size();) {
    const std::size_t start = pos;
    const char32_t cp = next_codepoint(lowered, pos);
    if (is_punctuation_codepoint(cp)) cleaned.push_back(' ');
    else cleaned.append(lowered, start, pos - start);
  }
  return split_whitespace(cleaned);
}

NgramCounts ngram_counts(std::span<const std::string> tokens, int n) {
  if (n < 1) throw std::invalid_argument("n-gram order must be >= 1");
  NgramCounts counts;
  const auto order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t k = 1; k < order; ++k) gram += " " + tokens[i + k];
    ++counts[gram];
  }
  return counts;
}

NgramCounts skip_bigram_counts(std::span<const std::string> tokens, int max_gap) {
  NgramCounts counts;
  const std::size_t reach = static_cast<std::size_t>(max_gap) + 1;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    for (std::size_t j = i + 1; j < tokens.size() && j <= i + reach; ++j)
      ++counts[tokens[i] + " " + tokens[j]];
  return counts;
}

NgramCounts su4_counts(std::span<const std::string> tokens) {
  NgramCounts counts = skip_bigram_counts(tokens, 4);
  for (const auto& t : tokens) ++counts["<s> " + t];
  return counts;
}

namespace {

int total(const NgramCounts& counts) {
  int sum = 0;
  for (const auto& [g, c] : counts) sum += c;
  return sum;
}

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

template <typename CountFn>
RougeScore aggregate(std::string_view candidate, std::span<const std::string> references,
                     RougeMetric metric, Aggregation aggregation, CountFn count) {
  if (references.empty()) throw std::invalid_argument("ROUGE needs at least one reference");
  const auto cand_tokens = rouge_tokens(candidate);
  const NgramCounts cand = count(cand_tokens);

  RougeScore result{metric, 0.0, 0.0, 0.0};
  bool first = true;
  for (const auto& ref : references) {
    const auto ref_tokens = rouge_tokens(ref);
    const RougeScore s = overlap_score(cand, count(ref_tokens), metric);
    if (aggregation == Aggregation::Mean) {
      result.precision += s.precision;
      result.recall += s.recall;
    } else if (first || s.f1 > result.f1) {
      result = s;
    }
    first = false;
  }
  if (aggregation == Aggregation::Mean) {
    const double n = static_cast<double>(references.size());
    result.precision /= n;
    result.recall /= n;
    result.f1 = harmonic(result.precision, result.recall);
  }
  return result;
}

}  // namespace

RougeScore overlap_score(const NgramCounts& candidate, const NgramCounts& reference,
                         RougeMetric metric) {
  int hits = 0;
  for (const auto& [gram, c] : candidate)
    if (const auto it = reference.find(gram); it != reference.end()) hits += std::min(c, it->second);
  const int cand_total = total(candidate);
  const int ref_total = total(reference);
  RougeScore s{metric, 0.0, 0.0, 0.0};
  if (cand_total > 0) s.precision = static_cast<double>(hits) / cand_total;
  if (ref_total > 0) s.recall = static_cast<double>(hits) / ref_total;
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

RougeScore rouge_n(std::string_view candidate, std::span<const std::string> references, int n,
                   Aggregation aggregation) {
  const RougeMetric metric = n == 1 ? RougeMetric::R1 : RougeMetric::R2;
  return aggregate(candidate, references, metric, aggregation,
                   [n](const std::vector<std::string>& t) { return ngram_counts(t, n); });
}

RougeScore rouge_su4(std::string_view candidate, std::span<const std::string> references,
                     Aggregation aggregation) {
  return aggregate(candidate, references, RougeMetric::RSU4, aggregation,
                   [](const std::vector<std::string>& t) { return su4_counts(t); });
}

RougeTriple rouge_f_scores(std::string_view candidate, std::span<const std::string> references,
                           Aggregation aggregation) {
  return RougeTriple{rouge_n(candidate, references, 1, aggregation).f1,
                     rouge_n(candidate, references, 2, aggregation).f1,
                     rouge_su4(candidate, references, aggregation).f1};
}

EvaluationReport evaluate_systems(
    const std::map<std::pair<std::string, std::string>, std::string>& summaries,
    const std::map<std::string, std::vector<std::string>>& references, Aggregation aggregation) {
  EvaluationReport report;
  for (const auto& [topic, refs] : references)
    if (!refs.empty()) report.topics.push_back(topic);

  std::set<std::string> names;
  for (const auto& [key, text] : summaries) names.insert(key.first);
  std::vector<std::string> systems;
  for (const System s : all_systems())
    if (names.erase(std::string(system_name(s)))) systems.emplace_back(system_name(s));
  systems.insert(systems.end(), names.begin(), names.end());

  for (const auto& system : systems) {
    EvaluationReport::Row row;
    row.system = system;
    RougeTriple sum;
    for (const auto& topic : report.topics) {
      const auto it = summaries.find({system, topic});
      if (it == summaries.end()) {
        row.missing_topics.push_back(topic);
        continue;
      }
      const RougeTriple cell = rouge_f_scores(it->second, references.at(topic), aggregation);
      report.cells[{system, topic}] = cell;
      sum.r1 += cell.r1;
      sum.r2 += cell.r2;
      sum.rsu4 += cell.rsu4;
    }
    if (row.missing_topics.empty() && !report.topics.empty()) {
      const double n = static_cast<double>(report.topics.size());
      row.mean = RougeTriple{sum.r1 / n, sum.r2 / n, sum.rsu4 / n};
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string fixed4(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << x;
  return os.str();
}

}  // namespace

std::string EvaluationReport::to_table() const {
  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.system.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width) + 2) << "System" << std::setw(9) << "R-1"
     << std::setw(9) << "R-2" << "R-SU4\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.system;
    if (r.mean) {
      os << std::setw(9) << fixed4(r.mean->r1) << std::setw(9) << fixed4(r.mean->r2)
         << fixed4(r.mean->rsu4);
    } else {
      os << std::setw(9) << "--" << std::setw(9) << "--" << "--";
      if (!r.missing_topics.empty()) {
        os << "  (missing:";
        for (const auto& t : r.missing_topics) os << ' ' << t;
        os << ')';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string EvaluationReport::to_csv() const {
  std::ostringstream os;
  os << "system,topic,R-1,R-2,R-SU4\n";
  const auto line = [&](const std::string& system, const std::string& topic,
                        const std::optional<RougeTriple>& t) {
    os << system << ',' << topic << ',';
    if (t) os << fixed4(t->r1) << ',' << fixed4(t->r2) << ',' << fixed4(t->rsu4) << '\n';
    else os << "--,--,--\n";
  };
  for (const auto& r : rows) {
    line(r.system, "mean", r.mean);
    for (const auto& topic : topics) {
      const auto it = cells.find({r.system, topic});
      line(r.system, topic,
           it == cells.end() ? std::nullopt : std::optional<RougeTriple>(it->second));
    }
  }
  return os.str();
}

}  // namespace clts
