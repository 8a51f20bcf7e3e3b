#include "clts/k_shortest.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace clts {

YenEnumerator::YenEnumerator(const Digraph& graph, std::size_t source, std::size_t target)
    : graph_(graph), source_(source), target_(target) {}

double YenEnumerator::weight(std::size_t from, std::size_t to) const {
  for (const auto& [v, w] : graph_[from])
    if (v == to) return w;
  return std::numeric_limits<double>::infinity();
}

double YenEnumerator::path_cost(const std::vector<std::size_t>& path) const {
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) cost += weight(path[i], path[i + 1]);
  return cost;
}

std::optional<std::vector<std::size_t>> YenEnumerator::shortest(
    std::size_t from, const std::vector<bool>& blocked_vertex,
    const std::set<std::pair<std::size_t, std::size_t>>& blocked_arc) const {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = graph_.size();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> parent(n, n);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[from] = 0.0;
  queue.emplace(0.0, from);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    if (u == target_) break;
    for (const auto& [v, w] : graph_[u]) {
      if (blocked_vertex[v] || blocked_arc.contains({u, v})) continue;
      const double nd = d + w;
      if (nd < dist[v] || (nd == dist[v] && u < parent[v])) {
        const bool improved = nd < dist[v];
        dist[v] = nd;
        parent[v] = u;
        if (improved) queue.emplace(nd, v);
      }
    }
  }
  if (dist[target_] == kInf) return std::nullopt;
  std::vector<std::size_t> path;
  for (std::size_t v = target_; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<WeightedPath> YenEnumerator::next() {
  const std::size_t n = graph_.size();
  if (!started_) {
    started_ = true;
    if (source_ >= n || target_ >= n) return std::nullopt;
    auto first = shortest(source_, std::vector<bool>(n, false), {});
    if (!first) return std::nullopt;
    seen_.insert(*first);
    accepted_.push_back(*first);
    return WeightedPath{*first, path_cost(*first)};
  }
  if (accepted_.empty()) return std::nullopt;

  const std::vector<std::size_t> previous = accepted_.back();
  for (std::size_t i = 0; i + 1 < previous.size(); ++i) {
    const std::size_t spur = previous[i];
    std::set<std::pair<std::size_t, std::size_t>> blocked_arc;
    for (const auto& p : accepted_)
      if (p.size() > i + 1 && std::equal(previous.begin(), previous.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.begin()))
        blocked_arc.emplace(p[i], p[i + 1]);
    std::vector<bool> blocked_vertex(n, false);
    for (std::size_t r = 0; r < i; ++r) blocked_vertex[previous[r]] = true;

    auto spur_path = shortest(spur, blocked_vertex, blocked_arc);
    if (!spur_path) continue;
    std::vector<std::size_t> total(previous.begin(), previous.begin() + static_cast<std::ptrdiff_t>(i));
    total.insert(total.end(), spur_path->begin(), spur_path->end());
    if (seen_.insert(total).second) candidates_.emplace(path_cost(total), std::move(total));
  }
  if (candidates_.empty()) return std::nullopt;
  auto best = candidates_.extract(candidates_.begin()).value();
  accepted_.push_back(best.second);
  return WeightedPath{std::move(best.second), best.first};
}

}  // namespace clts
