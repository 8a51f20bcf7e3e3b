#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace clts {

struct WeightedPath {
  std::vector<std::size_t> vertices;
  double cost = 0.0;
};

/// Adjacency list with positive arc weights.
using Digraph = std::vector<std::vector<std::pair<std::size_t, double>>>;

/// Yen's loopless k-shortest paths, produced lazily in non-decreasing cost order.
/// Ties are broken deterministically. Costs are summed along the path from source to
/// target, so a path's cost never depends on how it was found.
class YenEnumerator {
 public:
  YenEnumerator(const Digraph& graph, std::size_t source, std::size_t target);

  std::optional<WeightedPath> next();

 private:
  std::optional<std::vector<std::size_t>> shortest(std::size_t from,
                                                   const std::vector<bool>& blocked_vertex,
                                                   const std::set<std::pair<std::size_t, std::size_t>>&
                                                       blocked_arc) const;
  double path_cost(const std::vector<std::size_t>& path) const;
  double weight(std::size_t from, std::size_t to) const;

  const Digraph& graph_;
  std::size_t source_;
  std::size_t target_;
  bool started_ = false;
  std::vector<std::vector<std::size_t>> accepted_;
  std::set<std::pair<double, std::vector<std::size_t>>> candidates_;
  std::set<std::vector<std::size_t>> seen_;
};

}  // namespace clts
