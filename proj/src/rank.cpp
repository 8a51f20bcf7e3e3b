#include "clts/rank.hpp"

#include <cmath>
#include <stdexcept>

#include "clts/similarity.hpp"

namespace clts {

Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = m;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double sum = out.row(i).sum();
    if (sum > 0.0) out.row(i) /= sum;
  }
  return out;
}

SimilarityMatrices build_matrices(std::span<const RankInput> units) {
  if (units.empty()) throw std::invalid_argument("build_matrices needs at least one unit");
  const auto n = static_cast<Eigen::Index>(units.size());
  SimilarityMatrices m;
  m.source_raw = Eigen::MatrixXd::Zero(n, n);
  m.target_raw = Eigen::MatrixXd::Zero(n, n);
  m.cross_raw = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double cs = cosine(*units[i].source, *units[j].source);
      const double ct = cosine(*units[i].target, *units[j].target);
      const double cross = std::sqrt(cs * ct);
      m.cross_raw(i, j) = m.cross_raw(j, i) = cross;
      if (i == j) continue;
      m.source_raw(i, j) = m.source_raw(j, i) = cs;
      m.target_raw(i, j) = m.target_raw(j, i) = ct;
    }
  }
  m.source = row_normalize(m.source_raw);
  m.target = row_normalize(m.target_raw);
  m.cross = row_normalize(m.cross_raw);
  return m;
}

namespace {

void rescale(Eigen::VectorXd& x) {
  const double sum = x.sum();
  if (sum > 0.0) x /= sum;
  else x.setConstant(1.0 / static_cast<double>(x.size()));
}

}  // namespace

RankScores corank(const SimilarityMatrices& m, double alpha, double beta, double tol,
                  int max_iter) {
  if (alpha < 0.0 || beta < 0.0 || std::abs(alpha + beta - 1.0) > 1e-12)
    throw std::invalid_argument("corank needs alpha, beta >= 0 with alpha + beta = 1");
  const Eigen::Index n = m.size();
  if (n == 0) throw std::invalid_argument("corank needs at least one unit");

  const Eigen::MatrixXd source_t = m.source.transpose();
  const Eigen::MatrixXd target_t = m.target.transpose();
  const Eigen::MatrixXd cross_t = m.cross.transpose();

  RankScores r;
  r.u = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  r.v = r.u;
  while (r.iterations < max_iter) {
    Eigen::VectorXd u = alpha * (source_t * r.u) + beta * (cross_t * r.v);
    Eigen::VectorXd v = alpha * (target_t * r.v) + beta * (cross_t * r.u);
    rescale(u);
    rescale(v);
    const double delta = std::max((u - r.u).cwiseAbs().maxCoeff(), (v - r.v).cwiseAbs().maxCoeff());
    r.u = std::move(u);
    r.v = std::move(v);
    ++r.iterations;
    if (delta < tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

Eigen::VectorXd pagerank(const Eigen::MatrixXd& normalized, double damping, double tol,
                         int max_iter) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("damping must be in (0, 1)");
  const Eigen::Index n = normalized.rows();
  if (n == 0) throw std::invalid_argument("pagerank needs at least one node");
  const double uniform = 1.0 / static_cast<double>(n);

  Eigen::MatrixXd transition = normalized;
  for (Eigen::Index i = 0; i < n; ++i)
    if (transition.row(i).sum() <= 0.0) transition.row(i).setConstant(uniform);
  const Eigen::MatrixXd transition_t = transition.transpose();

  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, uniform);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd next = damping * (transition_t * x);
    next.array() += (1.0 - damping) * uniform;
    const double delta = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    if (delta < tol) break;
  }
  return x / x.sum();
}

Eigen::VectorXd simfusion(const SimilarityMatrices& m, double lambda, double damping, double tol,
                          int max_iter) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in [0, 1]");
  const Eigen::MatrixXd fused = lambda * m.target_raw + (1.0 - lambda) * m.source_raw;
  return pagerank(row_normalize(fused), damping, tol, max_iter);
}

}  // namespace clts
