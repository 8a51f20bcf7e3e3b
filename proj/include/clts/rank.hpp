#pragma once

#include <span>

#include <Eigen/Dense>

#include "clts/term_vector.hpp"

namespace clts {

/// Source-side and target-side term vectors of one rankable unit.
struct RankInput {
  const TermVector* source = nullptr;
  const TermVector* target = nullptr;
};

struct SimilarityMatrices {
  Eigen::MatrixXd source_raw;  // cosine of source vectors, zero diagonal
  Eigen::MatrixXd target_raw;  // cosine of target vectors, zero diagonal
  Eigen::MatrixXd cross_raw;   // sqrt(cos_src * cos_tgt), diagonal kept
  Eigen::MatrixXd source;      // row-normalized forms; all-zero rows stay zero
  Eigen::MatrixXd target;
  Eigen::MatrixXd cross;

  Eigen::Index size() const { return source_raw.rows(); }
};

/// Throws std::invalid_argument on an empty unit list.
SimilarityMatrices build_matrices(std::span<const RankInput> units);

/// Scales every non-zero row to sum 1.
Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& m);

struct RankScores {
  Eigen::VectorXd u;  // source-side relevance
  Eigen::VectorXd v;  // target-side relevance
  int iterations = 0;
  bool converged = false;
};

/// Coupled fixed point
///   u <- alpha * S^T u + beta * C^T v
///   v <- alpha * T^T v + beta * C^T u
/// from uniform vectors, both updated from the previous sweep and rescaled to sum 1.
/// A vector whose mass vanishes entirely restarts from uniform. Stops once the
/// largest entry change of u and v drops below `tol`.
RankScores corank(const SimilarityMatrices& m, double alpha, double beta, double tol = 1e-6,
                  int max_iter = 200);

/// Damped power iteration x <- (1-d)/N + d M^T x over a row-normalized matrix.
/// All-zero rows spread their mass uniformly. The result sums to 1.
Eigen::VectorXd pagerank(const Eigen::MatrixXd& normalized, double damping = 0.85,
                         double tol = 1e-8, int max_iter = 1000);

/// PageRank over row_normalize(lambda * target_raw + (1 - lambda) * source_raw).
Eigen::VectorXd simfusion(const SimilarityMatrices& m, double lambda, double damping = 0.85,
                          double tol = 1e-8, int max_iter = 1000);

}  // namespace clts
