#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "clts/rank.hpp"
#include "clts/similarity.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clts;

namespace {

struct Units {
  std::vector<TermVector> src, tgt;
  std::vector<RankInput> inputs() const {
    std::vector<RankInput> out;
    for (std::size_t i = 0; i < src.size(); ++i) out.push_back(RankInput{&src[i], &tgt[i]});
    return out;
  }
};

Units random_units(std::mt19937_64& rng, std::size_t n) {
  Units u;
  for (std::size_t i = 0; i < n; ++i) {
    u.src.push_back(fixtures::random_vector(rng, fixtures::source_vocab()));
    u.tgt.push_back(fixtures::random_vector(rng, fixtures::target_vocab()));
  }
  return u;
}

TermVector bag(std::initializer_list<const char*> words) {
  TermVector v;
  for (const char* w : words) v.add(w);
  return v;
}

}  // namespace

TEST(Matrices, IdenticalPair) {
  Units u{{bag({"a"}), bag({"a"})}, {bag({"b"}), bag({"b"})}};
  const auto m = build_matrices(u.inputs());
  EXPECT_EQ(m.target, (Eigen::Matrix2d() << 0, 1, 1, 0).finished());
  EXPECT_EQ(m.source, m.target);
  EXPECT_DOUBLE_EQ(m.cross_raw(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m.cross_raw(0, 1), 1.0);
}

TEST(Matrices, SourceDissimilarZeroesCross) {
  Units u{{bag({"a"}), bag({"z"})}, {bag({"b"}), bag({"b"})}};
  const auto m = build_matrices(u.inputs());
  EXPECT_EQ(m.cross_raw(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(m.target_raw(0, 1), 1.0);
}

TEST(Matrices, EntrywiseOracleAndRowStochastic) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_units(rng, 1 + rng() % 10);
    const auto m = build_matrices(u.inputs());
    const auto n = static_cast<Eigen::Index>(u.src.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double cs = static_cast<double>(oracle::term_cosine(u.src[i], u.src[j]));
        const double ct = static_cast<double>(oracle::term_cosine(u.tgt[i], u.tgt[j]));
        EXPECT_NEAR(m.source_raw(i, j), i == j ? 0.0 : cs, 1e-12);
        EXPECT_NEAR(m.target_raw(i, j), i == j ? 0.0 : ct, 1e-12);
        EXPECT_NEAR(m.cross_raw(i, j), std::sqrt(cs * ct), 1e-12);
      }
      for (const auto* mat : {&m.source, &m.target, &m.cross}) {
        const double s = mat->row(i).sum();
        if (s != 0.0) EXPECT_NEAR(s, 1.0, 1e-12);
      }
    }
  }
  EXPECT_THROW(build_matrices({}), std::invalid_argument);
}

TEST(CoRank, TrivialCases) {
  Units one{{bag({"a"})}, {bag({"b"})}};
  const auto r = corank(build_matrices(one.inputs()), 0.5, 0.5);
  EXPECT_DOUBLE_EQ(r.u(0), 1.0);
  EXPECT_DOUBLE_EQ(r.v(0), 1.0);

  Units two{{bag({"a", "x"}), bag({"a", "y"})}, {bag({"b", "x"}), bag({"b", "y"})}};
  const auto s = corank(build_matrices(two.inputs()), 0.5, 0.5);
  EXPECT_NEAR(s.u(0), 0.5, 1e-12);
  EXPECT_NEAR(s.v(1), 0.5, 1e-12);

  EXPECT_THROW(corank(build_matrices(two.inputs()), 0.6, 0.5), std::invalid_argument);
  EXPECT_THROW(corank(build_matrices(two.inputs()), -0.5, 1.5), std::invalid_argument);
}

TEST(CoRank, MatchesDenseOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = random_units(rng, 1 + rng() % 20);
    const double alpha = 0.1 * static_cast<double>(rng() % 11);
    const auto r = corank(build_matrices(u.inputs()), alpha, 1.0 - alpha, 1e-10, 10000);
    const auto o = oracle::corank(u.src, u.tgt, alpha, 1.0L - alpha);
    for (std::size_t i = 0; i < u.src.size(); ++i) {
      EXPECT_NEAR(r.u(static_cast<Eigen::Index>(i)), static_cast<double>(o.u[i]), 1e-8);
      EXPECT_NEAR(r.v(static_cast<Eigen::Index>(i)), static_cast<double>(o.v[i]), 1e-8);
    }
    EXPECT_NEAR(r.u.sum(), 1.0, 1e-12);
    EXPECT_GE(r.u.minCoeff(), 0.0);
  }
}

TEST(CoRank, PermutationEquivariant) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = random_units(rng, 2 + rng() % 12);
    std::vector<std::size_t> perm(u.src.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Units p;
    for (const auto k : perm) {
      p.src.push_back(u.src[k]);
      p.tgt.push_back(u.tgt[k]);
    }
    const auto a = corank(build_matrices(u.inputs()), 0.5, 0.5, 1e-12, 5000);
    const auto b = corank(build_matrices(p.inputs()), 0.5, 0.5, 1e-12, 5000);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      EXPECT_NEAR(b.u(static_cast<Eigen::Index>(i)), a.u(static_cast<Eigen::Index>(perm[i])), 1e-9);
      EXPECT_NEAR(b.v(static_cast<Eigen::Index>(i)), a.v(static_cast<Eigen::Index>(perm[i])), 1e-9);
    }
  }
}

TEST(CoRank, ScalingSimilaritiesKeepsOrder) {
  std::mt19937_64 rng(53);
  const auto u = random_units(rng, 10);
  auto m = build_matrices(u.inputs());
  const auto base = corank(m, 0.5, 0.5, 1e-12, 5000);
  m.source = row_normalize(3.0 * m.source_raw);
  m.target = row_normalize(3.0 * m.target_raw);
  m.cross = row_normalize(3.0 * m.cross_raw);
  const auto scaled = corank(m, 0.5, 0.5, 1e-12, 5000);
  EXPECT_LT((base.u - scaled.u).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PageRank, MatchesLinearSolve) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 20);
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng() % 4 == 0 ? 0.0 : w(rng);
    if (n > 2) m.row(1).setZero();  // a dangling row
    const Eigen::MatrixXd norm = row_normalize(m);
    const auto x = pagerank(norm, 0.85, 1e-14, 10000);
    EXPECT_LT((x - oracle::pagerank_solve(norm, 0.85)).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_NEAR(x.sum(), 1.0, 1e-12);
  }
}

TEST(PageRank, EdgeCases) {
  const Eigen::MatrixXd all = Eigen::MatrixXd::Constant(4, 4, 0.25);
  const auto x = pagerank(all);
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(x(i), 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(pagerank(Eigen::MatrixXd::Zero(1, 1))(0), 1.0);
  EXPECT_THROW(pagerank(Eigen::MatrixXd(0, 0)), std::invalid_argument);
  EXPECT_THROW(pagerank(all, 1.0), std::invalid_argument);
}

TEST(SimFusion, Endpoints) {
  std::mt19937_64 rng(61);
  const auto u = random_units(rng, 6);
  const auto m = build_matrices(u.inputs());
  EXPECT_LT((simfusion(m, 1.0) - pagerank(m.target)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((simfusion(m, 0.0) - pagerank(m.source)).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::MatrixXd fused = row_normalize(0.5 * m.target_raw + 0.5 * m.source_raw);
  EXPECT_LT((simfusion(m, 0.5) - oracle::pagerank_solve(fused, 0.85)).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_THROW(simfusion(m, 1.5), std::invalid_argument);
}
