// Copyright 2026 The hiercent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include <gtest/gtest.h>

#include "hiercent/error.hpp"
#include "hiercent/evaluation.hpp"
#include "test_support.hpp"

namespace hiercent {
namespace {

using testing::to_vector;

Eigen::VectorXd vec(std::initializer_list<double> v) {
  return to_vector(std::vector<double>(v));
}

// RBO straight from the definition: prefix sets of the deterministic order.
RboResult rbo_oracle(const std::vector<NodeIndex>& a,
                     const std::vector<NodeIndex>& b, double p,
                     std::size_t depth) {
  RboResult r;
  double agreement = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::set<NodeIndex> sa(a.begin(), a.begin() + d);
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < d; ++i) overlap += sa.count(b[i]);
    agreement = static_cast<double>(overlap) / static_cast<double>(d);
    r.base += (1 - p) * std::pow(p, d - 1.0) * agreement;
  }
  r.extrapolated = r.base + agreement * std::pow(p, static_cast<double>(depth));
  r.depth = depth;
  return r;
}

TEST(Pearson, Examples) {
  EXPECT_DOUBLE_EQ(pearson(vec({1, 2, 3}), vec({2, 4, 6})), 1.0);
  EXPECT_DOUBLE_EQ(pearson(vec({1, 2, 3}), vec({3, 2, 1})), -1.0);
  EXPECT_NEAR(pearson(vec({1, 2, 3, 4}), vec({1, 3, 2, 4})), 0.8, 1e-15);
}

TEST(Pearson, FloatScalar) {
  const Eigen::VectorXf x = Eigen::Vector4f(1, 2, 3, 4);
  const Eigen::VectorXf y = Eigen::Vector4f(1, 3, 2, 4);
  EXPECT_NEAR(pearson(x, y), 0.8f, 1e-6f);
}

TEST(Pearson, ConstantInputIsUndefined) {
  EXPECT_THROW(pearson(vec({1, 1, 1}), vec({1, 2, 3})), UndefinedCorrelation);
  EXPECT_THROW(pearson(vec({1, 2}), vec({1, 2, 3})), ParameterError);
}

TEST(Spearman, Examples) {
  const Eigen::VectorXd x = vec({0.5, 1, 2, 3.5, 7});
  EXPECT_DOUBLE_EQ(spearman(x, x.cwiseAbs2()), 1.0);
  EXPECT_DOUBLE_EQ(spearman(vec({1, 2, 3}), vec({3, 2, 1})), -1.0);
  EXPECT_DOUBLE_EQ(spearman(vec({1, 1, 2}), vec({1, 2, 3})),
                   pearson(vec({1.5, 1.5, 3}), vec({1, 2, 3})));
}

TEST(Spearman, MidranksOfNearEqualValues) {
  // Values equal up to rounding noise share a rank.
  const Eigen::VectorXd r = midranks(vec({0.1 + 0.2, 0.3, 1.0}));
  EXPECT_DOUBLE_EQ(r[0], 1.5);
  EXPECT_DOUBLE_EQ(r[1], 1.5);
}

TEST(KendallTauB, Examples) {
  EXPECT_DOUBLE_EQ(kendall_tau_b(vec({3, 1, 2}), vec({3, 1, 2})), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau_b(vec({1, 2, 3, 4}), vec({4, 3, 2, 1})), -1.0);
  EXPECT_DOUBLE_EQ(kendall_tau_b(vec({1, 1, 2}), vec({1, 2, 2})), 0.5);
  const KendallCounts c = kendall_counts({1, 1, 2}, {1, 2, 2});
  EXPECT_EQ(c.concordant, 1);
  EXPECT_EQ(c.discordant, 0);
  EXPECT_EQ(c.tied_x_only, 1);
  EXPECT_EQ(c.tied_y_only, 1);
}

TEST(KendallTauB, AllTiedIsUndefined) {
  EXPECT_THROW(kendall_tau_b(vec({2, 2, 2}), vec({1, 2, 3})), UndefinedCorrelation);
}

TEST(KendallTauB, MatchesPairClassification) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 40;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = small(rng);
      y[i] = small(rng);
    }
    const testing::PairCounts want = testing::classify_pairs(x, y);
    const KendallCounts got = kendall_counts(x, y);
    ASSERT_EQ(got.concordant, want.concordant);
    ASSERT_EQ(got.discordant, want.discordant);
    ASSERT_EQ(got.tied_x_only, want.tied_x_only);
    ASSERT_EQ(got.tied_y_only, want.tied_y_only);
    if (want.concordant + want.discordant + want.tied_x_only > 0 &&
        want.concordant + want.discordant + want.tied_y_only > 0) {
      ASSERT_DOUBLE_EQ(kendall_tau_b(to_vector(x), to_vector(y)),
                       testing::tau_b_oracle(x, y));
    }
  }
}

TEST(KendallTauB, TieFreeEqualsTauA) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 20;
    std::vector<double> x(n), y(n);
    std::iota(x.begin(), x.end(), 0.0);
    std::iota(y.begin(), y.end(), 0.0);
    std::shuffle(y.begin(), y.end(), rng);
    const auto c = testing::classify_pairs(x, y);
    const double tau_a = static_cast<double>(c.concordant - c.discordant) /
                         (n * (n - 1) / 2.0);
    ASSERT_NEAR(kendall_tau_b(to_vector(x), to_vector(y)), tau_a, 1e-14);
  }
}

TEST(Correlations, RangeSymmetryAndInvariance) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 30;
    Eigen::VectorXd x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = normal(rng);
      y[i] = x[i] + normal(rng);
    }
    for (auto f : {&pearson<Eigen::VectorXd, Eigen::VectorXd>,
                   &spearman<Eigen::VectorXd, Eigen::VectorXd>,
                   &kendall_tau_b<Eigen::VectorXd, Eigen::VectorXd>}) {
      const double r = f(x, y);
      ASSERT_GE(r, -1.0);
      ASSERT_LE(r, 1.0);
      ASSERT_DOUBLE_EQ(r, f(y, x));
    }
    const Eigen::VectorXd affine = (2.5 * x.array() + 7.0).matrix();
    ASSERT_NEAR(pearson(affine, y), pearson(x, y), 1e-12);
    const Eigen::VectorXd monotone = x.array().exp().matrix();
    ASSERT_NEAR(spearman(monotone, y), spearman(x, y), 1e-12);
    ASSERT_NEAR(kendall_tau_b(monotone, y), kendall_tau_b(x, y), 1e-12);
  }
}

TEST(RankedList, OrderAndTieGroups) {
  const RankedList r = RankedList::FromScores(vec({1, 3, 3, 2, 3}));
  EXPECT_EQ(r.order(), (std::vector<NodeIndex>{1, 2, 4, 3, 0}));
  EXPECT_EQ(r.group_starts(), (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_EQ(r.group_at(2), 0u);
  EXPECT_EQ(r.group_end(0), 3u);
  EXPECT_EQ(r.top(2), (std::vector<NodeIndex>{1, 2}));
  const RankedList p = RankedList::FromScores(vec({1, 3, 3, 2, 3}), {4, 3, 2, 1, 0});
  EXPECT_EQ(p.order(), (std::vector<NodeIndex>{4, 2, 1, 3, 0}));
}

TEST(Jaccard, Examples) {
  const Eigen::VectorXd x = vec({5, 4, 3, 2, 1});
  const RankedList a = RankedList::FromScores(x);
  EXPECT_DOUBLE_EQ(jaccard_topk(a, a, 3), 1.0);
  const RankedList b = RankedList::FromScores(vec({1, 2, 3, 4, 5}));
  EXPECT_DOUBLE_EQ(jaccard_topk(a, b, 2), 0.0);
  const RankedList c = RankedList::FromScores(vec({1, 5, 4, 3, 2}));
  EXPECT_DOUBLE_EQ(jaccard_topk(a, c, 3), 0.5);
  EXPECT_THROW(jaccard_topk(a, c, 6), ParameterError);
  EXPECT_THROW(jaccard_topk(a, c, 0), ParameterError);
}

TEST(Jaccard, TopKTakesExactlyK) {
  // A tie group straddling the cut is not expanded.
  const RankedList a = RankedList::FromScores(vec({1, 1, 1, 1}));
  EXPECT_EQ(a.top(2).size(), 2u);
  EXPECT_DOUBLE_EQ(jaccard_topk(a, a, 2), 1.0);
}

TEST(Rbo, Examples) {
  const RankedList a = RankedList::FromScores(vec({2, 1}));
  const RankedList b = RankedList::FromScores(vec({1, 2}));
  const RboResult r = rbo(a, b, 0.5, 2);
  EXPECT_DOUBLE_EQ(r.base, 0.25);
  EXPECT_DOUBLE_EQ(r.extrapolated, 0.5);
  for (double p : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(rbo(a, a, p, 2).extrapolated, 1.0, 1e-15);
  }
  const RankedList c = RankedList::FromScores(vec({4, 3, 2, 1, 0, 0, 0, 0}));
  const RankedList d = RankedList::FromScores(vec({0, 0, 0, 0, 4, 3, 2, 1}));
  EXPECT_DOUBLE_EQ(rbo(c, d, 0.9, 4).extrapolated, 0.0);
  EXPECT_THROW(rbo(a, b, 1.0, 2), ParameterError);
  EXPECT_THROW(rbo(a, b, 0.0, 2), ParameterError);
}

TEST(Rbo, MatchesDefinitionAndBounds) {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> score(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 25;
    Eigen::VectorXd x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = score(rng);
      y[i] = score(rng);
    }
    const RankedList a = RankedList::FromScores(x);
    const RankedList b = RankedList::FromScores(y);
    const double p = trial % 2 ? 0.9 : 0.5;
    const std::size_t depth = 1 + trial % n;
    const RboResult got = rbo(a, b, p, depth);
    const RboResult want = rbo_oracle(a.order(), b.order(), p, depth);
    ASSERT_NEAR(got.base, want.base, 1e-12);
    ASSERT_NEAR(got.extrapolated, want.extrapolated, 1e-12);
    ASSERT_LE(got.base, got.extrapolated + 1e-15);
    ASSERT_LE(got.extrapolated, got.base + std::pow(p, depth) + 1e-15);
    ASSERT_GE(got.extrapolated, 0.0);
    ASSERT_LE(got.extrapolated, 1.0 + 1e-15);
    const RboResult tie_aware = rbo(a, b, p, depth, RboTies::kTieAware);
    ASSERT_GE(tie_aware.extrapolated, 0.0);
    ASSERT_LE(tie_aware.extrapolated, 1.0 + 1e-15);
  }
}

TEST(Rbo, MonotoneInAgreement) {
  // Swapping a disagreeing item for an agreeing one never lowers RBO.
  const Eigen::VectorXd base = vec({9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  const RankedList a = RankedList::FromScores(base);
  const RankedList worse = RankedList::FromScores(vec({9, 8, 0, 6, 5, 4, 3, 2, 1, 7}));
  for (double p : {0.5, 0.9}) {
    EXPECT_LE(rbo(a, worse, p, 5).extrapolated, rbo(a, a, p, 5).extrapolated);
  }
}

TEST(Rbo, TieAwareSharesGroups) {
  const RankedList a = RankedList::FromScores(vec({1, 1}));
  const RankedList b = RankedList::FromScores(vec({1, 1}), {1, 0});
  EXPECT_LT(rbo(a, b, 0.5, 2).extrapolated, 1.0);
  EXPECT_DOUBLE_EQ(rbo(a, b, 0.5, 2, RboTies::kTieAware).extrapolated, 1.0);
}

TEST(EvalId, RoundTrip) {
  EvalParams p;
  p.measure = EvalMeasure::kRbo;
  p.rbo_p = 0.5;
  EXPECT_EQ(eval_id(p), "rbo_topk_p0.5");
  p.rbo_scope = RboScope::kEntireSet;
  p.rbo_p = 0.9;
  p.rbo_ties = RboTies::kTieAware;
  p.top_k = 5;
  const std::string id = eval_id(p);
  const EvalParams q = parse_eval_id(id);
  EXPECT_EQ(eval_id(q), id);
  for (const char* s : {"pearson", "spearman", "kendall_b", "jaccard", "jaccard_k7"}) {
    EXPECT_EQ(eval_id(parse_eval_id(s)), s);
  }
  EXPECT_THROW(parse_eval_id("cosine"), ParameterError);
}

TEST(TopK, DefaultRule) {
  EXPECT_EQ(default_top_k(34), 10u);
  EXPECT_EQ(default_top_k(149), 10u);
  EXPECT_EQ(default_top_k(150), 15u);
  EXPECT_EQ(default_top_k(151), 16u);
  EXPECT_EQ(default_top_k(1000), 100u);
  EvalParams p;
  EXPECT_EQ(resolve_top_k(p, 5), 5u);
  p.top_k = 6;
  EXPECT_THROW(resolve_top_k(p, 5), ParameterError);
}

TEST(Evaluate, DispatchesAndReportsExtrapolatedRbo) {
  const Eigen::VectorXd x = vec({5, 4, 3, 2, 1, 0});
  const Eigen::VectorXd y = vec({4, 5, 3, 2, 0, 1});
  EvalParams p;
  p.measure = EvalMeasure::kRbo;
  p.rbo_p = 0.5;
  p.top_k = 2;
  const auto a = RankedList::FromScores(x);
  const auto b = RankedList::FromScores(y);
  EXPECT_DOUBLE_EQ(evaluate(x, y, p), rbo(a, b, 0.5, 2).extrapolated);
  p.rbo_scope = RboScope::kEntireSet;
  EXPECT_DOUBLE_EQ(evaluate(x, y, p), rbo(a, b, 0.5, 6).extrapolated);
  p.measure = EvalMeasure::kJaccard;
  p.top_k = 3;
  EXPECT_DOUBLE_EQ(evaluate(x, y, p), 1.0);
  p.measure = EvalMeasure::kPearson;
  EXPECT_DOUBLE_EQ(evaluate(x, y, p), pearson(x, y));
}

TEST(Evaluate, SeededTieShuffleIsReproducible) {
  const Eigen::VectorXd x = vec({1, 1, 1, 1, 0, 0});
  const Eigen::VectorXd y = vec({1, 0, 1, 0, 1, 1});
  EvalParams p;
  p.measure = EvalMeasure::kJaccard;
  p.top_k = 2;
  p.tie_shuffle_seed = 17;
  EXPECT_EQ(evaluate(x, y, p), evaluate(x, y, p));
}

}  // namespace
}  // namespace hiercent
