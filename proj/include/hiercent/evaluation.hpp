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

#ifndef HIERCENT_EVALUATION_HPP_
#define HIERCENT_EVALUATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hiercent/error.hpp"
#include "hiercent/graph.hpp"

namespace hiercent {

// Rounds to 40 significant bits (about 12 decimal digits) so that values
// equal up to floating-point noise compare equal. Every tie-sensitive
// routine below compares snapped values.
inline double snap_for_ties(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  int exponent = 0;
  const double mantissa = std::frexp(v, &exponent);
  return std::ldexp(std::round(std::ldexp(mantissa, 40)), exponent - 40);
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> snapped(
    const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  return x.derived().unaryExpr(
      [](Scalar v) { return static_cast<Scalar>(snap_for_ties(v)); });
}

// Ascending 1-based ranks; tied values share the average of their ranks.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> midranks(
    const Eigen::DenseBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto v = snapped(x);
  const Eigen::Index n = v.size();
  std::vector<Eigen::Index> idx(n);
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return v[a] < v[b]; });
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rank(n);
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const Scalar shared = static_cast<Scalar>(i + j + 2) / Scalar(2);
    for (Eigen::Index t = i; t <= j; ++t) rank[idx[t]] = shared;
    i = j + 1;
  }
  return rank;
}

namespace detail {

template <typename DX, typename DY>
void require_paired(const Eigen::DenseBase<DX>& x,
                    const Eigen::DenseBase<DY>& y) {
  if (x.size() != y.size()) {
    throw ParameterError("score vectors differ in length");
  }
  if (x.size() < 2) {
    throw UndefinedCorrelation("correlation needs at least two observations");
  }
}

template <typename Derived>
bool is_constant(const Eigen::DenseBase<Derived>& x) {
  const auto v = snapped(x);
  return (v.array() == v[0]).all();
}

}  // namespace detail

// Pearson product-moment correlation. Throws UndefinedCorrelation when
// either input is constant.
template <typename DX, typename DY>
typename DX::Scalar pearson(const Eigen::DenseBase<DX>& x,
                            const Eigen::DenseBase<DY>& y) {
  using Scalar = typename DX::Scalar;
  detail::require_paired(x, y);
  if (detail::is_constant(x) || detail::is_constant(y)) {
    throw UndefinedCorrelation("Pearson correlation of a constant vector");
  }
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Vector xv = x.derived().template cast<Scalar>();
  const Vector yv = y.derived().template cast<Scalar>();
  const Vector xc = xv.array() - xv.mean();
  const Vector yc = yv.array() - yv.mean();
  const Scalar r = xc.dot(yc) / std::sqrt(xc.squaredNorm() * yc.squaredNorm());
  return std::clamp(r, Scalar(-1), Scalar(1));
}

// Pearson correlation of midranks.
template <typename DX, typename DY>
typename DX::Scalar spearman(const Eigen::DenseBase<DX>& x,
                             const Eigen::DenseBase<DY>& y) {
  detail::require_paired(x, y);
  return pearson(midranks(x), midranks(y.derived().template cast<
                                           typename DX::Scalar>()));
}

// Pair counts behind Kendall's tau-b. Pairs tied on both variables appear
// in none of the four counts.
struct KendallCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x_only = 0;
  std::int64_t tied_y_only = 0;
};

KendallCounts kendall_counts(const std::vector<double>& x,
                             const std::vector<double>& y);

// Kendall's tau-b, O(n log n). Throws UndefinedCorrelation when every pair
// is tied on either variable.
template <typename DX, typename DY>
typename DX::Scalar kendall_tau_b(const Eigen::DenseBase<DX>& x,
                                  const Eigen::DenseBase<DY>& y) {
  using Scalar = typename DX::Scalar;
  detail::require_paired(x, y);
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = snap_for_ties(static_cast<double>(x.derived()(i)));
    ys[i] = snap_for_ties(static_cast<double>(y.derived()(i)));
  }
  const KendallCounts c = kendall_counts(xs, ys);
  const double both = static_cast<double>(c.concordant + c.discordant);
  const double dx = both + static_cast<double>(c.tied_x_only);
  const double dy = both + static_cast<double>(c.tied_y_only);
  if (dx == 0.0 || dy == 0.0) {
    throw UndefinedCorrelation("Kendall tau-b: every pair is tied");
  }
  const double tau =
      static_cast<double>(c.concordant - c.discordant) / std::sqrt(dx * dy);
  return static_cast<Scalar>(std::clamp(tau, -1.0, 1.0));
}

// Nodes ordered by descending score. Equal (snapped) scores form tie groups;
// inside a group nodes follow ascending index, or ascending `tie_priority`
// when one is supplied.
class RankedList {
 public:
  static RankedList FromScores(const Eigen::Ref<const Eigen::VectorXd>& scores,
                               const std::vector<NodeIndex>& tie_priority = {});

  std::size_t size() const { return order_.size(); }
  const std::vector<NodeIndex>& order() const { return order_; }
  // Start position of every tie group, ascending; first entry is 0.
  const std::vector<std::size_t>& group_starts() const { return group_starts_; }
  // Tie group of the node at `position`.
  std::size_t group_at(std::size_t position) const { return group_of_[position]; }
  std::size_t group_end(std::size_t group) const {
    return group + 1 < group_starts_.size() ? group_starts_[group + 1]
                                            : order_.size();
  }
  std::vector<NodeIndex> top(std::size_t k) const;

 private:
  std::vector<NodeIndex> order_;
  std::vector<std::size_t> group_starts_;
  std::vector<std::size_t> group_of_;
};

// |A ∩ B| / |A ∪ B| of the two top-k node sets. Throws ParameterError
// unless 1 <= k <= N.
double jaccard_topk(const RankedList& a, const RankedList& b, std::size_t k);

enum class RboTies {
  // Compare prefixes of the deterministic ranked order.
  kDeterministic,
  // A tie group enters the prefix as a whole once its first position is
  // reached; agreement is capped at 1.
  kTieAware,
};

struct RboResult {
  double base = 0.0;          // (1-p) sum_{d<=k} p^(d-1) A_d
  double extrapolated = 0.0;  // base + A_k p^k
  std::size_t depth = 0;
};

// Rank-biased overlap evaluated to `depth`. Throws ParameterError unless
// 0 < p < 1 and 1 <= depth <= N.
RboResult rbo(const RankedList& a, const RankedList& b, double p,
              std::size_t depth, RboTies ties = RboTies::kDeterministic);

enum class EvalMeasure { kPearson, kSpearman, kKendallB, kJaccard, kRbo };
enum class RboScope { kTopK, kEntireSet };

struct EvalParams {
  EvalMeasure measure = EvalMeasure::kSpearman;
  double rbo_p = 0.9;
  RboScope rbo_scope = RboScope::kTopK;
  RboTies rbo_ties = RboTies::kDeterministic;
  // Explicit k for Jaccard and top-k RBO; unset selects the default rule.
  std::optional<std::size_t> top_k;
  // When set, tie groups are ordered by a permutation drawn from this seed
  // instead of by node index (same permutation for both lists).
  std::optional<std::uint64_t> tie_shuffle_seed;
};

bool is_correlation(EvalMeasure m);

// pearson, spearman, kendall_b, jaccard, rbo_topk_p0.5, rbo_all_p0.9, ...
std::string eval_id(const EvalParams& params);

// Parses an eval_id back into parameters. Throws ParameterError.
EvalParams parse_eval_id(const std::string& id);

// 10 for networks under 150 nodes, otherwise ceil(0.1 N).
std::size_t default_top_k(std::size_t n);

// k actually used for a network of n nodes. The default rule is clamped to
// n; an explicit k larger than n is rejected.
std::size_t resolve_top_k(const EvalParams& params, std::size_t n);

// One evaluation value gamma(x, y). RBO yields its extrapolated value.
// Throws UndefinedCorrelation for undefined correlations.
double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y,
                const EvalParams& params);

}  // namespace hiercent

#endif  // HIERCENT_EVALUATION_HPP_
