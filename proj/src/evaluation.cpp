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

#include "hiercent/evaluation.hpp"

#include <cstdio>
#include <random>

namespace hiercent {

namespace {

// Counts pairs i < j with v[i] > v[j] while sorting v ascending.
std::int64_t sort_counting_inversions(std::vector<double>& v,
                                      std::vector<double>& scratch,
                                      std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = sort_counting_inversions(v, scratch, lo, mid) +
                       sort_counting_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      scratch[out++] = v[j++];
    } else {
      scratch[out++] = v[i++];
    }
  }
  while (i < mid) scratch[out++] = v[i++];
  while (j < hi) scratch[out++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

std::int64_t pairs(std::int64_t t) { return t * (t - 1) / 2; }

}  // namespace

// Knight's algorithm.
KendallCounts kendall_counts(const std::vector<double>& x,
                             const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  std::int64_t tied_x = 0, tied_xy = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && x[idx[j]] == x[idx[i]]) ++j;
    tied_x += pairs(static_cast<std::int64_t>(j - i));
    for (std::size_t a = i; a < j;) {
      std::size_t b = a;
      while (b < j && y[idx[b]] == y[idx[a]]) ++b;
      tied_xy += pairs(static_cast<std::int64_t>(b - a));
      a = b;
    }
    i = j;
  }

  std::vector<double> ys(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  const std::int64_t discordant = sort_counting_inversions(ys, scratch, 0, n);

  std::int64_t tied_y = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && ys[j] == ys[i]) ++j;
    tied_y += pairs(static_cast<std::int64_t>(j - i));
    i = j;
  }

  KendallCounts c;
  c.discordant = discordant;
  c.tied_x_only = tied_x - tied_xy;
  c.tied_y_only = tied_y - tied_xy;
  c.concordant = pairs(static_cast<std::int64_t>(n)) - tied_x - tied_y +
                 tied_xy - discordant;
  return c;
}

RankedList RankedList::FromScores(
    const Eigen::Ref<const Eigen::VectorXd>& scores,
    const std::vector<NodeIndex>& tie_priority) {
  const auto n = static_cast<NodeIndex>(scores.size());
  if (!tie_priority.empty() &&
      tie_priority.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("tie priority must cover every node");
  }
  const Eigen::VectorXd v = snapped(scores);
  RankedList list;
  list.order_.resize(n);
  std::iota(list.order_.begin(), list.order_.end(), NodeIndex{0});
  auto key = [&](NodeIndex i) {
    return tie_priority.empty() ? i : tie_priority[i];
  };
  std::sort(list.order_.begin(), list.order_.end(),
            [&](NodeIndex a, NodeIndex b) {
              if (v[a] != v[b]) return v[a] > v[b];
              return key(a) < key(b);
            });
  list.group_of_.resize(n);
  for (NodeIndex pos = 0; pos < n; ++pos) {
    if (pos == 0 || v[list.order_[pos]] != v[list.order_[pos - 1]]) {
      list.group_starts_.push_back(static_cast<std::size_t>(pos));
    }
    list.group_of_[pos] = list.group_starts_.size() - 1;
  }
  return list;
}

std::vector<NodeIndex> RankedList::top(std::size_t k) const {
  k = std::min(k, order_.size());
  return {order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k)};
}

double jaccard_topk(const RankedList& a, const RankedList& b, std::size_t k) {
  if (a.size() != b.size()) throw ParameterError("ranked lists differ in length");
  if (k < 1 || k > a.size()) {
    throw ParameterError("top-k size " + std::to_string(k) +
                         " outside [1, " + std::to_string(a.size()) + "]");
  }
  std::vector<char> in_a(a.size(), 0);
  for (NodeIndex v : a.top(k)) in_a[v] = 1;
  std::size_t common = 0;
  for (NodeIndex v : b.top(k)) common += in_a[v];
  return static_cast<double>(common) / static_cast<double>(2 * k - common);
}

RboResult rbo(const RankedList& a, const RankedList& b, double p,
              std::size_t depth, RboTies ties) {
  if (a.size() != b.size()) throw ParameterError("ranked lists differ in length");
  if (!(p > 0.0 && p < 1.0)) {
    throw ParameterError("RBO persistence p must lie in (0, 1)");
  }
  if (depth < 1 || depth > a.size()) {
    throw ParameterError("RBO depth " + std::to_string(depth) +
                         " outside [1, " + std::to_string(a.size()) + "]");
  }
  std::vector<char> in_a(a.size(), 0), in_b(a.size(), 0);
  std::size_t filled_a = 0, filled_b = 0;
  std::size_t overlap = 0;
  auto extend = [&](const RankedList& list, std::vector<char>& mine,
                    const std::vector<char>& theirs, std::size_t& filled,
                    std::size_t until) {
    for (; filled < until; ++filled) {
      const NodeIndex v = list.order()[filled];
      mine[v] = 1;
      overlap += static_cast<std::size_t>(theirs[v]);
    }
  };

  RboResult r;
  r.depth = depth;
  double weight = 1.0;  // p^(d-1)
  double sum = 0.0;
  double agreement = 0.0;
  for (std::size_t d = 1; d <= depth; ++d) {
    if (ties == RboTies::kDeterministic) {
      extend(a, in_a, in_b, filled_a, d);
      extend(b, in_b, in_a, filled_b, d);
    } else {
      extend(a, in_a, in_b, filled_a,
             std::max(filled_a, a.group_end(a.group_at(d - 1))));
      extend(b, in_b, in_a, filled_b,
             std::max(filled_b, b.group_end(b.group_at(d - 1))));
    }
    agreement = static_cast<double>(std::min(overlap, d)) / static_cast<double>(d);
    sum += weight * agreement;
    weight *= p;
  }
  // weight == p^depth here.
  r.base = (1.0 - p) * sum;
  r.extrapolated = std::min(1.0, r.base + agreement * weight);
  return r;
}

bool is_correlation(EvalMeasure m) {
  return m == EvalMeasure::kPearson || m == EvalMeasure::kSpearman ||
         m == EvalMeasure::kKendallB;
}

namespace {

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

}  // namespace

std::string eval_id(const EvalParams& params) {
  std::string id;
  switch (params.measure) {
    case EvalMeasure::kPearson:
      return "pearson";
    case EvalMeasure::kSpearman:
      return "spearman";
    case EvalMeasure::kKendallB:
      return "kendall_b";
    case EvalMeasure::kJaccard:
      id = "jaccard";
      break;
    case EvalMeasure::kRbo:
      id = params.rbo_scope == RboScope::kTopK ? "rbo_topk" : "rbo_all";
      id += "_p" + format_p(params.rbo_p);
      if (params.rbo_ties == RboTies::kTieAware) id += "_tieaware";
      break;
  }
  const bool uses_k = params.measure == EvalMeasure::kJaccard ||
                      params.rbo_scope == RboScope::kTopK;
  if (uses_k && params.top_k) id += "_k" + std::to_string(*params.top_k);
  return id;
}

EvalParams parse_eval_id(const std::string& id) {
  EvalParams params;
  auto fail = [&]() -> EvalParams {
    throw ParameterError("unknown evaluation measure '" + id + "'");
  };
  auto take_k = [&](std::string rest) {
    const auto at = rest.rfind("_k");
    if (at != std::string::npos) {
      const std::string digits = rest.substr(at + 2);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos) {
        fail();
      }
      params.top_k = std::stoul(digits);
      rest.erase(at);
    }
    return rest;
  };
  if (id == "pearson") {
    params.measure = EvalMeasure::kPearson;
  } else if (id == "spearman") {
    params.measure = EvalMeasure::kSpearman;
  } else if (id == "kendall_b") {
    params.measure = EvalMeasure::kKendallB;
  } else if (id.rfind("jaccard", 0) == 0) {
    params.measure = EvalMeasure::kJaccard;
    if (take_k(id) != "jaccard") fail();
  } else if (id.rfind("rbo_", 0) == 0) {
    params.measure = EvalMeasure::kRbo;
    std::string rest = take_k(id).substr(4);
    if (rest.rfind("topk_p", 0) == 0) {
      params.rbo_scope = RboScope::kTopK;
      rest = rest.substr(6);
    } else if (rest.rfind("all_p", 0) == 0) {
      params.rbo_scope = RboScope::kEntireSet;
      rest = rest.substr(5);
    } else {
      fail();
    }
    const auto tie = rest.find("_tieaware");
    if (tie != std::string::npos) {
      if (tie + 9 != rest.size()) fail();
      params.rbo_ties = RboTies::kTieAware;
      rest.erase(tie);
    }
    std::size_t used = 0;
    try {
      params.rbo_p = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != rest.size() || !(params.rbo_p > 0.0 && params.rbo_p < 1.0)) {
      fail();
    }
  } else {
    fail();
  }
  return params;
}

std::size_t default_top_k(std::size_t n) {
  if (n < 150) return 10;
  return static_cast<std::size_t>(std::ceil(0.10 * static_cast<double>(n)));
}

std::size_t resolve_top_k(const EvalParams& params, std::size_t n) {
  if (params.top_k) {
    if (*params.top_k < 1 || *params.top_k > n) {
      throw ParameterError("top-k size " + std::to_string(*params.top_k) +
                           " outside [1, " + std::to_string(n) + "]");
    }
    return *params.top_k;
  }
  return std::min(default_top_k(n), n);
}

double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y,
                const EvalParams& params) {
  switch (params.measure) {
    case EvalMeasure::kPearson:
      return pearson(x, y);
    case EvalMeasure::kSpearman:
      return spearman(x, y);
    case EvalMeasure::kKendallB:
      return kendall_tau_b(x, y);
    case EvalMeasure::kJaccard:
    case EvalMeasure::kRbo:
      break;
  }
  if (x.size() != y.size()) throw ParameterError("score vectors differ in length");
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<NodeIndex> priority;
  if (params.tie_shuffle_seed) {
    priority.resize(n);
    std::iota(priority.begin(), priority.end(), NodeIndex{0});
    std::mt19937_64 rng(*params.tie_shuffle_seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  const RankedList a = RankedList::FromScores(x, priority);
  const RankedList b = RankedList::FromScores(y, priority);
  if (params.measure == EvalMeasure::kJaccard) {
    return jaccard_topk(a, b, resolve_top_k(params, n));
  }
  const std::size_t depth = params.rbo_scope == RboScope::kTopK
                                ? resolve_top_k(params, n)
                                : n;
  return rbo(a, b, params.rbo_p, depth, params.rbo_ties).extrapolated;
}

}  // namespace hiercent
