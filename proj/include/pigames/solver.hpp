// Copyright 2026 The pigames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "pigames/coalition.hpp"
#include "pigames/game.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"

namespace pigames {

/// Demand and cost data of a coalition: demands add up, every cost entry is
/// the cheapest among the members.
struct CoalitionParams {
  std::vector<long long> demand;  // length T
  std::vector<Rat> production;    // length T
  std::vector<Rat> holding;       // length T-1
  std::vector<Rat> backlogging;   // length T-1
};

inline CoalitionParams aggregate(const PISituation& sit, const Coalition& s) {
  if (s.universe() != sit.player_count())
    throw std::invalid_argument("coalition drawn from a different player set");
  const int T = sit.periods;
  const std::vector<int> members = s.members();
  CoalitionParams out;
  out.demand.assign(T, 0);
  out.production = sit.production[members[0]];
  out.holding = sit.holding[members[0]];
  out.backlogging = sit.backlogging[members[0]];
  for (int i : members)
    for (int t = 0; t < T; ++t) out.demand[t] += sit.demand[i][t];
  for (std::size_t j = 1; j < members.size(); ++j) {
    const int i = members[j];
    for (int t = 0; t < T; ++t)
      if (sit.production[i][t] < out.production[t]) out.production[t] = sit.production[i][t];
    for (int t = 0; t + 1 < T; ++t) {
      if (sit.holding[i][t] < out.holding[t]) out.holding[t] = sit.holding[i][t];
      if (sit.backlogging[i][t] < out.backlogging[t]) out.backlogging[t] = sit.backlogging[i][t];
    }
  }
  return out;
}

/// Unit cost of serving period t (0-based) from production in period k:
/// production at k plus the holding (k < t) or backlogging (k > t) costs of
/// carrying the unit across the gap.
inline Rat serving_cost(const CoalitionParams& p, int k, int t) {
  Rat cost = p.production[k];
  for (int r = k; r < t; ++r) cost += p.holding[r];
  for (int r = t; r < k; ++r) cost += p.backlogging[r];
  return cost;
}

/// Optimal dual prices y*(S): y_t is the cheapest unit cost of serving
/// period t from any production period. This is the closed-form optimum of
/// the dual of the coalition's lot-sizing LP.
inline std::vector<Rat> dual_solution(const CoalitionParams& p) {
  const int T = static_cast<int>(p.production.size());
  // Prefix sums: hpre[t] = holding cost from period 1 up to t, so the cost
  // of carrying from k to t is hpre[t] - hpre[k]; likewise for backlogging.
  std::vector<Rat> hpre(T), bpre(T);
  for (int t = 1; t < T; ++t) {
    hpre[t] = hpre[t - 1] + p.holding[t - 1];
    bpre[t] = bpre[t - 1] + p.backlogging[t - 1];
  }
  std::vector<Rat> y(T);
  for (int t = 0; t < T; ++t) {
    Rat best = p.production[t];
    for (int k = 0; k < T; ++k) {
      Rat cost = p.production[k];
      if (k < t) cost += hpre[t] - hpre[k];
      if (k > t) cost += bpre[k] - bpre[t];
      if (cost < best) best = cost;
    }
    y[t] = best;
  }
  return y;
}

inline std::vector<Rat> dual_solution(const PISituation& sit, const Coalition& s) {
  return dual_solution(aggregate(sit, s));
}

/// c(S) = sum_t d_t^S y_t*(S), the optimal operation cost of coalition S.
inline Rat char_value(const CoalitionParams& p) {
  const std::vector<Rat> y = dual_solution(p);
  Rat total = 0;
  for (std::size_t t = 0; t < y.size(); ++t) total += Rat(p.demand[t]) * y[t];
  return total;
}

inline Rat char_value(const PISituation& sit, const Coalition& s) {
  return char_value(aggregate(sit, s));
}

/// Characteristic-function table over all nonempty coalitions.
inline TUGame build_game(const PISituation& sit) {
  const int n = sit.player_count();
  TUGame g = make_game(sit.players);
  for (Mask m = 1; m < (Mask{1} << n); ++m) g.values[m] = char_value(sit, Coalition(m, n));
  return g;
}

/// A feasible integer production plan. Vectors are indexed by period 1..T;
/// inventory[T-1] and backlog[T-1] are the end-of-horizon levels and are
/// always zero.
struct PrimalPlan {
  std::vector<long long> production;  // q
  std::vector<long long> inventory;   // I
  std::vector<long long> backlog;     // E
  Rat cost;
};

/// Recovers an optimal plan from the dual argmin: each period's demand is
/// served entirely from the cheapest serving period, ties broken toward the
/// earliest one. cost equals char_value (strong duality witness).
inline PrimalPlan primal_plan(const PISituation& sit, const Coalition& s) {
  const CoalitionParams p = aggregate(sit, s);
  const int T = sit.periods;
  PrimalPlan plan;
  plan.production.assign(T, 0);
  plan.inventory.assign(T, 0);
  plan.backlog.assign(T, 0);
  plan.cost = 0;
  for (int t = 0; t < T; ++t) {
    if (p.demand[t] == 0) continue;
    int best_k = 0;
    Rat best = serving_cost(p, 0, t);
    for (int k = 1; k < T; ++k) {
      Rat cost = serving_cost(p, k, t);
      if (cost < best) {
        best = cost;
        best_k = k;
      }
    }
    const long long d = p.demand[t];
    plan.production[best_k] += d;
    for (int r = best_k; r < t; ++r) plan.inventory[r] += d;
    for (int r = t; r < best_k; ++r) plan.backlog[r] += d;
    plan.cost += Rat(d) * best;
  }
  return plan;
}

/// Cost of a plan priced with coalition S's parameters; used to cross-check
/// primal_plan against the dual value.
inline Rat plan_cost(const CoalitionParams& p, const PrimalPlan& plan) {
  const int T = static_cast<int>(p.production.size());
  Rat total = 0;
  for (int t = 0; t < T; ++t) total += p.production[t] * Rat(plan.production[t]);
  for (int t = 0; t + 1 < T; ++t) {
    total += p.holding[t] * Rat(plan.inventory[t]);
    total += p.backlogging[t] * Rat(plan.backlog[t]);
  }
  return total;
}

struct OracleLimits {
  long long max_total_demand = 12;
  int max_periods = 6;
};

/// Brute-force optimum: enumerates every integer production vector q with
/// sum q = sum d, pricing the induced inventory/backlog levels directly.
/// Independent of the closed form; exists only to check it.
///
/// Costs are rescaled to a common denominator so the search runs on big
/// integers; partial sums prune branches that already exceed the incumbent.
inline Rat oracle_cost(const PISituation& sit, const Coalition& s,
                       const OracleLimits& limits = {}) {
  const CoalitionParams p = aggregate(sit, s);
  const int T = sit.periods;
  const long long total = std::accumulate(p.demand.begin(), p.demand.end(), 0LL);
  if (total == 0) return 0;
  if (T > limits.max_periods || total > limits.max_total_demand)
    throw std::domain_error("instance too large for enumeration (T = " + std::to_string(T) +
                            ", total demand = " + std::to_string(total) + ")");

  Int lcm = 1;
  auto fold = [&](const std::vector<Rat>& row) {
    for (const Rat& r : row) lcm = boost::multiprecision::lcm(lcm, denominator(r));
  };
  fold(p.production);
  fold(p.holding);
  fold(p.backlogging);
  auto scaled = [&](const std::vector<Rat>& row) {
    std::vector<Int> out;
    out.reserve(row.size());
    for (const Rat& r : row) out.push_back(numerator(r * Rat(lcm)));
    return out;
  };
  const std::vector<Int> prod = scaled(p.production);
  const std::vector<Int> hold = scaled(p.holding);
  const std::vector<Int> back = scaled(p.backlogging);

  // Incumbent: the produce-to-demand plan (no carrying at all).
  Int best = 0;
  for (int t = 0; t < T; ++t) best += prod[t] * p.demand[t];

  std::vector<long long> served(T, 0);  // cumulative demand through period t
  served[0] = p.demand[0];
  for (int t = 1; t < T; ++t) served[t] = served[t - 1] + p.demand[t];

  // depth-first over compositions of `total` into T parts
  auto rec = [&](auto&& self, int t, long long produced, const Int& cost) -> void {
    if (cost >= best) return;
    if (t == T - 1) {
      const long long qt = total - produced;
      Int c = cost + prod[t] * qt;
      if (c < best) best = c;
      return;
    }
    for (long long qt = 0; qt <= total - produced; ++qt) {
      Int c = cost + prod[t] * qt;
      const long long position = produced + qt - served[t];
      if (position > 0)
        c += hold[t] * position;
      else if (position < 0)
        c += back[t] * (-position);
      self(self, t + 1, produced + qt, c);
    }
  };
  if (T == 1) {
    best = prod[0] * total;
  } else {
    rec(rec, 0, 0, Int(0));
  }
  return Rat(best, lcm);
}

}  // namespace pigames
