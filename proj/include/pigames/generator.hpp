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

#include <random>
#include <vector>

#include "pigames/game.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"

namespace pigames {

/// Deterministic instance generators for property tests and sampled checks.
/// Cost entries are rationals in [0, max_cost] with denominators from a
/// small fixed pool.
struct GenOptions {
  int min_players = 1;
  int max_players = 4;
  int min_periods = 1;
  int max_periods = 4;
  long long max_demand = 3;
  long long max_cost = 10;
};

namespace gen_detail {

inline Rat random_cost(std::mt19937_64& rng, long long max_cost) {
  static constexpr int dens[] = {1, 1, 2, 3, 4};  // bias toward integers
  const int den = dens[std::uniform_int_distribution<int>(0, 4)(rng)];
  const long long num =
      std::uniform_int_distribution<long long>(0, max_cost * den)(rng);
  return Rat(num, den);
}

}  // namespace gen_detail

inline PISituation random_situation(std::mt19937_64& rng, const GenOptions& opt = {}) {
  PISituation sit;
  const int n = std::uniform_int_distribution<int>(opt.min_players, opt.max_players)(rng);
  const int T = std::uniform_int_distribution<int>(opt.min_periods, opt.max_periods)(rng);
  sit.players = default_player_names(n);
  sit.periods = T;
  sit.demand.resize(n);
  sit.production.resize(n);
  sit.holding.resize(n);
  sit.backlogging.resize(n);
  std::uniform_int_distribution<long long> demand_dist(0, opt.max_demand);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < T; ++t) {
      sit.demand[i].push_back(demand_dist(rng));
      sit.production[i].push_back(gen_detail::random_cost(rng, opt.max_cost));
    }
    for (int t = 0; t + 1 < T; ++t) {
      sit.holding[i].push_back(gen_detail::random_cost(rng, opt.max_cost));
      sit.backlogging[i].push_back(gen_detail::random_cost(rng, opt.max_cost));
    }
  }
  return sit;
}

/// All players share one cost profile (demands still differ), so removing
/// any player leaves every coalition minimum unchanged: everyone is
/// inessential.
inline PISituation identical_cost_situation(std::mt19937_64& rng, const GenOptions& opt = {}) {
  GenOptions two = opt;
  two.min_players = std::max(2, opt.min_players);
  PISituation sit = random_situation(rng, two);
  for (int i = 1; i < sit.player_count(); ++i) {
    sit.production[i] = sit.production[0];
    sit.holding[i] = sit.holding[0];
    sit.backlogging[i] = sit.backlogging[0];
  }
  return sit;
}

/// Random non-negative concave cost game built as a weighted coverage
/// function plus a concave function of the coalition size; both parts are
/// submodular and monotone, so the sum is too.
inline TUGame random_concave_game(std::mt19937_64& rng, int n, long long max_cost = 10) {
  TUGame g = make_game(default_player_names(n));
  const int resources = std::uniform_int_distribution<int>(1, 4)(rng);
  std::vector<Mask> covering(resources);
  std::vector<Rat> weight(resources);
  for (int r = 0; r < resources; ++r) {
    covering[r] = std::uniform_int_distribution<Mask>(1, (Mask{1} << n) - 1)(rng);
    weight[r] = gen_detail::random_cost(rng, max_cost);
  }
  // Decreasing marginal size costs delta_1 >= ... >= delta_n >= 0.
  std::vector<Rat> delta(n);
  Rat prev = gen_detail::random_cost(rng, max_cost);
  for (int k = 0; k < n; ++k) {
    delta[k] = prev;
    if (prev > 0) {
      Rat next = gen_detail::random_cost(rng, max_cost);
      while (next > prev) next /= 2;
      prev = next;
    }
  }
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    Rat value = 0;
    for (int r = 0; r < resources; ++r)
      if ((m & covering[r]) != 0) value += weight[r];
    for (int k = 0; k < std::popcount(m); ++k) value += delta[k];
    g.values[m] = value;
  }
  return g;
}

}  // namespace pigames
