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

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pigames/allocation.hpp"
#include "pigames/coalition.hpp"
#include "pigames/game.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"
#include "pigames/solver.hpp"

namespace pigames {

/// Concatenates two situations on the same ordered player set, inserting a
/// zero-demand separator period whose production, holding and backlogging
/// costs are a blocking value omega. No optimal plan ever carries a unit
/// across the separator, so the combined game is the value-wise sum of the
/// two component games.
inline PISituation sum_situations(const PISituation& a, const PISituation& b) {
  if (a.players != b.players)
    throw std::invalid_argument("sum_situations requires identical player lists");
  const int n = a.player_count();
  const int Ta = a.periods, Tb = b.periods;

  // omega strictly exceeds the cost of any serving path in either block:
  // 1 + max production cost + every holding cost + every backlogging cost.
  Rat omega = 1;
  Rat max_prod = 0;
  for (const PISituation* sit : {&a, &b}) {
    for (int i = 0; i < n; ++i) {
      for (const Rat& v : sit->production[i]) max_prod = std::max(max_prod, v);
      for (const Rat& v : sit->holding[i]) omega += v;
      for (const Rat& v : sit->backlogging[i]) omega += v;
    }
  }
  omega += max_prod;

  PISituation out;
  out.players = a.players;
  out.periods = Ta + Tb + 1;
  out.demand.resize(n);
  out.production.resize(n);
  out.holding.resize(n);
  out.backlogging.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& d = out.demand[i];
    d = a.demand[i];
    d.push_back(0);
    d.insert(d.end(), b.demand[i].begin(), b.demand[i].end());

    auto& p = out.production[i];
    p = a.production[i];
    p.push_back(omega);
    p.insert(p.end(), b.production[i].begin(), b.production[i].end());

    // The separator contributes omega to every carrying path that crosses
    // it, in both directions.
    auto& h = out.holding[i];
    h = a.holding[i];
    h.push_back(omega);
    h.push_back(omega);
    h.insert(h.end(), b.holding[i].begin(), b.holding[i].end());

    auto& bk = out.backlogging[i];
    bk = a.backlogging[i];
    bk.push_back(omega);
    bk.push_back(omega);
    bk.insert(bk.end(), b.backlogging[i].begin(), b.backlogging[i].end());
  }
  return out;
}

inline bool is_simple(const TUGame& g) {
  for (std::size_t m = 1; m < g.values.size(); ++m)
    if (g.values[m] != 0 && g.values[m] != 1) return false;
  return true;
}

/// Players whose absence forces value zero: i is veto iff c(S) = 0 for every
/// S that avoids i.
inline std::vector<int> veto_players(const TUGame& g) {
  const int n = g.player_count();
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool veto = true;
    for (Mask m = 1; m < (Mask{1} << n) && veto; ++m)
      if (!((m >> i) & 1) && g.values[m] != 0) veto = false;
    if (veto) out.push_back(i);
  }
  return out;
}

inline bool is_veto(const TUGame& g) { return !veto_players(g).empty(); }

/// Monotone after 0-normalization: subtracting singleton costs, larger
/// coalitions never cost more. Checked over every nested pair, with the
/// empty coalition (normalized value 0) included.
inline bool is_zero_monotone(const TUGame& g) {
  const int n = g.player_count();
  std::vector<Rat> normalized(g.values.size());
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    normalized[m] = g.values[m];
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) normalized[m] -= g.values[Mask{1} << i];
  }
  for (Mask big = 1; big < (Mask{1} << n); ++big) {
    for (Mask small = (big - 1) & big;; small = (small - 1) & big) {
      const Rat& small_value = small == 0 ? normalized[0] : normalized[small];
      if (small_value < normalized[big]) return false;
      if (small == 0) break;
    }
  }
  return true;
}

/// Builds a situation whose game reproduces a 0-monotone simple veto game
/// exactly. One demand unit sits with a veto player in the final period;
/// production is free only in period 1; the holding pattern of the maximal
/// value-1 coalitions decides who can carry the unit for free.
inline PISituation veto_game_to_situation(const TUGame& g) {
  const int n = g.player_count();
  if (!is_simple(g))
    throw std::invalid_argument("veto construction requires a simple game (all values 0 or 1)");
  const std::vector<int> vetoes = veto_players(g);
  if (vetoes.empty())
    throw std::invalid_argument("veto construction requires a veto player");
  if (!is_zero_monotone(g))
    throw std::invalid_argument("veto construction requires a 0-monotone game");
  const int veto = vetoes.front();

  // Maximal coalitions with value 1: value 1 and every strict superset 0.
  std::vector<Mask> maximal;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (g.values[m] != 1) continue;
    bool is_max = true;
    for (int i = 0; i < n && is_max; ++i) {
      const Mask bigger = m | (Mask{1} << i);
      if (bigger != m && g.values[bigger] == 1) is_max = false;
    }
    if (is_max) maximal.push_back(m);
  }
  std::sort(maximal.begin(), maximal.end(), [](Mask x, Mask y) {
    if (std::popcount(x) != std::popcount(y)) return std::popcount(x) > std::popcount(y);
    return coalition_before(x, y);
  });

  const int T = static_cast<int>(maximal.size()) + 1;
  PISituation sit;
  sit.players = g.players;
  sit.periods = T;
  sit.demand.assign(n, std::vector<long long>(T, 0));
  sit.production.assign(n, std::vector<Rat>(T, Rat(1)));
  sit.holding.assign(n, std::vector<Rat>(T - 1, Rat(0)));
  sit.backlogging.assign(n, std::vector<Rat>(T - 1, Rat(1)));
  // The zero game has no value-1 coalition and needs no demand at all.
  if (!maximal.empty()) sit.demand[veto][T - 1] = 1;
  for (int i = 0; i < n; ++i) {
    sit.production[i][0] = 0;
    for (int t = 0; t + 1 < T; ++t)
      if ((maximal[t] >> i) & 1) sit.holding[i][t] = 1;
  }
  return sit;
}

struct ConcavityWitness {
  Mask small = 0;  // S
  Mask big = 0;    // T with S subset of T, player outside T
  int player = -1;
};

/// A cost game is concave when marginal costs shrink as coalitions grow:
/// c(S+i) - c(S) >= c(T+i) - c(T) for S inside T, i outside T. Returns the
/// first violating triple, or nullopt if the game is concave.
inline std::optional<ConcavityWitness> concavity_violation(const TUGame& g) {
  const int n = g.player_count();
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    const Mask rest = ((Mask{1} << n) - 1) & ~bit;
    for (Mask big = rest;; big = (big - 1) & rest) {
      const Rat big_marginal = g.values[big | bit] - g.values[big];
      for (Mask small = (big - 1) & big;; small = (small - 1) & big) {
        const Rat small_marginal = g.values[small | bit] - g.values[small];
        if (small_marginal < big_marginal)
          return ConcavityWitness{small, big, i};
        if (small == 0) break;
      }
      if (big == 0) break;
    }
  }
  return std::nullopt;
}

inline bool is_concave(const TUGame& g) { return !concavity_violation(g).has_value(); }

/// Exact Shapley value via coalition-weighted marginal costs.
inline Allocation shapley(const TUGame& g) {
  const int n = g.player_count();
  std::vector<Int> factorial(n + 1);
  factorial[0] = 1;
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;
  Allocation out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    const Mask rest = ((Mask{1} << n) - 1) & ~bit;
    for (Mask s = rest;; s = (s - 1) & rest) {
      const int size = std::popcount(s);
      const Rat weight(factorial[size] * factorial[n - size - 1], factorial[n]);
      out[i] += weight * (g.values[s | bit] - g.values[s]);
      if (s == 0) break;
    }
  }
  return out;
}

/// The PMAS carried by a non-negative concave game: every subgame gets its
/// Shapley value. Preconditions are checked; the resulting scheme is
/// re-verified exhaustively before being returned.
inline Pmas shapley_pmas(const TUGame& g) {
  const int n = g.player_count();
  for (std::size_t m = 1; m < g.values.size(); ++m)
    if (g.values[m] < 0)
      throw std::invalid_argument("shapley_pmas requires a non-negative game; c" +
                                  to_string(Coalition(static_cast<Mask>(m), n)) + " = " +
                                  to_string(g.values[m]));
  if (auto w = concavity_violation(g)) {
    std::string small = w->small == 0 ? "{}" : to_string(Coalition(w->small, n));
    throw std::invalid_argument(
        "shapley_pmas requires a concave game; marginal of player " +
        std::to_string(w->player + 1) + " grows from " + small + " to " +
        to_string(Coalition(w->big == 0 ? Mask{1} << w->player : w->big, n)));
  }
  Pmas scheme;
  scheme.player_count = n;
  scheme.scheme.resize(std::size_t{1} << n);
  for (Mask m = 1; m < (Mask{1} << n); ++m)
    scheme.scheme[m] = shapley(subgame(g, Coalition(m, n)));
  if (auto v = pmas_violation(g, scheme))
    throw std::logic_error("subgame Shapley values failed the PMAS check");
  return scheme;
}

}  // namespace pigames
