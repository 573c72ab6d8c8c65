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

#include <optional>
#include <stdexcept>
#include <vector>

#include "pigames/coalition.hpp"
#include "pigames/game.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"
#include "pigames/solver.hpp"

namespace pigames {

/// Exact cost vector indexed by the situation's (or game's) player list.
using Allocation = std::vector<Rat>;

inline Rat coalition_sum(const Allocation& x, Mask m) {
  Rat total = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((m >> i) & 1) total += x[i];
  return total;
}

/// The Owen point: each player's demand priced at the grand coalition's
/// optimal dual prices, o_i = sum_t d_t^i y_t*(N).
inline Allocation owen_point(const PISituation& sit) {
  const int n = sit.player_count();
  const std::vector<Rat> y = dual_solution(sit, Coalition::full(n));
  Allocation o(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < sit.periods; ++t) o[i] += Rat(sit.demand[i][t]) * y[t];
  return o;
}

struct CoreCheck {
  bool in_core = false;
  std::optional<Coalition> violation;  // first violating coalition, canonical order
};

/// Exact core membership: x_N = c(N) and x_S <= c(S) for every proper S.
/// A broken efficiency condition is reported as a violation by N itself.
inline CoreCheck in_core(const TUGame& g, const Allocation& x) {
  const int n = g.player_count();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("allocation does not match the game's player list");
  const Coalition grand = Coalition::full(n);
  if (coalition_sum(x, grand.mask()) != g.value(grand)) return {false, grand};
  CoalitionRange range(n);
  Mask m;
  while (range.next(m)) {
    if (m == grand.mask()) continue;
    if (coalition_sum(x, m) > g.value(m)) return {false, Coalition(m, n)};
  }
  return {true, std::nullopt};
}

/// Per-coalition allocations: scheme[mask] is indexed by the members of the
/// coalition in ascending player order.
struct Pmas {
  int player_count = 0;
  std::vector<Allocation> scheme;  // size 2^n; scheme[0] empty
};

/// The PMAS realizing the Owen point: coalition S pays its members their
/// demand priced at S's own dual prices. Monotone because dual prices can
/// only fall as a coalition grows.
inline Pmas pmas(const PISituation& sit) {
  const int n = sit.player_count();
  Pmas out;
  out.player_count = n;
  out.scheme.resize(std::size_t{1} << n);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const Coalition s(m, n);
    const std::vector<Rat> y = dual_solution(sit, s);
    Allocation alloc;
    alloc.reserve(s.size());
    for (int i : s.members()) {
      Rat amount = 0;
      for (int t = 0; t < sit.periods; ++t) amount += Rat(sit.demand[i][t]) * y[t];
      alloc.push_back(amount);
    }
    out.scheme[m] = std::move(alloc);
  }
  return out;
}

struct PmasViolation {
  enum class Kind { Efficiency, Monotonicity };
  Kind kind;
  Mask small = 0;  // coalition S (efficiency: the offending coalition)
  Mask big = 0;    // coalition R with S subset of R (monotonicity only)
  int player = -1;
};

/// Checks both PMAS conditions exhaustively: the scheme covers each
/// coalition's cost exactly, and no member pays more in a larger coalition.
inline std::optional<PmasViolation> pmas_violation(const TUGame& g, const Pmas& scheme) {
  const int n = g.player_count();
  if (scheme.player_count != n)
    throw std::invalid_argument("scheme does not match the game's player list");
  std::vector<std::vector<int>> slot(std::size_t{1} << n, std::vector<int>());
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const Coalition s(m, n);
    slot[m].assign(n, -1);
    const std::vector<int> members = s.members();
    for (std::size_t j = 0; j < members.size(); ++j) slot[m][members[j]] = static_cast<int>(j);
    Rat total = 0;
    for (const Rat& v : scheme.scheme[m]) total += v;
    if (total != g.value(m))
      return PmasViolation{PmasViolation::Kind::Efficiency, m, 0, -1};
  }
  for (Mask big = 1; big < (Mask{1} << n); ++big) {
    for (Mask small = (big - 1) & big;; small = (small - 1) & big) {
      if (small != 0) {
        for (int i = 0; i < n; ++i) {
          if (!((small >> i) & 1)) continue;
          if (scheme.scheme[small][slot[small][i]] < scheme.scheme[big][slot[big][i]])
            return PmasViolation{PmasViolation::Kind::Monotonicity, small, big, i};
        }
      }
      if (small == 0) break;
    }
  }
  return std::nullopt;
}

struct EssentialReport {
  std::vector<bool> essential;      // per player
  std::vector<int> witness_period;  // 0-based period for essential players, -1 otherwise
  std::vector<int> essential_set() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < essential.size(); ++i)
      if (essential[i]) out.push_back(static_cast<int>(i));
    return out;
  }
};

/// A player is essential when removing it strictly raises some grand-
/// coalition dual price at a period where the others still have demand.
/// A lone player is inessential by convention (there is no one left to
/// need it).
inline EssentialReport essential_players(const PISituation& sit) {
  const int n = sit.player_count();
  EssentialReport report;
  report.essential.assign(n, false);
  report.witness_period.assign(n, -1);
  if (n == 1) return report;
  const Coalition grand = Coalition::full(n);
  const std::vector<Rat> y_grand = dual_solution(sit, grand);
  for (int i = 0; i < n; ++i) {
    const Coalition rest = grand.without(i);
    const CoalitionParams p = aggregate(sit, rest);
    const std::vector<Rat> y_rest = dual_solution(p);
    for (int t = 0; t < sit.periods; ++t) {
      if (p.demand[t] > 0 && y_rest[t] > y_grand[t]) {
        report.essential[i] = true;
        report.witness_period[i] = t;
        break;
      }
    }
  }
  return report;
}

/// The core collapses to the Owen point exactly when no player is essential.
inline bool core_is_owen_singleton(const PISituation& sit) {
  return essential_players(sit).essential_set().empty();
}

}  // namespace pigames
