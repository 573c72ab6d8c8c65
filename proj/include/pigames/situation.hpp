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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pigames/coalition.hpp"
#include "pigames/rational.hpp"

namespace pigames {

/// A production-inventory situation: per-player demand over a T-period
/// horizon plus unit production, inventory-holding and backlogging costs.
///
/// Holding and backlogging have T-1 columns: column t is the cost of carrying
/// (resp. owing) a unit between periods t and t+1. End-of-horizon carrying is
/// unreachable because inventory and backlog must be zero at the boundary.
struct PISituation {
  std::vector<std::string> players;
  int periods = 0;  // T

  std::vector<std::vector<long long>> demand;  // n x T, non-negative integers
  std::vector<std::vector<Rat>> production;    // n x T
  std::vector<std::vector<Rat>> holding;       // n x (T-1)
  std::vector<std::vector<Rat>> backlogging;   // n x (T-1)

  int player_count() const { return static_cast<int>(players.size()); }

  friend bool operator==(const PISituation&, const PISituation&) = default;
};

/// Parsed but unchecked input. Demand is kept rational so that a non-integer
/// demand surfaces as a validation diagnostic rather than a parse error.
struct RawSituation {
  std::vector<std::string> players;
  int periods = 0;
  std::vector<std::vector<Rat>> demand;
  std::vector<std::vector<Rat>> production;
  std::vector<std::vector<Rat>> holding;
  std::vector<std::vector<Rat>> backlogging;
};

/// Carries every violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid situation:";
    for (const auto& s : issues) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> issues_;
};

struct ValidatedSituation {
  PISituation situation;
  std::vector<std::string> warnings;
};

/// Checks dimensions, signs, demand integrality and player uniqueness.
/// A holding/backlogging row of length T is accepted and its final column
/// dropped with a warning; that column can never contribute to any cost.
inline ValidatedSituation validate(const RawSituation& raw) {
  std::vector<std::string> issues;
  std::vector<std::string> warnings;

  const int n = static_cast<int>(raw.players.size());
  const int T = raw.periods;

  if (n < 1) issues.push_back("player list is empty");
  if (n > kMaxPlayers)
    issues.push_back("too many players (" + std::to_string(n) + " > " +
                     std::to_string(kMaxPlayers) + ")");
  if (T < 1) issues.push_back("horizon must satisfy T >= 1, got T = " + std::to_string(T));

  {
    std::set<std::string> seen;
    for (const auto& p : raw.players)
      if (!seen.insert(p).second) issues.push_back("duplicate player id '" + p + "'");
  }

  auto check_rows = [&](const char* name, const std::vector<std::vector<Rat>>& m) {
    if (static_cast<int>(m.size()) != n)
      issues.push_back(std::string(name) + " has " + std::to_string(m.size()) +
                       " rows, expected " + std::to_string(n));
  };
  check_rows("demand", raw.demand);
  check_rows("production", raw.production);
  check_rows("holding", raw.holding);
  check_rows("backlogging", raw.backlogging);

  if (!issues.empty() && (T < 1 || static_cast<int>(raw.demand.size()) != n ||
                          static_cast<int>(raw.production.size()) != n ||
                          static_cast<int>(raw.holding.size()) != n ||
                          static_cast<int>(raw.backlogging.size()) != n)) {
    throw ValidationError(issues);
  }

  PISituation sit;
  sit.players = raw.players;
  sit.periods = T;
  sit.demand.resize(n);
  sit.production.resize(n);
  sit.holding.resize(n);
  sit.backlogging.resize(n);

  auto player_name = [&](int i) { return "player '" + raw.players[i] + "'"; };

  for (int i = 0; i < n; ++i) {
    const auto& d = raw.demand[i];
    if (static_cast<int>(d.size()) != T) {
      issues.push_back("demand row of " + player_name(i) + " has " +
                       std::to_string(d.size()) + " entries, expected " + std::to_string(T));
    } else {
      sit.demand[i].reserve(T);
      for (int t = 0; t < T; ++t) {
        if (!is_integer(d[t])) {
          issues.push_back("non-integer demand " + to_string(d[t]) + " for " + player_name(i) +
                           ", period " + std::to_string(t + 1));
        } else if (d[t] < 0) {
          issues.push_back("negative demand " + to_string(d[t]) + " for " + player_name(i) +
                           ", period " + std::to_string(t + 1));
        } else {
          sit.demand[i].push_back(static_cast<long long>(numerator(d[t])));
          continue;
        }
        sit.demand[i].push_back(0);
      }
    }

    auto check_costs = [&](const char* name, const std::vector<Rat>& row, int want,
                           std::vector<Rat>& out, bool droppable_extra) {
      int len = static_cast<int>(row.size());
      if (len == want + 1 && droppable_extra) {
        warnings.push_back(std::string(name) + " row of " + player_name(i) + " has " +
                           std::to_string(len) + " entries; the final period-" +
                           std::to_string(T) + " entry never affects any cost and was dropped");
        len = want;
      } else if (len != want) {
        issues.push_back(std::string(name) + " row of " + player_name(i) + " has " +
                         std::to_string(row.size()) + " entries, expected " +
                         std::to_string(want));
        return;
      }
      out.reserve(want);
      for (int t = 0; t < len; ++t) {
        if (row[t] < 0) {
          issues.push_back("negative " + std::string(name) + " cost " + to_string(row[t]) +
                           " for " + player_name(i) + ", period " + std::to_string(t + 1));
          out.push_back(0);
        } else {
          out.push_back(row[t]);
        }
      }
    };

    check_costs("production", raw.production[i], T, sit.production[i], false);
    check_costs("holding", raw.holding[i], T - 1, sit.holding[i], true);
    check_costs("backlogging", raw.backlogging[i], T - 1, sit.backlogging[i], true);
  }

  if (!issues.empty()) throw ValidationError(issues);
  return {std::move(sit), std::move(warnings)};
}

/// The sub-situation on S: each matrix restricted to the rows of S's members,
/// same horizon.
inline PISituation restrict(const PISituation& sit, const Coalition& s) {
  if (s.universe() != sit.player_count())
    throw std::invalid_argument("coalition drawn from a different player set");
  PISituation out;
  out.periods = sit.periods;
  for (int i : s.members()) {
    out.players.push_back(sit.players[i]);
    out.demand.push_back(sit.demand[i]);
    out.production.push_back(sit.production[i]);
    out.holding.push_back(sit.holding[i]);
    out.backlogging.push_back(sit.backlogging[i]);
  }
  return out;
}

}  // namespace pigames
