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

#include <stdexcept>
#include <string>
#include <vector>

#include "pigames/coalition.hpp"
#include "pigames/rational.hpp"

namespace pigames {

/// A TU cost game: a player list and the exact cost of every nonempty
/// coalition, stored densely by bitmask. values[0] (the empty coalition)
/// is fixed at 0.
struct TUGame {
  std::vector<std::string> players;
  std::vector<Rat> values;  // size 2^n

  int player_count() const { return static_cast<int>(players.size()); }

  const Rat& value(Mask m) const { return values[m]; }
  const Rat& value(const Coalition& s) const { return values[s.mask()]; }

  Rat& value(Mask m) { return values[m]; }

  Rat grand_value() const { return values[values.size() - 1]; }

  friend bool operator==(const TUGame&, const TUGame&) = default;
};

inline TUGame make_game(std::vector<std::string> players) {
  const int n = static_cast<int>(players.size());
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
  TUGame g;
  g.players = std::move(players);
  g.values.assign(std::size_t{1} << n, Rat(0));
  return g;
}

inline std::vector<std::string> default_player_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("P" + std::to_string(i));
  return names;
}

/// Restriction of the characteristic function to the subsets of S, with S's
/// members re-indexed 0..|S|-1.
inline TUGame subgame(const TUGame& g, const Coalition& s) {
  if (s.universe() != g.player_count())
    throw std::invalid_argument("coalition drawn from a different player set");
  const std::vector<int> members = s.members();
  const int k = static_cast<int>(members.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (int i : members) names.push_back(g.players[i]);
  TUGame out = make_game(std::move(names));
  for (Mask sub = 1; sub < (Mask{1} << k); ++sub) {
    Mask orig = 0;
    for (int j = 0; j < k; ++j)
      if ((sub >> j) & 1) orig |= Mask{1} << members[j];
    out.values[sub] = g.values[orig];
  }
  return out;
}

/// Value-wise sum of two games on the same ordered player set.
inline TUGame add_games(const TUGame& a, const TUGame& b) {
  if (a.players != b.players)
    throw std::invalid_argument("cannot add games on different player sets");
  TUGame out = a;
  for (std::size_t m = 1; m < out.values.size(); ++m) out.values[m] += b.values[m];
  return out;
}

}  // namespace pigames
