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

#include "pigames/pigames.hpp"

namespace fixtures {

using namespace pigames;

// The two-player, two-period situation of the worked example: game
// (2, 2, 3), Owen point (1, 2).
inline PISituation ex1() {
  PISituation s;
  s.players = {"P1", "P2"};
  s.periods = 2;
  s.demand = {{1, 0}, {0, 2}};
  s.production = {{2, 1}, {1, 1}};
  s.holding = {{1}, {2}};
  s.backlogging = {{1}, {2}};
  return s;
}

// A different situation inducing the same game (2, 2, 3) but Owen point
// (2, 1): the Owen point is not game-theoretical.
inline PISituation ex1_prime() {
  PISituation s;
  s.players = {"P1", "P2"};
  s.periods = 2;
  s.demand = {{0, 2}, {1, 0}};
  s.production = {{1, 1}, {2, 1}};
  s.holding = {{2}, {3}};
  s.backlogging = {{2}, {2}};
  return s;
}

// In the upsilon1 rule's domain (|N| = T = 2, c(N) <= c({i})): cooperation
// is much cheaper than standing alone, and the equal split (3/2, 3/2)
// differs from the Owen point (1, 2), so AP fails.
inline PISituation upsilon1_witness() {
  PISituation s;
  s.players = {"P1", "P2"};
  s.periods = 2;
  s.demand = {{0, 1}, {0, 2}};
  s.production = {{1, 9}, {9, 9}};
  s.holding = {{9}, {0}};
  s.backlogging = {{9}, {9}};
  return s;
}

// In the upsilon2 rule's domain (|N| = 2, T = 1, p1 < p2) with positive
// demand for player 2: player 1's share picks up the negative term
// (p1 - p2) d2 = -1, so PO fails.
inline PISituation upsilon2_witness() {
  PISituation s;
  s.players = {"P1", "P2"};
  s.periods = 1;
  s.demand = {{0}, {1}};
  s.production = {{1}, {2}};
  s.holding = {{}, {}};
  s.backlogging = {{}, {}};
  return s;
}

// Two identical players, one period: c({i}) = 1, c(N) = 2, everyone
// inessential. Dumping c(N) on player 1 breaks IR, IE and PM.
inline PISituation identical_pair() {
  PISituation s;
  s.players = {"P1", "P2"};
  s.periods = 1;
  s.demand = {{1}, {1}};
  s.production = {{1}, {1}};
  s.holding = {{}, {}};
  s.backlogging = {{}, {}};
  return s;
}

inline TUGame game_from_values(int n, std::vector<std::pair<Mask, Rat>> entries) {
  TUGame g = make_game(default_player_names(n));
  for (auto& [m, v] : entries) g.values[m] = v;
  return g;
}

}  // namespace fixtures
