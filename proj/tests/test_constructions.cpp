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

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pigames/pigames.hpp"

using namespace pigames;
using fixtures::game_from_values;

TEST_CASE("summing a situation with itself doubles the game") {
  const PISituation sit = fixtures::ex1();
  const PISituation combined = sum_situations(sit, sit);
  CHECK(combined.periods == 5);
  const TUGame g = build_game(combined);
  CHECK(g.value(Mask{0b01}) == 4);
  CHECK(g.value(Mask{0b10}) == 4);
  CHECK(g.value(Mask{0b11}) == 6);
}

TEST_CASE("summing with a zero-demand block changes nothing") {
  const PISituation sit = fixtures::ex1();
  PISituation zero = sit;
  zero.demand = {{0, 0}, {0, 0}};
  const TUGame g = build_game(sum_situations(sit, zero));
  CHECK(g.values == build_game(sit).values);
}

TEST_CASE("sum closure holds coalition-wise on random pairs") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    GenOptions opt;
    opt.min_players = opt.max_players = std::uniform_int_distribution<int>(1, 4)(rng);
    const PISituation a = random_situation(rng, opt);
    const PISituation b = random_situation(rng, opt);
    const TUGame sum = build_game(sum_situations(a, b));
    const TUGame expected = add_games(build_game(a), build_game(b));
    REQUIRE(sum.values == expected.values);
  }
}

TEST_CASE("sum requires matching player lists") {
  PISituation other = fixtures::ex1();
  other.players = {"Q1", "Q2"};
  CHECK_THROWS_AS(sum_situations(fixtures::ex1(), other), std::invalid_argument);
}

TEST_CASE("game predicates") {
  SECTION("the example game is not simple") {
    CHECK(!is_simple(build_game(fixtures::ex1())));
  }
  SECTION("a veto game") {
    const TUGame g = game_from_values(2, {{0b01, 1}, {0b11, 1}});
    CHECK(is_simple(g));
    CHECK(veto_players(g) == std::vector<int>{0});
    CHECK(is_veto(g));
    CHECK(is_zero_monotone(g));  // normalized values are all zero
  }
  SECTION("no veto player") {
    const TUGame g = game_from_values(2, {{0b01, 1}, {0b10, 1}, {0b11, 1}});
    CHECK(veto_players(g).empty());
  }
  SECTION("0-monotonicity fails when a superset costs more after normalization") {
    // c({1}) = 0 but c({1,2}) = 1: cooperation raises the normalized cost
    const TUGame g = game_from_values(2, {{0b11, 1}});
    CHECK(!is_zero_monotone(g));
  }
}

TEST_CASE("veto construction on a two-player game") {
  const TUGame g = game_from_values(2, {{0b01, 1}, {0b11, 1}});
  const PISituation sit = veto_game_to_situation(g);
  CHECK(sit.periods == 2);  // one maximal value-1 coalition: {1,2}
  CHECK(sit.demand[0][1] == 1);  // the veto player demands in the last period
  CHECK(sit.demand[1] == std::vector<long long>{0, 0});
  CHECK(build_game(sit).values == g.values);
}

TEST_CASE("veto construction on the zero game") {
  const TUGame g = make_game(default_player_names(3));
  const PISituation sit = veto_game_to_situation(g);
  CHECK(sit.periods == 1);
  for (int i = 0; i < 3; ++i) CHECK(sit.demand[i] == std::vector<long long>{0});
  CHECK(build_game(sit).values == g.values);
}

TEST_CASE("veto construction names its failed precondition") {
  SECTION("not simple") {
    const TUGame g = game_from_values(2, {{0b01, 3}});
    CHECK_THROWS_WITH(veto_game_to_situation(g), Catch::Matchers::ContainsSubstring("simple"));
  }
  SECTION("no veto player") {
    const TUGame g = game_from_values(2, {{0b01, 1}, {0b10, 1}, {0b11, 1}});
    CHECK_THROWS_WITH(veto_game_to_situation(g), Catch::Matchers::ContainsSubstring("veto"));
  }
  SECTION("not 0-monotone") {
    const TUGame g =
        game_from_values(3, {{0b001, 1}, {0b101, 1}, {0b111, 1}});  // c({1,2}) = 0 breaks it
    CHECK(is_simple(g));
    CHECK(!veto_players(g).empty());
    CHECK_THROWS_WITH(veto_game_to_situation(g),
                      Catch::Matchers::ContainsSubstring("0-monotone"));
  }
}

TEST_CASE("veto round-trip is exact for every qualifying game on n <= 3") {
  for (int n = 2; n <= 3; ++n) {
    const Mask coalitions = (Mask{1} << n) - 1;
    const std::size_t tables = std::size_t{1} << coalitions;
    std::size_t qualifying = 0;
    for (std::size_t bits = 0; bits < tables; ++bits) {
      TUGame g = make_game(default_player_names(n));
      for (Mask m = 1; m <= coalitions; ++m)
        if ((bits >> (m - 1)) & 1) g.values[m] = 1;
      if (!is_veto(g) || !is_zero_monotone(g)) continue;
      ++qualifying;
      REQUIRE(build_game(veto_game_to_situation(g)).values == g.values);
    }
    REQUIRE(qualifying > 1);
  }
}

TEST_CASE("concavity check") {
  SECTION("the example game is concave") {
    CHECK(is_concave(build_game(fixtures::ex1())));
  }
  SECTION("a non-concave game with its witness") {
    const TUGame g = game_from_values(2, {{0b01, 1}, {0b10, 1}, {0b11, 3}});
    const auto w = concavity_violation(g);
    REQUIRE(w.has_value());
    // adding player 2 to {1} costs 2, adding it to the empty set costs 1
    CHECK(w->player == 1);
    CHECK(w->small == 0);
    CHECK(w->big == 0b01);
    // the witness re-checks as a violation
    const Mask bit = Mask{1} << w->player;
    CHECK(g.values[w->small | bit] - g.values[w->small] <
          g.values[w->big | bit] - g.values[w->big]);
  }
  SECTION("additive games are concave") {
    TUGame g = make_game(default_player_names(3));
    const std::vector<Rat> a = {Rat(1), Rat(5, 2), Rat(4)};
    for (Mask m = 1; m < 8; ++m)
      for (int i = 0; i < 3; ++i)
        if ((m >> i) & 1) g.values[m] += a[i];
    CHECK(is_concave(g));
  }
}

TEST_CASE("shapley value") {
  SECTION("worked example splits the synergy evenly") {
    CHECK(shapley(build_game(fixtures::ex1())) == Allocation{Rat(3, 2), Rat(3, 2)});
  }
  SECTION("symmetric games get equal shares") {
    const TUGame g = game_from_values(3, {{0b001, 2}, {0b010, 2}, {0b100, 2},
                                          {0b011, 3}, {0b101, 3}, {0b110, 3},
                                          {0b111, 4}});
    CHECK(shapley(g) == Allocation{Rat(4, 3), Rat(4, 3), Rat(4, 3)});
  }
  SECTION("additive games return the summands") {
    TUGame g = make_game(default_player_names(3));
    const std::vector<Rat> a = {Rat(1), Rat(5, 2), Rat(4)};
    for (Mask m = 1; m < 8; ++m)
      for (int i = 0; i < 3; ++i)
        if ((m >> i) & 1) g.values[m] += a[i];
    CHECK(shapley(g) == a);
  }
  SECTION("efficiency on random concave games") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
      const TUGame g = random_concave_game(rng, 4);
      const Allocation sv = shapley(g);
      Rat total = 0;
      for (const Rat& v : sv) total += v;
      REQUIRE(total == g.grand_value());
    }
  }
}

TEST_CASE("shapley pmas of the worked example") {
  const Pmas scheme = shapley_pmas(build_game(fixtures::ex1()));
  CHECK(scheme.scheme[0b01] == Allocation{Rat(2)});
  CHECK(scheme.scheme[0b10] == Allocation{Rat(2)});
  CHECK(scheme.scheme[0b11] == Allocation{Rat(3, 2), Rat(3, 2)});
}

TEST_CASE("shapley pmas rejects bad inputs") {
  SECTION("non-concave, witness in the message") {
    const TUGame g = game_from_values(2, {{0b01, 1}, {0b10, 1}, {0b11, 3}});
    CHECK_THROWS_WITH(shapley_pmas(g), Catch::Matchers::ContainsSubstring("concave"));
  }
  SECTION("negative value") {
    const TUGame g = game_from_values(2, {{0b01, -1}});
    CHECK_THROWS_WITH(shapley_pmas(g), Catch::Matchers::ContainsSubstring("non-negative"));
  }
}

TEST_CASE("shapley pmas of a one-player game") {
  const TUGame g = game_from_values(1, {{0b1, Rat(7, 3)}});
  const Pmas scheme = shapley_pmas(g);
  CHECK(scheme.scheme[1] == Allocation{Rat(7, 3)});
}

TEST_CASE("random concave games: generator honest, scheme valid, shapley in core") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const TUGame g = random_concave_game(rng, n);
    REQUIRE(is_concave(g));  // cross-validates the generator family
    for (std::size_t m = 1; m < g.values.size(); ++m) REQUIRE(g.values[m] >= 0);
    const Pmas scheme = shapley_pmas(g);
    REQUIRE(!pmas_violation(g, scheme).has_value());
    REQUIRE(in_core(g, shapley(g)).in_core);
  }
}
