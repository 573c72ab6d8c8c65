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

TEST_CASE("owen point of the worked example") {
  CHECK(owen_point(fixtures::ex1()) == Allocation{Rat(1), Rat(2)});
  // same game, different situation, different Owen point
  CHECK(owen_point(fixtures::ex1_prime()) == Allocation{Rat(2), Rat(1)});
}

TEST_CASE("zero-demand players are allocated zero") {
  PISituation sit = fixtures::ex1();
  sit.demand[0] = {0, 0};
  CHECK(owen_point(sit)[0] == 0);
}

TEST_CASE("core membership on the worked example") {
  const TUGame g = build_game(fixtures::ex1());

  SECTION("the Owen point is in the core") {
    const CoreCheck c = in_core(g, {Rat(1), Rat(2)});
    CHECK(c.in_core);
    CHECK(!c.violation.has_value());
  }
  SECTION("an allocation overcharging player 2") {
    const CoreCheck c = in_core(g, {Rat(0), Rat(3)});
    CHECK(!c.in_core);
    REQUIRE(c.violation.has_value());
    CHECK(c.violation->mask() == 0b10);  // {2}: 3 > c({2}) = 2
  }
  SECTION("inefficiency is blamed on the grand coalition") {
    const CoreCheck c = in_core(g, {Rat(1), Rat(1)});
    CHECK(!c.in_core);
    REQUIRE(c.violation.has_value());
    CHECK(c.violation->is_full());
  }
  SECTION("the first violation in canonical order is reported") {
    const CoreCheck c = in_core(g, {Rat(5, 2), Rat(1, 2)});  // both singletons ok? {1}: 5/2 > 2
    REQUIRE(!c.in_core);
    CHECK(c.violation->mask() == 0b01);
  }
}

TEST_CASE("owen point lies in the core of random games") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const PISituation sit = random_situation(rng);
    const TUGame g = build_game(sit);
    const Allocation o = owen_point(sit);
    Rat total = 0;
    for (const Rat& v : o) total += v;
    REQUIRE(total == g.grand_value());
    REQUIRE(in_core(g, o).in_core);
  }
}

TEST_CASE("pmas of the worked example") {
  const Pmas scheme = pmas(fixtures::ex1());
  CHECK(scheme.scheme[0b01] == Allocation{Rat(2)});
  CHECK(scheme.scheme[0b10] == Allocation{Rat(2)});
  CHECK(scheme.scheme[0b11] == Allocation{Rat(1), Rat(2)});
  CHECK(!pmas_violation(build_game(fixtures::ex1()), scheme).has_value());
}

TEST_CASE("pmas restricted to the grand coalition is the owen point") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const PISituation sit = random_situation(rng);
    const Pmas scheme = pmas(sit);
    REQUIRE(scheme.scheme.back() == owen_point(sit));
  }
}

TEST_CASE("pmas is efficient and monotone on random situations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const PISituation sit = random_situation(rng);
    REQUIRE(!pmas_violation(build_game(sit), pmas(sit)).has_value());
  }
}

TEST_CASE("pmas violations are caught") {
  const TUGame g = build_game(fixtures::ex1());
  Pmas scheme = pmas(fixtures::ex1());

  SECTION("broken efficiency") {
    scheme.scheme[0b01] = {Rat(1)};
    const auto v = pmas_violation(g, scheme);
    REQUIRE(v.has_value());
    CHECK(v->kind == PmasViolation::Kind::Efficiency);
    CHECK(v->small == 0b01);
  }
  SECTION("broken monotonicity") {
    // player 2 pays more in the grand coalition than alone
    scheme.scheme[0b10] = {Rat(1)};
    scheme.scheme[0b11] = {Rat(0), Rat(3)};
    const auto v = pmas_violation(g, scheme);
    REQUIRE(v.has_value());
    CHECK(v->kind == PmasViolation::Kind::Monotonicity);
    CHECK(v->player == 1);
  }
}

TEST_CASE("essential players of the worked example") {
  const PISituation sit = fixtures::ex1();
  const EssentialReport report = essential_players(sit);
  CHECK(report.essential_set() == std::vector<int>{1});

  // witness re-check: at t = 1, the others' demand is positive and the
  // dual price strictly rises when player 2 leaves
  REQUIRE(report.witness_period[1] == 0);
  const Coalition without2 = Coalition(Mask{1}, 2);
  const CoalitionParams p = aggregate(sit, without2);
  CHECK(p.demand[0] > 0);
  CHECK(dual_solution(p)[0] > dual_solution(sit, Coalition::full(2))[0]);
}

TEST_CASE("identical cost rows make every player inessential") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const PISituation sit = identical_cost_situation(rng);
    CHECK(essential_players(sit).essential_set().empty());
    CHECK(core_is_owen_singleton(sit));
  }
}

TEST_CASE("a lone player is inessential by convention") {
  PISituation sit;
  sit.players = {"A"};
  sit.periods = 1;
  sit.demand = {{2}};
  sit.production = {{Rat(3)}};
  sit.holding = {{}};
  sit.backlogging = {{}};
  CHECK(essential_players(sit).essential_set().empty());
  CHECK(core_is_owen_singleton(sit));
}

TEST_CASE("removing an inessential player costs exactly its owen share") {
  std::mt19937_64 rng(47);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GenOptions opt;
    opt.min_players = 2;
    const PISituation sit = random_situation(rng, opt);
    const int n = sit.player_count();
    const EssentialReport report = essential_players(sit);
    const Allocation o = owen_point(sit);
    for (int i = 0; i < n; ++i) {
      if (report.essential[i]) continue;
      ++seen;
      Rat rest = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) rest += o[j];
      REQUIRE(rest == char_value(sit, Coalition::full(n).without(i)));
    }
  }
  REQUIRE(seen > 50);  // the corpus actually exercises the identity
}

TEST_CASE("when all players are inessential, perturbations leave the core") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const PISituation sit = identical_cost_situation(rng);
    const int n = sit.player_count();
    REQUIRE(core_is_owen_singleton(sit));
    const TUGame g = build_game(sit);
    const Allocation o = owen_point(sit);
    for (const Rat eps : {Rat(1), Rat(1, 3)}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          Allocation x = o;
          x[i] += eps;
          x[j] -= eps;
          REQUIRE(!in_core(g, x).in_core);
        }
      }
    }
  }
}

TEST_CASE("essential players leave room next to the owen point") {
  // with an essential player the core keeps allocations other than the
  // Owen point; here (3/2, 3/2) also sits in the core of the example game
  const TUGame g = build_game(fixtures::ex1());
  CHECK(!core_is_owen_singleton(fixtures::ex1()));
  CHECK(in_core(g, {Rat(3, 2), Rat(3, 2)}).in_core);
}
