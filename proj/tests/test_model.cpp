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

#include <set>

#include "fixtures.hpp"
#include "pigames/pigames.hpp"

using namespace pigames;

namespace {

RawSituation raw_ex1() {
  RawSituation raw;
  raw.players = {"P1", "P2"};
  raw.periods = 2;
  raw.demand = {{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
  raw.production = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  raw.holding = {{Rat(1)}, {Rat(2)}};
  raw.backlogging = {{Rat(1)}, {Rat(2)}};
  return raw;
}

bool mentions(const ValidationError& e, const std::string& needle) {
  for (const auto& issue : e.issues())
    if (issue.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-3") == Rat(-3));
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("0.1") == Rat(1, 10));
  CHECK(parse_rational("2.5e-1") == Rat(1, 4));
  CHECK(parse_rational("1e2") == Rat(100));
  CHECK(parse_rational(".5") == Rat(1, 2));
  CHECK(to_string(Rat(3)) == "3");
  CHECK(to_string(Rat(-1, 3)) == "-1/3");

  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("validate accepts the worked example") {
  const ValidatedSituation v = validate(raw_ex1());
  CHECK(v.warnings.empty());
  CHECK(v.situation == fixtures::ex1());
}

TEST_CASE("validate reports every violation") {
  RawSituation raw = raw_ex1();
  raw.demand[0][0] = Rat(-1);
  raw.demand[1][1] = Rat(1, 2);
  raw.production[0][1] = Rat(-3);

  try {
    validate(raw);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(mentions(e, "negative demand"));
    CHECK(mentions(e, "non-integer demand"));
    CHECK(mentions(e, "negative production"));
    CHECK(e.issues().size() == 3);
  }
}

TEST_CASE("validate rejects structural problems") {
  SECTION("duplicate player id") {
    RawSituation raw = raw_ex1();
    raw.players = {"P1", "P1"};
    CHECK_THROWS_AS(validate(raw), ValidationError);
  }
  SECTION("T < 1") {
    RawSituation raw = raw_ex1();
    raw.periods = 0;
    CHECK_THROWS_AS(validate(raw), ValidationError);
  }
  SECTION("dimension mismatch") {
    RawSituation raw = raw_ex1();
    raw.demand[0].push_back(Rat(1));
    CHECK_THROWS_AS(validate(raw), ValidationError);
  }
  SECTION("missing row") {
    RawSituation raw = raw_ex1();
    raw.production.pop_back();
    CHECK_THROWS_AS(validate(raw), ValidationError);
  }
}

TEST_CASE("length-T carrying rows are accepted with a warning") {
  RawSituation raw = raw_ex1();
  raw.holding = {{Rat(1), Rat(7)}, {Rat(2)}};  // period-2 entry is unreachable
  const ValidatedSituation v = validate(raw);
  REQUIRE(v.warnings.size() == 1);
  CHECK(v.warnings[0].find("holding") != std::string::npos);
  CHECK(v.situation == fixtures::ex1());
}

TEST_CASE("restrict extracts rows") {
  const PISituation sit = fixtures::ex1();

  SECTION("single player") {
    const PISituation sub = restrict(sit, Coalition(Mask{1}, 2));
    CHECK(sub.players == std::vector<std::string>{"P1"});
    CHECK(sub.demand == std::vector<std::vector<long long>>{{1, 0}});
    CHECK(sub.production == std::vector<std::vector<Rat>>{{Rat(2), Rat(1)}});
    CHECK(sub.holding == std::vector<std::vector<Rat>>{{Rat(1)}});
    CHECK(sub.backlogging == std::vector<std::vector<Rat>>{{Rat(1)}});
  }
  SECTION("other player") {
    const PISituation sub = restrict(sit, Coalition(Mask{2}, 2));
    CHECK(sub.players == std::vector<std::string>{"P2"});
    CHECK(sub.demand == std::vector<std::vector<long long>>{{0, 2}});
  }
  SECTION("full coalition is the identity") {
    CHECK(restrict(sit, Coalition::full(2)) == sit);
  }
  SECTION("restricting the restriction changes nothing") {
    const PISituation sub = restrict(sit, Coalition(Mask{2}, 2));
    CHECK(restrict(sub, Coalition::full(1)) == sub);
  }
}

TEST_CASE("coalition enumeration is by size then lexicographic") {
  SECTION("n = 1") {
    const auto all = all_coalitions(1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].mask() == 1);
  }
  SECTION("n = 2") {
    const auto all = all_coalitions(2);
    REQUIRE(all.size() == 3);
    CHECK(all[0].mask() == 0b01);
    CHECK(all[1].mask() == 0b10);
    CHECK(all[2].mask() == 0b11);
  }
  SECTION("n = 4 has 15 coalitions, pairs in lex order") {
    const auto all = all_coalitions(4);
    REQUIRE(all.size() == 15);
    // the six pairs: {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}
    const std::vector<Mask> pairs = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    for (int k = 0; k < 6; ++k) CHECK(all[4 + k].mask() == pairs[k]);
  }
  SECTION("enumeration is exhaustive and distinct") {
    for (int n = 1; n <= 10; ++n) {
      std::set<Mask> seen;
      for_each_coalition(n, [&](Mask m) { seen.insert(m); });
      CHECK(seen.size() == (std::size_t{1} << n) - 1);
    }
  }
}

TEST_CASE("coalition basics") {
  const Coalition s = Coalition::of({0, 2}, 3);
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(to_string(s) == "{1,3}");
  CHECK(s.subset_of(Coalition::full(3)));
  CHECK_THROWS_AS(Coalition(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Coalition(0b1000, 3), std::invalid_argument);
}

TEST_CASE("situation json round-trip is exact") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 50; ++trial) {
    const PISituation sit = random_situation(rng);
    const json j = situation_to_json(sit);
    const PISituation back = validate(situation_from_json(parse_json_exact(j.dump()))).situation;
    REQUIRE(back == sit);
  }
}

TEST_CASE("json rationals stay exact") {
  const json j = parse_json_exact(R"({"a": 0.1, "b": "2/3", "c": 4})");
  CHECK(rational_from_json(j.at("a")) == Rat(1, 10));
  CHECK(rational_from_json(j.at("b")) == Rat(2, 3));
  CHECK(rational_from_json(j.at("c")) == Rat(4));
  CHECK(rational_to_json(Rat(4)) == json(4));
  CHECK(rational_to_json(Rat(1, 3)) == json("1/3"));
}

TEST_CASE("game json round-trip and completeness check") {
  const TUGame g = build_game(fixtures::ex1());
  const json j = game_to_json(g);
  CHECK(game_from_json(parse_json_exact(j.dump())) == g);

  json broken = j;
  broken["values"].erase("1,2");
  CHECK_THROWS_AS(game_from_json(broken), std::invalid_argument);

  json dup = j;
  dup["values"]["2,1"] = 5;  // same coalition as "1,2"
  CHECK_THROWS_AS(game_from_json(dup), std::invalid_argument);
}
