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

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pigames/coalition.hpp"
#include "pigames/game.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"

namespace pigames {

using nlohmann::json;

namespace io_detail {

// SAX builder that stores every float literal as its unparsed string, so
// "0.1" can be read as exactly 1/10 instead of the nearest double.
class ExactNumberSax {
 public:
  using string_t = std::string;
  using binary_t = json::binary_t;
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;

  json result;

  bool null() { return emplace(nullptr); }
  bool boolean(bool v) { return emplace(v); }
  bool number_integer(number_integer_t v) { return emplace(v); }
  bool number_unsigned(number_unsigned_t v) { return emplace(v); }
  bool number_float(number_float_t, const string_t& raw) { return emplace(raw); }
  bool string(string_t& v) { return emplace(v); }
  bool binary(binary_t& v) { return emplace(v); }

  bool start_object(std::size_t) {
    stack_.push_back(place(json::object()));
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    have_key_ = true;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(place(json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const json::exception& ex) {
    throw std::runtime_error("JSON parse error at byte " + std::to_string(pos) + ": " +
                             ex.what());
  }

 private:
  template <typename T>
  bool emplace(T&& v) {
    place(json(std::forward<T>(v)));
    return true;
  }

  json* place(json v) {
    if (stack_.empty()) {
      result = std::move(v);
      return &result;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    if (!have_key_) throw std::logic_error("object value without key");
    have_key_ = false;
    return &(top[key_] = std::move(v));
  }

  std::vector<json*> stack_;
  std::string key_;
  bool have_key_ = false;
};

}  // namespace io_detail

/// Parses JSON text with float literals preserved as strings.
inline json parse_json_exact(const std::string& text) {
  io_detail::ExactNumberSax sax;
  json::sax_parse(text, &sax);
  return std::move(sax.result);
}

inline Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<json::number_integer_t>()));
  if (j.is_number_unsigned())
    return Rat(Int(std::to_string(j.get<json::number_unsigned_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw std::invalid_argument(
        "float value reached the exact parser; use parse_json_exact or a string");
  throw std::invalid_argument("expected a number or a rational string, got " + j.dump());
}

/// Integral rationals become JSON integers; everything else a "num/den"
/// string. Lossless both ways.
inline json rational_to_json(const Rat& r) {
  if (is_integer(r)) {
    const Int& num = numerator(r);
    if (num >= std::numeric_limits<json::number_integer_t>::min() &&
        num <= std::numeric_limits<json::number_integer_t>::max())
      return static_cast<json::number_integer_t>(num);
  }
  return to_string(r);
}

namespace io_detail {

inline std::vector<std::vector<Rat>> matrix_from_json(const json& j, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string(name) + " must be an array of rows");
  std::vector<std::vector<Rat>> out;
  for (const json& row : j) {
    if (!row.is_array())
      throw std::invalid_argument(std::string(name) + " rows must be arrays");
    std::vector<Rat> r;
    r.reserve(row.size());
    for (const json& cell : row) r.push_back(rational_from_json(cell));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace io_detail

inline RawSituation situation_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("situation file must hold a JSON object");
  for (const char* field : {"players", "T", "demand", "production", "holding", "backlogging"})
    if (!j.contains(field))
      throw std::invalid_argument(std::string("situation is missing field '") + field + "'");
  RawSituation raw;
  raw.players = j.at("players").get<std::vector<std::string>>();
  if (!j.at("T").is_number_integer() && !j.at("T").is_number_unsigned())
    throw std::invalid_argument("field 'T' must be an integer");
  raw.periods = j.at("T").get<int>();
  raw.demand = io_detail::matrix_from_json(j.at("demand"), "demand");
  raw.production = io_detail::matrix_from_json(j.at("production"), "production");
  raw.holding = io_detail::matrix_from_json(j.at("holding"), "holding");
  raw.backlogging = io_detail::matrix_from_json(j.at("backlogging"), "backlogging");
  return raw;
}

inline json situation_to_json(const PISituation& sit) {
  json j;
  j["players"] = sit.players;
  j["T"] = sit.periods;
  auto rows = [](const std::vector<std::vector<Rat>>& m) {
    json out = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const Rat& v : row) r.push_back(rational_to_json(v));
      out.push_back(std::move(r));
    }
    return out;
  };
  json d = json::array();
  for (const auto& row : sit.demand) d.push_back(row);
  j["demand"] = std::move(d);
  j["production"] = rows(sit.production);
  j["holding"] = rows(sit.holding);
  j["backlogging"] = rows(sit.backlogging);
  return j;
}

/// Coalition key "1,3" with 1-based player indices.
inline std::string coalition_key(const Coalition& s) {
  std::string key;
  for (int i : s.members()) {
    if (!key.empty()) key += ",";
    key += std::to_string(i + 1);
  }
  return key;
}

inline Mask coalition_mask_from_key(const std::string& key, int n) {
  Mask m = 0;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int idx = std::stoi(tok);
    if (idx < 1 || idx > n)
      throw std::invalid_argument("coalition key '" + key + "' references player " + tok +
                                  " outside 1.." + std::to_string(n));
    m |= Mask{1} << (idx - 1);
  }
  if (m == 0) throw std::invalid_argument("empty coalition key");
  return m;
}

inline TUGame game_from_json(const json& j) {
  if (!j.is_object() || !j.contains("players") || !j.contains("values"))
    throw std::invalid_argument("game file must hold {\"players\": [...], \"values\": {...}}");
  TUGame g = make_game(j.at("players").get<std::vector<std::string>>());
  const int n = g.player_count();
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (const auto& [key, value] : j.at("values").items()) {
    const Mask m = coalition_mask_from_key(key, n);
    if (seen[m]) throw std::invalid_argument("duplicate coalition key '" + key + "'");
    seen[m] = true;
    g.values[m] = rational_from_json(value);
  }
  for (Mask m = 1; m < (Mask{1} << n); ++m)
    if (!seen[m])
      throw std::invalid_argument("game table is incomplete: missing coalition " +
                                  to_string(Coalition(m, n)));
  return g;
}

inline json game_to_json(const TUGame& g) {
  json values = json::object();
  for_each_coalition(g.player_count(), [&](Mask m) {
    values[coalition_key(Coalition(m, g.player_count()))] = rational_to_json(g.values[m]);
  });
  json j;
  j["players"] = g.players;
  j["values"] = std::move(values);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

inline ValidatedSituation load_situation(const std::string& path) {
  return validate(situation_from_json(parse_json_exact(read_file(path))));
}

inline void save_situation(const std::string& path, const PISituation& sit) {
  write_file(path, situation_to_json(sit).dump(2) + "\n");
}

inline TUGame load_game(const std::string& path) {
  return game_from_json(parse_json_exact(read_file(path)));
}

inline void save_game(const std::string& path, const TUGame& g) {
  write_file(path, game_to_json(g).dump(2) + "\n");
}

}  // namespace pigames
