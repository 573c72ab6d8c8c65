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

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pigames {

using Mask = std::uint32_t;

// Coalition tables are dense over 2^n masks, so the player count is capped.
inline constexpr int kMaxPlayers = 24;

/// A nonempty subset of the players {0, ..., n-1}, stored as a bitmask.
class Coalition {
 public:
  Coalition(Mask mask, int universe) : mask_(mask), universe_(universe) {
    if (universe < 1 || universe > kMaxPlayers)
      throw std::invalid_argument("coalition universe out of range");
    if (mask == 0) throw std::invalid_argument("coalition must be nonempty");
    if (mask >= (Mask{1} << universe))
      throw std::invalid_argument("coalition member outside the player set");
  }

  static Coalition full(int n) { return Coalition((Mask{1} << n) - 1, n); }

  static Coalition of(const std::vector<int>& members, int n) {
    Mask m = 0;
    for (int i : members) {
      if (i < 0 || i >= n) throw std::invalid_argument("player index out of range");
      m |= Mask{1} << i;
    }
    return Coalition(m, n);
  }

  Mask mask() const { return mask_; }
  int universe() const { return universe_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int player) const { return (mask_ >> player) & 1; }
  bool subset_of(const Coalition& other) const { return (mask_ & ~other.mask_) == 0; }
  bool is_full() const { return mask_ == (Mask{1} << universe_) - 1; }

  Coalition without(int player) const {
    return Coalition(mask_ & ~(Mask{1} << player), universe_);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < universe_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  Mask mask_;
  int universe_;
};

/// Canonical coalition order: by size, then lexicographically on the
/// ascending member sequence. Used everywhere a deterministic sweep or a
/// "first violation" is reported.
inline bool coalition_before(Mask a, Mask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  Mask diff = a ^ b;
  Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

/// Yields the 2^n - 1 nonempty coalitions in canonical order without
/// materializing them.
class CoalitionRange {
 public:
  explicit CoalitionRange(int n) : n_(n) {
    if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
  }

  /// Returns the next coalition, or nullopt-style false when exhausted.
  bool next(Mask& out) {
    if (size_ > n_) return false;
    if (combo_.empty()) {
      combo_.resize(size_);
      for (int i = 0; i < size_; ++i) combo_[i] = i;
    }
    out = 0;
    for (int i : combo_) out |= Mask{1} << i;
    advance();
    return true;
  }

 private:
  void advance() {
    int s = size_;
    int i = s - 1;
    while (i >= 0 && combo_[i] == n_ - s + i) --i;
    if (i < 0) {
      ++size_;
      combo_.clear();
      return;
    }
    ++combo_[i];
    for (int j = i + 1; j < s; ++j) combo_[j] = combo_[j - 1] + 1;
  }

  int n_;
  int size_ = 1;
  std::vector<int> combo_;
};

inline void for_each_coalition(int n, const std::function<void(Mask)>& fn) {
  CoalitionRange range(n);
  Mask m;
  while (range.next(m)) fn(m);
}

inline std::vector<Coalition> all_coalitions(int n) {
  if (n > 20) throw std::invalid_argument("refusing to materialize > 2^20 coalitions");
  std::vector<Coalition> out;
  out.reserve((std::size_t{1} << n) - 1);
  for_each_coalition(n, [&](Mask m) { out.emplace_back(m, n); });
  return out;
}

/// "{1,3}" with 1-based indices, matching the CLI convention.
inline std::string to_string(const Coalition& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i + 1);
  }
  return out + "}";
}

}  // namespace pigames
