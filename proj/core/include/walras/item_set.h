// Copyright 2026 The Walras Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALRAS_ITEM_SET_H_
#define WALRAS_ITEM_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace walras {

// Hard limit on the number of items an ItemSet can index. Exhaustive
// procedures impose much smaller limits through Caps.
inline constexpr int kMaxItems = 64;

// A subset of the items {0, ..., m-1} stored as a 64-bit mask. The universe
// size m is carried by the owning Market; the set itself is just bits.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ItemSet Empty() { return ItemSet(); }
  static constexpr ItemSet Singleton(int item) {
    return ItemSet(std::uint64_t{1} << item);
  }
  // All of {0, ..., m-1}.
  static constexpr ItemSet Full(int m) {
    return ItemSet(m >= 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << m) - 1);
  }
  static ItemSet FromIndices(const std::vector<int>& items) {
    ItemSet s;
    for (int j : items) s = s.With(j);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int item) const { return (bits_ >> item) & 1U; }
  constexpr bool IsSubsetOf(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ItemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest item index; undefined on the empty set.
  constexpr int First() const { return std::countr_zero(bits_); }

  constexpr ItemSet With(int item) const {
    return ItemSet(bits_ | (std::uint64_t{1} << item));
  }
  constexpr ItemSet Without(int item) const {
    return ItemSet(bits_ & ~(std::uint64_t{1} << item));
  }
  constexpr ItemSet Complement(int m) const {
    return ItemSet(~bits_ & Full(m).bits_);
  }

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ | b.bits_);
  }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ItemSet, ItemSet) = default;
  // Canonical order: ascending mask value.
  friend constexpr auto operator<=>(ItemSet a, ItemSet b) {
    return a.bits_ <=> b.bits_;
  }

  std::vector<int> Indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // "{0,2,5}"
  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    for (int j : Indices()) {
      if (!first) out += ",";
      out += std::to_string(j);
      first = false;
    }
    return out + "}";
  }

  // Calls fn(item) for each member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Calls fn(sub) for every subset of `within`, in ascending mask order,
// starting with the empty set. Stops early if fn returns false.
template <typename Fn>
void ForEachSubset(ItemSet within, Fn&& fn) {
  const std::uint64_t w = within.bits();
  std::uint64_t sub = 0;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(ItemSet(sub))), bool>) {
      if (!fn(ItemSet(sub))) return;
    } else {
      fn(ItemSet(sub));
    }
    if (sub == w) return;
    sub = (sub - w) & w;
  }
}

}  // namespace walras

#endif  // WALRAS_ITEM_SET_H_
