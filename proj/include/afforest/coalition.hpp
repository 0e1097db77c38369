/*
 * Copyright 2026 The afforest authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "afforest/errors.hpp"

namespace afforest {

/// Dense node index inside one org_structure. Stable for the structure's
/// lifetime; user-facing string labels map to these at build time.
using node_id = std::uint32_t;

/// Single-word coalitions keep set algebra branch-free; wider node sets are
/// rejected by every operation that has to represent subsets of N.
inline constexpr std::size_t max_coalition_nodes = 64;

/// A subset of the node set [0, n), bit i set iff node i is a member.
/// Width n is fixed at construction; set algebra requires equal widths.
class coalition {
 public:
  coalition() = default;

  explicit coalition(std::size_t n, std::uint64_t bits = 0) : n_(check_width(n)), bits_(bits & mask(n)) {}

  static coalition empty_set(std::size_t n) { return coalition(n); }
  static coalition full_set(std::size_t n) { return coalition(n, mask(n)); }
  static coalition singleton(std::size_t n, node_id i) { return coalition(n).with(i); }

  std::size_t width() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  bool contains(node_id i) const { return i < n_ && (bits_ >> i) & 1u; }

  coalition& insert(node_id i) {
    check_index(i);
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  coalition& erase(node_id i) {
    check_index(i);
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }
  coalition with(node_id i) const { return coalition(*this).insert(i); }
  coalition without(node_id i) const { return coalition(*this).erase(i); }

  bool is_subset_of(const coalition& other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<node_id> members() const {
    std::vector<node_id> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<node_id>(std::countr_zero(b)));
    }
    return out;
  }

  friend coalition operator|(coalition a, const coalition& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend coalition operator&(coalition a, const coalition& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend coalition operator-(coalition a, const coalition& b) {
    a.bits_ &= ~b.bits_;
    return a;
  }
  coalition complement() const { return coalition(n_, ~bits_); }

  friend bool operator==(const coalition& a, const coalition& b) = default;

 private:
  static std::uint64_t mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  static std::size_t check_width(std::size_t n) {
    if (n > max_coalition_nodes) {
      throw error(errc::too_large,
                  "coalitions support at most " + std::to_string(max_coalition_nodes) +
                      " nodes, got " + std::to_string(n));
    }
    return n;
  }
  void check_index(node_id i) const {
    if (i >= n_) {
      throw error(errc::unknown_node,
                  "node index " + std::to_string(i) + " outside [0, " + std::to_string(n_) + ")");
    }
  }

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace afforest
