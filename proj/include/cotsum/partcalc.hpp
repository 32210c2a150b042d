// Copyright 2026 The cotsum Authors
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

#ifndef COTSUM_PARTCALC_HPP
#define COTSUM_PARTCALC_HPP

#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cotsum/numkernel.hpp"

namespace cotsum {

inline constexpr int kMaxEnumeratedPartitionSize = 13;
inline constexpr int kMaxShapePartitionSize = 40;

/// A partition of {1..m} into disjoint nonempty blocks. Blocks are listed by
/// their smallest element and each block is sorted.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  std::vector<int> block_sizes() const;
  bool all_blocks_odd() const;
  std::string str() const;
};

/// Lazily enumerates the set partitions of {1..m} in restricted-growth-string
/// order, optionally keeping only partitions whose blocks all have odd size.
class SetPartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPartition*;
    using reference = const SetPartition&;

    iterator() = default;
    iterator(int m, bool odd_only);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    bool advance();
    void materialize();

    int m_ = 0;
    bool odd_only_ = false;
    bool done_ = true;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
    SetPartition current_;
  };

  SetPartitionRange(int m, bool odd_only) : m_(m), odd_only_(odd_only) {}

  iterator begin() const { return iterator(m_, odd_only_); }
  iterator end() const { return iterator(); }

 private:
  int m_;
  bool odd_only_;
};

/// Every partition of {1..m}; TooLarge when m > 13.
SetPartitionRange set_partitions(int m);
/// Partitions with odd block sizes only; TooLarge when m > 13.
SetPartitionRange odd_partitions(int m);

/// mu(0, nu) = prod over blocks of (-1)^(|B|-1) (|B|-1)!.
Integer mobius_bottom(const SetPartition& partition);

/// An integer partition of m together with the number of set partitions of
/// {1..m} whose block sizes form it.
struct PartitionShape {
  std::vector<int> parts;  // non-increasing
  Integer count;
};

/// m! / (prod parts! * prod multiplicities!).
Integer shape_count(std::span<const int> parts);

/// All shapes of m, or only those with odd parts; m <= 40.
std::vector<PartitionShape> partition_shapes(int m, bool odd_only = false);
std::vector<PartitionShape> odd_shapes(int m);

enum class PartitionRoute { Enumeration, Shapes };

PartitionRoute parse_partition_route(std::string_view name);

/// Composition of exponential generating functions on coefficient sequences:
///   c_m = sum over partitions nu of {1..m} of outer[|nu|] * prod_B inner[|B|]
/// so that F_c = F_outer(F_inner). Sequences are indexed from 1 (index 0 is
/// ignored) and must reach index m.
template <class K>
K faadibruno_compose(std::span<const K> inner, std::span<const K> outer, int m,
                     PartitionRoute route = PartitionRoute::Enumeration) {
  require(m >= 1, ErrorCode::InvalidArgument, "faadibruno_compose: m must be >= 1");
  require(inner.size() > static_cast<std::size_t>(m) && outer.size() > static_cast<std::size_t>(m),
          ErrorCode::InvalidArgument, "faadibruno_compose: sequences too short");
  K total{};
  if (route == PartitionRoute::Enumeration) {
    for (const SetPartition& nu : set_partitions(m)) {
      K term = outer[nu.size()];
      for (const auto& block : nu.blocks) term *= inner[block.size()];
      total += term;
    }
    return total;
  }
  require(m <= kMaxShapePartitionSize, ErrorCode::TooLarge, "faadibruno_compose: m exceeds the shape route limit");
  for (const PartitionShape& shape : partition_shapes(m)) {
    K term = outer[shape.parts.size()];
    for (int part : shape.parts) term *= inner[static_cast<std::size_t>(part)];
    total += term * Rational(shape.count);
  }
  return total;
}

}  // namespace cotsum

#endif  // COTSUM_PARTCALC_HPP
