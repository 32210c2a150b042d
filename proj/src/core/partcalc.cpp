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

#include "cotsum/partcalc.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cotsum {

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

bool SetPartition::all_blocks_odd() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() % 2 == 1; });
}

std::string SetPartition::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) os << (j ? "," : "") << blocks[i][j];
  }
  os << '}';
  return os.str();
}

SetPartitionRange::iterator::iterator(int m, bool odd_only)
    : m_(m), odd_only_(odd_only), done_(false), rgs_(static_cast<std::size_t>(m), 0),
      prefix_max_(static_cast<std::size_t>(m), 0) {
  materialize();
  if (odd_only_ && !current_.all_blocks_odd()) ++*this;
}

// Next restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
bool SetPartitionRange::iterator::advance() {
  for (int i = m_ - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rgs_[ui] <= prefix_max_[ui - 1]) {
      ++rgs_[ui];
      prefix_max_[ui] = std::max(prefix_max_[ui - 1], rgs_[ui]);
      for (std::size_t j = ui + 1; j < rgs_.size(); ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[ui];
      }
      return true;
    }
  }
  return false;
}

void SetPartitionRange::iterator::materialize() {
  const int blocks = m_ == 0 ? 0 : prefix_max_.back() + 1;
  current_.blocks.assign(static_cast<std::size_t>(blocks), {});
  for (int e = 0; e < m_; ++e) current_.blocks[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(e)])].push_back(e + 1);
}

SetPartitionRange::iterator& SetPartitionRange::iterator::operator++() {
  while (true) {
    if (!advance()) {
      done_ = true;
      current_.blocks.clear();
      return *this;
    }
    materialize();
    if (!odd_only_ || current_.all_blocks_odd()) return *this;
  }
}

namespace {

void check_enumeration_size(int m) {
  require(m >= 1, ErrorCode::InvalidArgument, "set partitions need m >= 1");
  if (m > kMaxEnumeratedPartitionSize)
    raise(ErrorCode::TooLarge, "set partition enumeration is limited to m <= " +
                                   std::to_string(kMaxEnumeratedPartitionSize));
}

void collect_shapes(int remaining, int max_part, bool odd_only, std::vector<int>& parts,
                    std::vector<PartitionShape>& out) {
  if (remaining == 0) {
    out.push_back({parts, shape_count(parts)});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    parts.push_back(p);
    collect_shapes(remaining - p, p, odd_only, parts, out);
    parts.pop_back();
  }
}

}  // namespace

SetPartitionRange set_partitions(int m) {
  check_enumeration_size(m);
  return {m, false};
}

SetPartitionRange odd_partitions(int m) {
  check_enumeration_size(m);
  return {m, true};
}

Integer mobius_bottom(const SetPartition& partition) {
  Integer out = 1;
  for (const auto& block : partition.blocks) {
    const auto size = static_cast<unsigned>(block.size());
    out *= factorial(size - 1);
    if (size % 2 == 0) out = -out;
  }
  return out;
}

Integer shape_count(std::span<const int> parts) {
  int total = 0;
  std::map<int, unsigned> multiplicity;
  for (int p : parts) {
    total += p;
    ++multiplicity[p];
  }
  Integer denominator = 1;
  for (int p : parts) denominator *= factorial(static_cast<unsigned>(p));
  for (const auto& [part, mult] : multiplicity) denominator *= factorial(mult);
  return factorial(static_cast<unsigned>(total)) / denominator;
}

std::vector<PartitionShape> partition_shapes(int m, bool odd_only) {
  require(m >= 1, ErrorCode::InvalidArgument, "partition shapes need m >= 1");
  if (m > kMaxShapePartitionSize)
    raise(ErrorCode::TooLarge, "partition shapes are limited to m <= " + std::to_string(kMaxShapePartitionSize));
  std::vector<PartitionShape> out;
  std::vector<int> parts;
  collect_shapes(m, m, odd_only, parts, out);
  return out;
}

std::vector<PartitionShape> odd_shapes(int m) { return partition_shapes(m, true); }

PartitionRoute parse_partition_route(std::string_view name) {
  if (name == "enumeration") return PartitionRoute::Enumeration;
  if (name == "shapes") return PartitionRoute::Shapes;
  raise(ErrorCode::InvalidArgument, "unknown partition route '" + std::string(name) + "'");
}

}  // namespace cotsum
