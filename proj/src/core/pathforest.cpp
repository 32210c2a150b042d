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

#include "cotsum/pathforest.hpp"

#include <functional>

namespace cotsum {

namespace {

void check_nm(int n, int m) {
  require(n >= 1, ErrorCode::BadDimension, "n must be >= 1");
  require(m >= 0, ErrorCode::InvalidArgument, "m must be >= 0");
}

Rational up_weight(int n, int level) { return Rational(Integer(n - level), Integer(2 * level - 1)); }
Rational down_weight(int n, int level) { return Rational(Integer(n + level), Integer(2 * level + 1)); }

Tree make_node(Tree firstborn, Tree other) {
  auto node = std::make_shared<TreeNode>();
  node->firstborn = std::move(firstborn);
  node->other = std::move(other);
  return node;
}

void collect_paths(const Tree& t, int firstborns, std::vector<int>& out) {
  if (t->is_leaf()) {
    out.push_back(firstborns);
    return;
  }
  if (t->other) collect_paths(t->other, firstborns, out);
  if (t->firstborn) collect_paths(t->firstborn, firstborns + 1, out);
}

bool leaves_have_brothers(const Tree& t) {
  const bool pair = t->firstborn && t->other;
  for (const Tree& child : {t->firstborn, t->other}) {
    if (!child) continue;
    if (child->is_leaf() && !pair) return false;
    if (!leaves_have_brothers(child)) return false;
  }
  return true;
}

// Tr(J B^l) for even l, read from a d-table row.
const Rational& jb(const std::vector<Rational>& row, int l) { return row[static_cast<std::size_t>(l / 2)]; }

// Even exponents l with sum total, each placed in `slots` positions.
void for_each_even_split(int slots, int total, std::vector<int>& current,
                         const std::function<void(const std::vector<int>&)>& visit) {
  if (slots == 0) {
    if (total == 0) visit(current);
    return;
  }
  for (int l = 0; l <= total; l += 2) {
    current.push_back(l);
    for_each_even_split(slots - 1, total - l, current, visit);
    current.pop_back();
  }
}

void check_forest_args(int m, int k, int n) {
  require(n >= 1, ErrorCode::BadDimension, "n must be >= 1");
  require(k >= 1 && k <= m, ErrorCode::InvalidArgument, "forest degree k must satisfy 1 <= k <= m");
  require((m - k) % 2 == 0, ErrorCode::ParityMismatch, "m and k must have the same parity");
}

}  // namespace

std::vector<std::vector<Rational>> d_table(int max_n, int max_m) {
  check_nm(max_n, max_m);
  std::vector<std::vector<Rational>> d(static_cast<std::size_t>(max_n) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(max_m) + 1));
  d[1][0] = 1;
  for (int n = 2; n <= max_n; ++n) {
    auto& row = d[static_cast<std::size_t>(n)];
    const auto& prev = d[static_cast<std::size_t>(n - 1)];
    row[0] = n;
    for (int m = 1; m <= max_m; ++m) {
      Rational acc = prev[static_cast<std::size_t>(m)];
      for (int k = 0; k < m; ++k) acc += prev[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(m - k - 1)];
      row[static_cast<std::size_t>(m)] = acc;
    }
  }
  return d;
}

Rational d_recurrence(int n, int m) {
  check_nm(n, m);
  return d_table(n, m)[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

std::string DyckPath::str() const {
  std::string out;
  for (Step s : steps) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

std::vector<DyckPath> dyck_paths(int m) {
  require(m >= 0, ErrorCode::InvalidArgument, "m must be >= 0");
  require(m <= kMaxDyckSemilength, ErrorCode::TooLarge, "Dyck enumeration is limited to m <= 14");
  std::vector<DyckPath> out;
  DyckPath current;
  std::function<void(int, int)> walk = [&](int ups, int level) {
    if (static_cast<int>(current.steps.size()) == 2 * m) {
      out.push_back(current);
      return;
    }
    if (ups < m) {
      current.steps.push_back(Step::Up);
      walk(ups + 1, level + 1);
      current.steps.pop_back();
    }
    if (level > 0) {
      current.steps.push_back(Step::Down);
      walk(ups, level - 1);
      current.steps.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

std::vector<WeightedDyckPath> weighted_dyck_paths(int n, int m) {
  check_nm(n, m);
  std::vector<WeightedDyckPath> out;
  for (DyckPath& path : dyck_paths(m)) {
    WeightedDyckPath wp{std::move(path), {}, Rational(1)};
    int level = 0;
    for (Step s : wp.path.steps) {
      const Rational f = s == Step::Up ? up_weight(n, ++level) : down_weight(n, level--);
      wp.factors.push_back(f);
      wp.weight *= f;
    }
    out.push_back(std::move(wp));
  }
  return out;
}

Rational d_dyck(int n, int m) {
  Rational total;
  for (const WeightedDyckPath& wp : weighted_dyck_paths(n, m)) total += wp.weight;
  return total * Rational(n);
}

std::string tree_str(const Tree& tree) {
  if (tree->is_leaf()) return "o";
  if (!tree->other) return "[" + tree_str(tree->firstborn) + "]";
  return "(" + tree_str(tree->other) + ", *" + tree_str(tree->firstborn) + ")";
}

int tree_leaves(const Tree& tree) {
  if (tree->is_leaf()) return 1;
  return (tree->firstborn ? tree_leaves(tree->firstborn) : 0) + (tree->other ? tree_leaves(tree->other) : 0);
}

std::vector<int> tree_path_firstborns(const Tree& tree) {
  std::vector<int> out;
  collect_paths(tree, 0, out);
  return out;
}

bool tree_is_admissible(const Tree& tree, int n) {
  if (!leaves_have_brothers(tree)) return false;
  for (int r : tree_path_firstborns(tree))
    if (r > n - 1) return false;
  return true;
}

Rational tree_weight(const Tree& tree, int n) {
  Rational w(1);
  for (int r : tree_path_firstborns(tree)) w *= Rational(n - r);
  return w;
}

std::vector<Tree> enumerate_trees(int n, int m) {
  require(m >= 1, ErrorCode::InvalidArgument, "trees need m >= 1 leaves");
  require(m <= kMaxTreeLeaves, ErrorCode::TooLarge, "tree enumeration is limited to m <= 8");
  if (n < 1) return {};
  if (m == 1) return {std::make_shared<TreeNode>()};
  if (n == 1) return {};
  std::vector<Tree> out;
  for (const Tree& t : enumerate_trees(n - 1, m)) out.push_back(make_node(t, nullptr));
  for (int k = 1; k < m; ++k) {
    const std::vector<Tree> firstborns = enumerate_trees(n - 1, k);
    if (firstborns.empty()) continue;
    for (const Tree& o : enumerate_trees(n, m - k))
      for (const Tree& f : firstborns) out.push_back(make_node(f, o));
  }
  return out;
}

Rational e_trees(int n, int m) {
  require(n >= 1, ErrorCode::BadDimension, "n must be >= 1");
  Rational total;
  for (const Tree& t : enumerate_trees(n, m)) {
    require(tree_is_admissible(t, n) && tree_leaves(t) == m, ErrorCode::Internal, "e_trees: inadmissible tree built");
    total += tree_weight(t, n);
  }
  return total;
}

Rational p_forest(int m, int k, int n) {
  check_forest_args(m, k, n);
  const int free = m - k;
  const std::vector<Rational> row = d_table(n, free / 2)[static_cast<std::size_t>(n)];
  Rational total;
  for (int s = 0; s <= free; s += 2) {
    // s = l_0 + l_k splits in s + 1 ways.
    Rational inner;
    std::vector<int> current;
    for_each_even_split(k - 1, free - s, current, [&](const std::vector<int>& ls) {
      Rational prod(1);
      for (int l : ls) prod *= jb(row, l);
      inner += prod;
    });
    total += Rational(s + 1) * jb(row, s) * inner;
  }
  return total;
}

Rational p_forest_enumerated(int m, int k, int n) {
  check_forest_args(m, k, n);
  require(m <= kMaxForestSize, ErrorCode::TooLarge, "forest enumeration is limited to m <= 9");
  const int free = m - k;
  Rational total;
  for (int s = 0; s <= free; s += 2) {
    std::vector<int> current;
    for_each_even_split(k - 1, free - s, current, [&](const std::vector<int>& ls) {
      // One tree per J: the one across the cut carries l_0 + l_k.
      std::vector<std::vector<Tree>> slots;
      slots.push_back(enumerate_trees(n, s / 2 + 1));
      for (int l : ls) slots.push_back(enumerate_trees(n, l / 2 + 1));
      for (const auto& slot : slots)
        if (slot.empty()) return;
      std::vector<std::size_t> pick(slots.size(), 0);
      while (true) {
        Rational w(1);
        for (std::size_t i = 0; i < slots.size(); ++i) w *= tree_weight(slots[i][pick[i]], n);
        total += Rational(s + 1) * w;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == slots[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    });
  }
  return total;
}

Rational trace_B_alternating(int n, int m) {
  check_nm(n, m);
  const std::vector<Rational> row = d_table(n, std::max(m - 1, 0))[static_cast<std::size_t>(n)];
  Rational total;
  for (int i = 0; i <= m; ++i) {
    const int j = m - 1 - i;
    const Rational d = j < 0 ? Rational(1) : row[static_cast<std::size_t>(j)];
    total += i % 2 == 0 ? d : -d;
  }
  return total * Rational(n);
}

}  // namespace cotsum
