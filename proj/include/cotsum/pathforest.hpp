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

#ifndef COTSUM_PATHFOREST_HPP
#define COTSUM_PATHFOREST_HPP

#include <memory>
#include <string>
#include <vector>

#include "cotsum/numkernel.hpp"

namespace cotsum {

inline constexpr int kMaxDyckSemilength = 14;
inline constexpr int kMaxTreeLeaves = 8;
inline constexpr int kMaxForestSize = 9;

/// d_(n,m) = Tr(J_n B_n^(2m)) from the two-index recurrence.
Rational d_recurrence(int n, int m);
/// d_(n',m') for 1 <= n' <= max_n and 0 <= m' <= max_m; row 0 is unused.
std::vector<std::vector<Rational>> d_table(int max_n, int max_m);

enum class Step { Up, Down };

struct DyckPath {
  std::vector<Step> steps;
  std::string str() const;  // "UUDD"
};

/// All Dyck paths with 2m steps in lexicographic order (U before D).
std::vector<DyckPath> dyck_paths(int m);

struct WeightedDyckPath {
  DyckPath path;
  std::vector<Rational> factors;  // one per step
  Rational weight;                // product of the factors
};

/// Every Dyck path of length 2m with its step weights for dimension n. An up
/// step to level k weighs (n-k)/(2k-1) and a down step from level k weighs
/// (n+k)/(2k+1).
std::vector<WeightedDyckPath> weighted_dyck_paths(int n, int m);

/// n times the total weight of the Dyck paths of length 2m.
Rational d_dyck(int n, int m);

/// Rooted tree in which every node has at most two children. A lone child is
/// a firstborn; of two children exactly one is the firstborn.
struct TreeNode {
  std::shared_ptr<const TreeNode> firstborn;
  std::shared_ptr<const TreeNode> other;

  bool is_leaf() const { return !firstborn && !other; }
};
using Tree = std::shared_ptr<const TreeNode>;

/// Leaves, in "o" for a leaf, "[t]" for a lone child and "(o, *f)" for two
/// children with the firstborn starred.
std::string tree_str(const Tree& tree);
int tree_leaves(const Tree& tree);
/// Number of firstborns along each maximal path from the root, left to right.
std::vector<int> tree_path_firstborns(const Tree& tree);
/// Every leaf has a brother (the lone root excepted) and no path carries more
/// than n-1 firstborns.
bool tree_is_admissible(const Tree& tree, int n);
/// Product over maximal paths p of n - r(p).
Rational tree_weight(const Tree& tree, int n);

/// The admissible trees with m leaves for dimension n, built by grafting a
/// lone child onto a tree for n-1, or a firstborn subtree for n-1 with k
/// leaves next to a subtree for n with m-k leaves. m <= 8.
std::vector<Tree> enumerate_trees(int n, int m);

/// Sum of tree weights over enumerate_trees(n, m); equals d_(n, m-1).
Rational e_trees(int n, int m);

/// Coefficient of c^k in Tr((c J_n + B_n)^m) as the sum over l_0 .. l_k >= 0
/// with l_1 .. l_(k-1) and l_0 + l_k even and total m - k of
/// Tr(J B^(l_0 + l_k)) prod Tr(J B^(l_i)). Throws ParityMismatch when m - k is
/// odd.
Rational p_forest(int m, int k, int n);

/// The same coefficient from explicit tuples of trees, one per J, with the
/// tree across the cut counted once per split of its B-run. m <= 9.
Rational p_forest_enumerated(int m, int k, int n);

/// Tr(B_n^(2m)) = n sum_(i=0)^m (-1)^i d_(n, m-1-i) with d_(n,-1) = 1.
Rational trace_B_alternating(int n, int m);

}  // namespace cotsum

#endif  // COTSUM_PATHFOREST_HPP
