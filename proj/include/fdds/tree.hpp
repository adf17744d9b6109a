#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdds {

namespace detail {
struct TreeNode;
}

class Forest;

/// Canonical finite rooted in-tree (all edges point toward the root).
/// Values are interned: isomorphic trees share one node, so equality is
/// pointer equality and compares are cheap after the first time.
/// A default-constructed Tree is the single-node tree.
class Tree {
 public:
  Tree();
  int depth() const;              // root has depth 0; a leaf tree has depth 0
  std::int64_t size() const;      // node count
  std::span<const Tree> children() const;  // ascending in the tree order
  bool operator==(const Tree&) const = default;

  const detail::TreeNode* node() const { return node_; }
  std::uint32_t id() const;

 private:
  explicit Tree(const detail::TreeNode* n) : node_(n) {}
  const detail::TreeNode* node_;
  friend class TreePool;
};

/// In-degree sequence in BFS visit order, children recursively pre-sorted.
/// Equal codes <=> isomorphic trees; code length = node count.
using TreeCode = std::vector<std::int32_t>;

Tree leaf();
Tree path_tree(int depth);

/// R operator: hang the forest under a fresh common root.
Tree attach_root(const Forest& children);
Tree attach_root(std::vector<Tree> children);

/// D operator: the multiset of subtrees rooted at the root's children.
Forest children_forest(Tree t);

TreeCode code(Tree t);
std::string to_bracket(Tree t);

/// Total order on trees: lexicographic on codes, proper prefix first.
std::strong_ordering compare(Tree a, Tree b);
bool tree_less(Tree a, Tree b);

/// Layered direct product: one node per equal-depth pair, edges where both
/// projections are edges. Depth of the result is min(depth a, depth b).
Tree tree_product(Tree a, Tree b);

/// k-fold product; k = 0 yields the path of the same depth.
Tree tree_power(Tree t, unsigned k);

/// Induced subtree of nodes with depth <= max_depth.
Tree cut(Tree t, int max_depth);

bool is_path(Tree t);

/// Quotient x with a*x = b and depth(x) = depth(b), or nullopt when no such
/// tree exists (including when depth(a) < depth(b)). The result is verified
/// by multiplication before being returned.
std::optional<Tree> tree_divide(Tree b, Tree a);

/// Multiset of trees with multiplicities, kept ascending in the tree order.
class Forest {
 public:
  struct Item {
    Tree tree;
    std::uint64_t count = 0;
    bool operator==(const Item&) const = default;
  };

  Forest() = default;
  explicit Forest(const std::vector<Tree>& trees);
  static Forest single(Tree t, std::uint64_t count = 1);

  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  std::uint64_t tree_count() const;   // number of trees, with multiplicity
  std::int64_t total_nodes() const;   // sum of tree sizes, with multiplicity
  int depth() const;                  // 0 for the empty forest

  void add(Tree t, std::uint64_t count = 1);
  void add(const Forest& other);
  std::uint64_t count_of(Tree t) const;
  Tree min_tree() const;
  Tree max_tree() const;

  bool operator==(const Forest&) const = default;

 private:
  std::vector<Item> items_;
  friend Forest make_forest(std::vector<Item> items);
};

Forest forest_product(const Forest& f, const Forest& g);
/// k = 0 yields one path of the forest's depth; the empty forest stays empty
/// for k >= 1.
Forest forest_power(const Forest& f, unsigned k);

/// Bounded variants give up (nullopt) as soon as the result would exceed
/// max_total_nodes; useful when the result is about to be checked for
/// containment in a forest of known size.
std::optional<Forest> forest_product_bounded(const Forest& f, const Forest& g,
                                             std::int64_t max_total_nodes);
std::optional<Forest> forest_power_bounded(const Forest& f, unsigned k,
                                           std::int64_t max_total_nodes);

/// Multiset difference; nullopt when g is not contained in f.
std::optional<Forest> forest_subtract(const Forest& f, const Forest& g);
bool forest_contains(const Forest& f, const Forest& g);

/// Forest quotient via the root trick: D(divide(R(b), R(a))).
std::optional<Forest> forest_divide(const Forest& b, const Forest& a);

/// The order-minimal tree among those of maximal depth. Throws on empty.
Tree select_min_deepest(const Forest& f);

Forest cut(const Forest& f, int max_depth);

/// True when the forest is exactly one tree and that tree is a path.
bool is_path_forest(const Forest& f);

/// Number of interned tree nodes (diagnostics).
std::size_t tree_pool_size();

/// Drops every interned tree and cache. Invalidates all live Tree and Forest
/// values; only call between independent computations.
void tree_pool_clear();

}  // namespace fdds
