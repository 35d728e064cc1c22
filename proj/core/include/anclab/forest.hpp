#ifndef ANCLAB_FOREST_HPP
#define ANCLAB_FOREST_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anclab/errors.hpp"

namespace anclab {

// Node ids are dense and 1-based; 0 is the root marker in parent arrays.
using NodeId = std::int64_t;
inline constexpr NodeId kNoParent = 0;

// Immutable rooted forest. Construct through validate_forest, which checks
// acyclicity and the depth bound and precomputes depths, children lists and
// subtree sizes. All accessors are read-only and safe for concurrent use.
class Forest {
public:
  std::int64_t size() const { return n_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::int64_t depth(NodeId v) const { return depth_[v]; }  // root depth = 1
  std::int64_t max_depth() const { return max_depth_; }
  std::int64_t subtree_size(NodeId v) const { return subtree_size_[v]; }
  std::span<const NodeId> roots() const { return roots_; }

  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_off_[v],
            static_cast<std::size_t>(child_off_[v + 1] - child_off_[v])};
  }

  // Undirected parent/child adjacency.
  bool edge(NodeId u, NodeId v) const {
    return parent_[u] == v || parent_[v] == u;
  }

private:
  friend Forest validate_forest(std::span<const NodeId> parents,
                                std::int64_t depth_bound);

  std::int64_t n_ = 0;
  std::int64_t max_depth_ = 0;
  std::vector<NodeId> parent_;        // 1-based, [0] unused
  std::vector<std::int64_t> depth_;   // 1-based
  std::vector<std::int64_t> subtree_size_;
  std::vector<NodeId> roots_;
  std::vector<std::int64_t> child_off_;  // CSR offsets, size n + 2
  std::vector<NodeId> child_list_;
};

// parents[i] is the parent of node i+1, or 0 for a root. Throws
// validation_error (unknown_parent, cycle_detected, depth_exceeded).
Forest validate_forest(std::span<const NodeId> parents,
                       std::int64_t depth_bound);

// The separator (centroid) of the tree rooted at tree_root: the node whose
// removal leaves components of size at most |T|/2. When two nodes qualify
// they are parent and child; the parent is returned.
NodeId separator(const Forest& f, NodeId tree_root);

// Spine decomposition of a tree: spine[0] is the separator, spine.back()
// the root; hanging[i] lists the roots of the subtrees attached to spine[i]
// that are not themselves on the spine. Empty hanging forests are kept so
// indices align with spine positions.
struct SpineDecomposition {
  std::vector<NodeId> spine;                  // bottom-up, size d'
  std::vector<std::vector<NodeId>> hanging;   // F_1 .. F_d'
};
SpineDecomposition spine_decompose(const Forest& f, NodeId tree_root);

// Strict ancestry by walking v's parent chain. The ground truth that the
// label-based decoder is tested against.
bool is_ancestor_oracle(const Forest& f, NodeId u, NodeId v);

// Deterministic forest generators for testing and benchmarking.
struct ForestShape {
  enum class Kind { random, path, star, kary, forest_of };
  Kind kind = Kind::random;
  std::int64_t arg = 0;  // branching factor for kary, tree count for forest_of

  static ForestShape random() { return {Kind::random, 0}; }
  static ForestShape path() { return {Kind::path, 0}; }
  static ForestShape star() { return {Kind::star, 0}; }
  static ForestShape kary(std::int64_t b) { return {Kind::kary, b}; }
  static ForestShape forest_of(std::int64_t t) { return {Kind::forest_of, t}; }

  const char* name() const;
};

// Fixed seed => identical forest. The random shape attaches each new node
// to a uniformly chosen node of depth < d, or starts a new tree with
// probability 1/16. Throws validation_error for unrealizable shapes.
Forest gen_forest(std::int64_t n, std::int64_t d, ForestShape shape,
                  std::uint64_t seed);

// Enumerates every parent array with parent[i] in {root} U {1..i-1}:
// exactly n! forests, covering every rooted-forest shape on n nodes.
// Guarded to n <= 8.
class ForestEnumerator {
public:
  explicit ForestEnumerator(int n);

  // Next forest, or nullopt when exhausted.
  std::optional<Forest> next();

  std::uint64_t total() const { return total_; }

private:
  int n_;
  std::uint64_t total_;
  std::uint64_t index_ = 0;
  std::vector<NodeId> parents_;
  bool done_ = false;
};

}  // namespace anclab

#endif
