#ifndef ANCLAB_MARKER_HPP
#define ANCLAB_MARKER_HPP

#include <functional>
#include <vector>

#include "anclab/forest.hpp"
#include "anclab/params.hpp"

namespace anclab {

// One label per node, plus the node depths the adjacency scheme needs.
// Labels are pairwise distinct values in [1, gamma_max()); assigned
// non-level-0 triplets always have j >= 1.
struct Labeling {
  std::vector<LabelValue> labels;        // 1-based, [0] unused
  std::vector<std::int64_t> depths;      // 1-based, [0] unused

  const LabelValue& label(NodeId v) const { return labels[v]; }
  std::int64_t depth(NodeId v) const { return depths[v]; }
  std::int64_t size() const {
    return static_cast<std::int64_t>(labels.size()) - 1;
  }
};

// Test hook: called for every assignment with the triplet and the innermost
// enclosing (interval, level) of the embedding step that produced it.
using AssignObserver = std::function<void(
    NodeId node, const Triplet& t, const IntInterval& enclosing, int level)>;

// Labels a whole forest: embeds it into [1, 1 + floor(c_K * |F|)), which
// fits inside [1, gamma_0) because c_K < 3. Requires |F| <= p.n_input and
// max_depth <= p.depth_bound. Runs in O(n log n); the recursion is an
// explicit work stack. Throws internal_error if any of the scheme's range
// invariants fails (a bug, never a property of the input).
Labeling label_forest(const ParamTable& p, const Forest& f,
                      const AssignObserver& observe = {});

// The two embedding steps label_forest is built from, exposed for direct
// testing. Both write labels into `out` (sized by the caller).
//
// embed_forest: gives each tree of the slice a consecutive prefix of size
// floor(c_k * |T_i|), left to right in input order; leftover space in I is
// unused. Every tree must have at most 2^k nodes and |I| >= floor(c_k*|F|).
void embed_forest(const ParamTable& p, const Forest& f,
                  std::span<const NodeId> tree_roots, const IntInterval& I,
                  int k, Labeling& out, const AssignObserver& observe = {});

// embed_tree: |T| <= 2^k, |I| = floor(c_k * |T|). Singletons become level-0
// points; trees with at most 2^(k-1) nodes shrink to level ceil(log2 |T|);
// bigger trees get their spine mapped to level-k triplets and the hanging
// forests embedded one level down.
void embed_tree(const ParamTable& p, const Forest& f, NodeId tree_root,
                const IntInterval& I, int k, Labeling& out,
                const AssignObserver& observe = {});

// Membership in U_k(I): the triplets of level <= k whose interval lies
// inside I.
bool in_uk(const ParamTable& p, const Triplet& t, const IntInterval& I, int k);

}  // namespace anclab

#endif
