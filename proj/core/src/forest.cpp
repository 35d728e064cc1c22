#include "anclab/forest.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace anclab {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

Forest validate_forest(std::span<const NodeId> parents,
                       std::int64_t depth_bound) {
  const auto n = static_cast<std::int64_t>(parents.size());
  if (n < 1) {
    throw validation_error(validation_error::kind::bad_argument,
                           "forest must have at least one node");
  }
  if (depth_bound < 1) {
    throw validation_error(validation_error::kind::bad_argument,
                           "depth bound must be at least 1");
  }

  Forest f;
  f.n_ = n;
  f.parent_.assign(n + 1, kNoParent);
  for (NodeId v = 1; v <= n; ++v) {
    NodeId pv = parents[v - 1];
    if (pv < 0 || pv > n) {
      throw validation_error(
          validation_error::kind::unknown_parent,
          "node " + std::to_string(v) + " references unknown parent " +
              std::to_string(pv));
    }
    if (pv == v) {
      throw validation_error(validation_error::kind::cycle_detected,
                             "node " + std::to_string(v) + " is its own parent");
    }
    f.parent_[v] = pv;
  }

  // Children lists in node-id order (CSR layout).
  f.child_off_.assign(n + 2, 0);
  for (NodeId v = 1; v <= n; ++v) {
    if (f.parent_[v] != kNoParent) ++f.child_off_[f.parent_[v] + 1];
  }
  for (std::int64_t i = 1; i <= n + 1; ++i) f.child_off_[i] += f.child_off_[i - 1];
  f.child_list_.resize(n > 0 ? f.child_off_[n + 1] : 0);
  {
    std::vector<std::int64_t> fill(f.child_off_.begin(), f.child_off_.end() - 1);
    for (NodeId v = 1; v <= n; ++v) {
      if (f.parent_[v] != kNoParent) f.child_list_[fill[f.parent_[v]]++] = v;
    }
  }

  // Depths by BFS from the roots; anything unreached sits on a cycle.
  f.depth_.assign(n + 1, 0);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId v = 1; v <= n; ++v) {
    if (f.parent_[v] == kNoParent) {
      f.roots_.push_back(v);
      f.depth_[v] = 1;
      order.push_back(v);
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeId v = order[head];
    for (NodeId c : f.children(v)) {
      f.depth_[c] = f.depth_[v] + 1;
      order.push_back(c);
    }
  }
  if (static_cast<std::int64_t>(order.size()) != n) {
    throw validation_error(validation_error::kind::cycle_detected,
                           "parent references contain a cycle");
  }

  f.max_depth_ = *std::max_element(f.depth_.begin() + 1, f.depth_.end());
  if (f.max_depth_ > depth_bound) {
    throw validation_error(
        validation_error::kind::depth_exceeded,
        "forest depth " + std::to_string(f.max_depth_) +
            " exceeds bound " + std::to_string(depth_bound));
  }

  // Subtree sizes by accumulating in reverse BFS order.
  f.subtree_size_.assign(n + 1, 1);
  f.subtree_size_[0] = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (f.parent_[v] != kNoParent) {
      f.subtree_size_[f.parent_[v]] += f.subtree_size_[v];
    }
  }

  return f;
}

NodeId separator(const Forest& f, NodeId tree_root) {
  const std::int64_t total = f.subtree_size(tree_root);
  NodeId v = tree_root;
  // Descend towards the heaviest child while it exceeds half the tree;
  // the first node where no child does is the separator closest to the
  // root (of the at most two candidates).
  for (;;) {
    NodeId heavy = kNoParent;
    std::int64_t heavy_size = 0;
    for (NodeId c : f.children(v)) {
      if (f.subtree_size(c) > heavy_size) {
        heavy = c;
        heavy_size = f.subtree_size(c);
      }
    }
    if (heavy == kNoParent || 2 * heavy_size <= total) return v;
    v = heavy;
  }
}

SpineDecomposition spine_decompose(const Forest& f, NodeId tree_root) {
  SpineDecomposition sd;
  NodeId sep = separator(f, tree_root);

  for (NodeId v = sep;; v = f.parent(v)) {
    sd.spine.push_back(v);
    if (v == tree_root) break;
  }

  sd.hanging.resize(sd.spine.size());
  for (std::size_t i = 0; i < sd.spine.size(); ++i) {
    NodeId spine_child = i == 0 ? kNoParent : sd.spine[i - 1];
    for (NodeId c : f.children(sd.spine[i])) {
      if (c != spine_child) sd.hanging[i].push_back(c);
    }
  }
  return sd;
}

bool is_ancestor_oracle(const Forest& f, NodeId u, NodeId v) {
  for (NodeId p = f.parent(v); p != kNoParent; p = f.parent(p)) {
    if (p == u) return true;
  }
  return false;
}

const char* ForestShape::name() const {
  switch (kind) {
    case Kind::random: return "random";
    case Kind::path: return "path";
    case Kind::star: return "star";
    case Kind::kary: return "kary";
    case Kind::forest_of: return "forest_of";
  }
  return "?";
}

Forest gen_forest(std::int64_t n, std::int64_t d, ForestShape shape,
                  std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw validation_error(validation_error::kind::bad_argument,
                           "need n >= 1 and d >= 1");
  }
  std::vector<NodeId> parents(n, kNoParent);

  auto unrealizable = [&](const std::string& why) {
    return validation_error(validation_error::kind::bad_argument,
                            "shape not realizable within (n, d): " + why);
  };

  switch (shape.kind) {
    case ForestShape::Kind::path: {
      if (n > d) throw unrealizable("path of " + std::to_string(n) + " nodes");
      for (NodeId v = 2; v <= n; ++v) parents[v - 1] = v - 1;
      break;
    }
    case ForestShape::Kind::star: {
      if (n >= 2 && d < 2) throw unrealizable("star needs depth 2");
      for (NodeId v = 2; v <= n; ++v) parents[v - 1] = 1;
      break;
    }
    case ForestShape::Kind::kary: {
      if (shape.arg < 1) throw unrealizable("branching factor must be >= 1");
      for (NodeId v = 2; v <= n; ++v) parents[v - 1] = (v - 2) / shape.arg + 1;
      break;
    }
    case ForestShape::Kind::random:
    case ForestShape::Kind::forest_of: {
      std::mt19937_64 rng(seed);
      std::int64_t forced_roots =
          shape.kind == ForestShape::Kind::forest_of ? shape.arg : 1;
      if (forced_roots < 1 || forced_roots > n) {
        throw unrealizable("tree count must be in [1, n]");
      }
      std::vector<NodeId> eligible;  // nodes of depth < d
      std::vector<std::int64_t> depth(n + 1, 0);
      for (NodeId v = 1; v <= n; ++v) {
        bool make_root = v <= forced_roots;
        if (shape.kind == ForestShape::Kind::random && v > 1) {
          make_root = (rng() & 15) == 0 || eligible.empty();
        }
        if (shape.kind == ForestShape::Kind::forest_of && v > forced_roots &&
            eligible.empty()) {
          throw unrealizable("no attachment points below depth bound");
        }
        if (make_root) {
          depth[v] = 1;
        } else {
          NodeId parent = eligible[rng() % eligible.size()];
          parents[v - 1] = parent;
          depth[v] = depth[parent] + 1;
        }
        if (depth[v] < d) eligible.push_back(v);
      }
      break;
    }
  }

  // Re-validating keeps the generators honest about their own bound;
  // an over-deep kary fill surfaces here as depth_exceeded.
  return validate_forest(parents, d);
}

ForestEnumerator::ForestEnumerator(int n) : n_(n), total_(0) {
  if (n < 1 || n > 8) {
    throw validation_error(validation_error::kind::bad_argument,
                           "enumeration is limited to 1 <= n <= 8");
  }
  total_ = factorial(n);
  parents_.assign(n, kNoParent);
}

std::optional<Forest> ForestEnumerator::next() {
  if (done_) return std::nullopt;

  // Depth can never exceed n, so n is a universally valid bound here.
  Forest f = validate_forest(parents_, n_);
  ++index_;

  // Odometer step: digit i ranges over [0, i] (root or any earlier node).
  int i = n_ - 1;
  while (i >= 0 && parents_[i] == i) {
    parents_[i] = kNoParent;
    --i;
  }
  if (i < 0) {
    done_ = true;
  } else {
    ++parents_[i];
  }
  return f;
}

}  // namespace anclab
