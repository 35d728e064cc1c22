#include "anclab/marker.hpp"

#include <utility>

namespace anclab {

namespace {

struct TreeTask {
  NodeId root;
  IntInterval I;
  int k;
};

// Total node count of a forest slice given by its tree roots.
std::int64_t slice_size(const Forest& f, std::span<const NodeId> roots) {
  std::int64_t total = 0;
  for (NodeId r : roots) total += f.subtree_size(r);
  return total;
}

int shrink_level(std::int64_t tree_size) {
  int k = 0;
  while ((std::int64_t{1} << k) < tree_size) ++k;
  return k;  // ceil(log2(size)), 0 for singletons
}

void assign(const ParamTable& p, Labeling& out, NodeId v, Triplet t,
            const IntInterval& enclosing, int k,
            const AssignObserver& observe) {
  ANCLAB_CHECK(triplet_valid(p, t));
  ANCLAB_CHECK(in_uk(p, t, enclosing, k));
  ANCLAB_CHECK(out.labels[v] == 0);
  if (observe) observe(v, t, enclosing, k);
  out.labels[v] = encode_triplet(p, t);
}

// Splits I into per-tree prefixes of size floor(c_k * |T_i|), left to
// right, and queues one task per tree. Leftover space stays unused.
void queue_slices(const ParamTable& p, const Forest& f,
                  std::span<const NodeId> roots, const IntInterval& I, int k,
                  std::vector<TreeTask>& stack) {
  BigInt lo = I.lo;
  // Slices are fixed here, so labels do not depend on processing order;
  // pushing in reverse just makes the stack pop trees in input order.
  std::vector<TreeTask> batch;
  batch.reserve(roots.size());
  for (NodeId r : roots) {
    BigInt width = floor_c(p, k, BigInt(f.subtree_size(r)));
    batch.push_back(TreeTask{r, IntInterval{lo, lo + width}, k});
    lo += width;
  }
  ANCLAB_CHECK(lo <= I.hi);  // sum of floors never overflows the slice
  for (auto it = batch.rbegin(); it != batch.rend(); ++it) {
    stack.push_back(std::move(*it));
  }
}

// Handles one tree task; may push subtasks for the hanging forests.
void process_tree(const ParamTable& p, const Forest& f, TreeTask task,
                  Labeling& out, std::vector<TreeTask>& stack,
                  const AssignObserver& observe) {
  const std::int64_t size = f.subtree_size(task.root);

  if (size == 1) {
    ANCLAB_CHECK(!task.I.empty());
    assign(p, out, task.root, Triplet{0, task.I.lo, 0}, task.I, task.k,
           observe);
    return;
  }

  // A tree well below the level capacity shrinks to the prefix a tighter
  // level needs; afterwards 2^(k-1) < size <= 2^k holds.
  int k = task.k;
  ANCLAB_CHECK(k >= 1);  // size >= 2 never fits level 0
  IntInterval I = task.I;
  if (size <= (std::int64_t{1} << (k - 1))) {
    k = shrink_level(size);
    I = I.prefix(floor_c(p, k, BigInt(size)));
  }

  // Spine construction: map the separator-to-root path to level-k
  // triplets over a shared h, and hang each F_i one level down.
  SpineDecomposition sd = spine_decompose(f, task.root);
  const BigInt& x = p.x[k];
  const BigInt h1 = ceil_div(I.lo, x);
  ANCLAB_CHECK(h1 < p.H[k]);

  BigInt h_total = 0;  // running sum of the h-bar widths
  for (std::size_t i = 0; i < sd.spine.size(); ++i) {
    BigInt hang_width =
        floor_c(p, k - 1, BigInt(slice_size(f, sd.hanging[i])));
    // Every spine step advances by at least one slot, even over an empty
    // hanging forest: consecutive spine intervals must stay distinct.
    BigInt h_bar = ceil_div(hang_width, x);
    if (h_bar == 0) h_bar = 1;

    IntInterval sub{(h1 + h_total) * x, (h1 + h_total + h_bar) * x};
    h_total += h_bar;

    assign(p, out, sd.spine[i], Triplet{k, h1, h_total}, I, k, observe);
    ANCLAB_CHECK(h_total < p.J[k]);
    ANCLAB_CHECK(I.contains(sub));

    if (!sd.hanging[i].empty()) {
      queue_slices(p, f, sd.hanging[i], sub.prefix(hang_width), k - 1, stack);
    }
  }
}

void run(const ParamTable& p, const Forest& f, std::vector<TreeTask>& stack,
         Labeling& out, const AssignObserver& observe) {
  while (!stack.empty()) {
    TreeTask task = std::move(stack.back());
    stack.pop_back();
    process_tree(p, f, std::move(task), out, stack, observe);
  }
}

Labeling make_output(const Forest& f) {
  Labeling out;
  const std::int64_t n = f.size();
  out.labels.assign(n + 1, BigInt(0));
  out.depths.resize(n + 1);
  out.depths[0] = 0;
  for (NodeId v = 1; v <= n; ++v) out.depths[v] = f.depth(v);
  return out;
}

}  // namespace

bool in_uk(const ParamTable& p, const Triplet& t, const IntInterval& I,
           int k) {
  return triplet_valid(p, t) && t.level <= k &&
         I.contains(interval_of(p, t));
}

void embed_forest(const ParamTable& p, const Forest& f,
                  std::span<const NodeId> tree_roots, const IntInterval& I,
                  int k, Labeling& out, const AssignObserver& observe) {
  ANCLAB_CHECK(I.size() >= floor_c(p, k, BigInt(slice_size(f, tree_roots))));
  std::vector<TreeTask> stack;
  queue_slices(p, f, tree_roots, I, k, stack);
  run(p, f, stack, out, observe);
}

void embed_tree(const ParamTable& p, const Forest& f, NodeId tree_root,
                const IntInterval& I, int k, Labeling& out,
                const AssignObserver& observe) {
  std::vector<TreeTask> stack;
  stack.push_back(TreeTask{tree_root, I, k});
  run(p, f, stack, out, observe);
}

Labeling label_forest(const ParamTable& p, const Forest& f,
                      const AssignObserver& observe) {
  if (f.size() > p.n_input) {
    throw validation_error(validation_error::kind::bad_argument,
                           "forest larger than the table's node bound");
  }
  if (f.max_depth() > p.depth_bound) {
    throw validation_error(validation_error::kind::depth_exceeded,
                           "forest deeper than the table's depth bound");
  }

  Labeling out = make_output(f);
  // c_K < 3 keeps this start interval inside [1, gamma_0).
  IntInterval I{1, 1 + floor_c(p, p.levels, BigInt(f.size()))};
  ANCLAB_CHECK(I.hi <= p.gamma[0]);
  embed_forest(p, f, f.roots(), I, p.levels, out, observe);

  for (NodeId v = 1; v <= f.size(); ++v) ANCLAB_CHECK(out.labels[v] != 0);
  return out;
}

}  // namespace anclab
