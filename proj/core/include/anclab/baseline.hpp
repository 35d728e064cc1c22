#ifndef ANCLAB_BASELINE_HPP
#define ANCLAB_BASELINE_HPP

#include <cstdint>
#include <vector>

#include "anclab/forest.hpp"

namespace anclab {

// The classic 2 log n interval scheme, used as benchmark baseline and as a
// second oracle. Entry/exit DFS numbering (one shared counter, bumped on
// entry and on exit) gives strictly nested closed intervals, so no
// tie-break is needed.
struct BaselineLabel {
  std::int64_t lo = 0;  // DFS entry index, 1-based
  std::int64_t hi = 0;  // DFS exit index, hi >= lo

  friend bool operator==(const BaselineLabel&, const BaselineLabel&) = default;
};

// Labels every node; children are visited in input order. Result is
// 1-based by node id ([0] unused).
std::vector<BaselineLabel> baseline_label(const Forest& f);

// Strict nesting <=> strict ancestry.
inline bool baseline_is_ancestor(const BaselineLabel& u,
                                 const BaselineLabel& v) {
  return u.lo < v.lo && v.hi < u.hi;
}

// Reported label width: two endpoints of ceil(log2(2n + 1)) bits each.
int baseline_label_bits(std::int64_t n);

}  // namespace anclab

#endif
