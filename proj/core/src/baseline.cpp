#include "anclab/baseline.hpp"

#include "anclab/bigint.hpp"

namespace anclab {

std::vector<BaselineLabel> baseline_label(const Forest& f) {
  const std::int64_t n = f.size();
  std::vector<BaselineLabel> labels(n + 1);

  std::int64_t counter = 0;
  std::vector<std::pair<NodeId, bool>> stack;  // (node, children queued)
  // Reverse pushes keep trees and children in input order.
  for (auto rit = f.roots().rbegin(); rit != f.roots().rend(); ++rit) {
    stack.emplace_back(*rit, false);
  }
  while (!stack.empty()) {
    auto& [v, expanded] = stack.back();
    if (!expanded) {
      labels[v].lo = ++counter;
      expanded = true;
      auto kids = f.children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        stack.emplace_back(*it, false);
      }
    } else {
      labels[v].hi = ++counter;
      stack.pop_back();
    }
  }
  return labels;
}

int baseline_label_bits(std::int64_t n) {
  // Two endpoints, each counting up to 2n.
  return 2 * ceil_log2(BigInt(2 * n + 1));
}

}  // namespace anclab
