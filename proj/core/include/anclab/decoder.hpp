#ifndef ANCLAB_DECODER_HPP
#define ANCLAB_DECODER_HPP

#include <cstdint>

#include "anclab/params.hpp"

namespace anclab {

// Strict-ancestry query from two labels of one labeling run. Decodes both
// triplets and compares the associated intervals: containment means
// ancestry, with one refinement — equal intervals resolve by level (the
// higher level is the ancestor). Equal labels are never ancestors.
// Total for any pair of in-range labels; the correctness contract only
// covers labels from a single run under the same table.
bool is_ancestor(const ParamTable& p, const LabelValue& nu_u,
                 const LabelValue& nu_v);

// Ancestry label plus the node depth, the extra log d bits that turn the
// ancestry scheme into an adjacency scheme.
struct AdjLabel {
  LabelValue nu;
  std::int64_t depth = 0;  // in [1, d]

  friend bool operator==(const AdjLabel&, const AdjLabel&) = default;
};

// Packs (nu, depth) into the single integer (nu - 1) * d + (depth - 1).
BigInt make_adj_label(const ParamTable& p, const LabelValue& nu,
                      std::int64_t depth);
AdjLabel unpack_adj_label(const ParamTable& p, const BigInt& packed);

// u and v are adjacent iff one is the parent of the other: an ancestor at
// depth distance exactly one. Symmetric and irreflexive.
bool is_adjacent(const ParamTable& p, const BigInt& packed_u,
                 const BigInt& packed_v);
bool is_adjacent(const ParamTable& p, const AdjLabel& a_u, const AdjLabel& a_v);

// Fixed label widths of the scheme under table p:
// ceil(log2(gamma_K)) bits for ancestry labels,
// ceil(log2((gamma_K - 1) * d)) for packed adjacency labels.
int label_bits(const ParamTable& p);
int adj_label_bits(const ParamTable& p);

}  // namespace anclab

#endif
