#ifndef ANCLAB_PARAMS_HPP
#define ANCLAB_PARAMS_HPP

#include <cstdint>
#include <vector>

#include "anclab/bigint.hpp"

namespace anclab {

// Half-open integer interval [lo, hi).
struct IntInterval {
  BigInt lo;
  BigInt hi;

  bool empty() const { return lo == hi; }
  BigInt size() const { return hi - lo; }
  bool contains(const BigInt& p) const { return lo <= p && p < hi; }
  // Subset test; the empty interval is contained in everything.
  bool contains(const IntInterval& other) const {
    return other.empty() || (lo <= other.lo && other.hi <= hi);
  }
  // Leading sub-interval of the given size (clamped checks are the
  // caller's business).
  IntInterval prefix(const BigInt& size) const { return {lo, lo + size}; }

  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// Level-indexed label representation. Level 0 carries a bare point value
// in h; level i >= 1 addresses the interval [x_i*h, x_i*(h+j)).
struct Triplet {
  int level = 0;
  BigInt h;
  BigInt j;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// A label is an integer in [1, gamma.back()).
using LabelValue = BigInt;

// All (n, d)-dependent constants of the labeling scheme, computed once and
// immutable afterwards. Safe to share across threads.
//
// For levels k = 0..K (K = log2 of n rounded up to a power of two):
//   c[k]     exact rational; c[0] = 1, c[k] = c[k-1] + 1/k^2, always < 3
//   x[k]     interval granularity, ceil(2^(k-1) / (d k^2)); x[0] = 1
//   H[k]     bound on the h coordinate, ceil(1 + 3 n' d k^2 / 2^(k-1))
//   J[k]     bound on the j coordinate, ceil(2 d c_k k^2)
//   gamma[k] label-space prefix size; gamma[0] = 3 n',
//            gamma[k] = gamma[k-1] + H[k] * J[k]
// where n' = n_pow2. H[0] and J[0] are unused and left at 0.
struct ParamTable {
  std::int64_t n_input = 0;
  std::int64_t depth_bound = 0;
  BigInt n_pow2;
  int levels = 0;  // K

  std::vector<BigRat> c;
  std::vector<BigInt> x;
  std::vector<BigInt> H;
  std::vector<BigInt> J;
  std::vector<BigInt> gamma;

  const BigInt& gamma_max() const { return gamma.back(); }
};

// Builds the table for the family of forests with at most n nodes and depth
// at most d. Throws validation_error for n < 1 or d < 1.
ParamTable build_params(std::int64_t n, std::int64_t d);

// floor(c_k * m), exact. m must be nonnegative, k in [0, K].
BigInt floor_c(const ParamTable& p, int k, const BigInt& m);

// True iff t's coordinates are within the level's (h, j) ranges.
bool triplet_valid(const ParamTable& p, const Triplet& t);

// Integer value of a triplet: h for level 0, gamma[i-1] + h*J_i + j for
// level i >= 1. Throws validation_error if t violates its range invariants.
LabelValue encode_triplet(const ParamTable& p, const Triplet& t);

// Inverse of encode_triplet for nu in [1, gamma_max()); the level is found
// by binary search over gamma. Throws validation_error for nu out of range.
Triplet decode_triplet(const ParamTable& p, const LabelValue& nu);

// Interval associated with a triplet: the singleton [h, h+1) at level 0,
// [x_i*h, x_i*(h+j)) at level i >= 1 (empty when j == 0).
IntInterval interval_of(const ParamTable& p, const Triplet& t);

}  // namespace anclab

#endif
