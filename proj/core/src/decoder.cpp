#include "anclab/decoder.hpp"

#include "anclab/errors.hpp"

namespace anclab {

bool is_ancestor(const ParamTable& p, const LabelValue& nu_u,
                 const LabelValue& nu_v) {
  if (nu_u == nu_v) return false;  // strict ancestry is irreflexive

  Triplet tu = decode_triplet(p, nu_u);
  Triplet tv = decode_triplet(p, nu_v);
  IntInterval iu = interval_of(p, tu);
  IntInterval iv = interval_of(p, tv);

  if (iu == iv) {
    // Equal intervals only arise along one root-to-leaf chain, where the
    // ancestor always sits on the higher level.
    return tu.level > tv.level;
  }
  return iu.contains(iv);
}

BigInt make_adj_label(const ParamTable& p, const LabelValue& nu,
                      std::int64_t depth) {
  if (nu < 1 || nu >= p.gamma_max()) {
    throw validation_error(validation_error::kind::out_of_range,
                           "label outside [1, gamma_K)");
  }
  if (depth < 1 || depth > p.depth_bound) {
    throw validation_error(validation_error::kind::out_of_range,
                           "depth outside [1, d]");
  }
  return (nu - 1) * p.depth_bound + (depth - 1);
}

AdjLabel unpack_adj_label(const ParamTable& p, const BigInt& packed) {
  if (packed < 0 || packed >= (p.gamma_max() - 1) * p.depth_bound) {
    throw validation_error(validation_error::kind::out_of_range,
                           "packed adjacency label out of range");
  }
  BigInt q, r;
  BigInt d(p.depth_bound);
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), packed.get_mpz_t(), d.get_mpz_t());
  return AdjLabel{q + 1, r.get_si() + 1};
}

bool is_adjacent(const ParamTable& p, const AdjLabel& a_u,
                 const AdjLabel& a_v) {
  if (a_u.depth + 1 == a_v.depth) return is_ancestor(p, a_u.nu, a_v.nu);
  if (a_v.depth + 1 == a_u.depth) return is_ancestor(p, a_v.nu, a_u.nu);
  return false;
}

bool is_adjacent(const ParamTable& p, const BigInt& packed_u,
                 const BigInt& packed_v) {
  return is_adjacent(p, unpack_adj_label(p, packed_u),
                     unpack_adj_label(p, packed_v));
}

int label_bits(const ParamTable& p) { return ceil_log2(p.gamma_max()); }

int adj_label_bits(const ParamTable& p) {
  return ceil_log2((p.gamma_max() - 1) * p.depth_bound);
}

}  // namespace anclab
