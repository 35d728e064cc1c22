#include "anclab/params.hpp"

#include <algorithm>

#include "anclab/errors.hpp"

namespace anclab {

ParamTable build_params(std::int64_t n, std::int64_t d) {
  if (n < 1) {
    throw validation_error(validation_error::kind::bad_argument,
                           "node count must be at least 1");
  }
  if (d < 1) {
    throw validation_error(validation_error::kind::bad_argument,
                           "depth bound must be at least 1");
  }

  ParamTable p;
  p.n_input = n;
  p.depth_bound = d;
  p.n_pow2 = ceil_pow2(BigInt(n), &p.levels);

  const int K = p.levels;
  p.c.resize(K + 1);
  p.x.resize(K + 1);
  p.H.assign(K + 1, BigInt(0));
  p.J.assign(K + 1, BigInt(0));
  p.gamma.resize(K + 1);

  p.c[0] = 1;
  p.x[0] = 1;
  p.gamma[0] = 3 * p.n_pow2;

  BigInt pow2 = 1;  // 2^(k-1)
  for (int k = 1; k <= K; ++k) {
    const BigInt k2 = BigInt(k) * k;

    p.c[k] = p.c[k - 1] + BigRat(1, k2);
    p.x[k] = ceil_div(pow2, d * k2);

    // H and J are not integral in general; rounding up only widens the
    // valid (h, j) ranges, so the embedding bounds still hold.
    p.H[k] = 1 + ceil_div(3 * p.n_pow2 * d * k2, pow2);
    p.J[k] = ceil_rat(BigRat(2 * d * k2) * p.c[k]);

    p.gamma[k] = p.gamma[k - 1] + p.H[k] * p.J[k];
    pow2 <<= 1;
  }

  return p;
}

BigInt floor_c(const ParamTable& p, int k, const BigInt& m) {
  if (k < 0 || k > p.levels) {
    throw validation_error(validation_error::kind::bad_argument,
                           "level out of range");
  }
  return floor_mul(p.c[k], m);
}

bool triplet_valid(const ParamTable& p, const Triplet& t) {
  if (t.level < 0 || t.level > p.levels) return false;
  if (t.level == 0) {
    return t.h >= 1 && t.h < p.gamma[0] && t.j == 0;
  }
  return t.h >= 0 && t.h < p.H[t.level] && t.j >= 0 && t.j < p.J[t.level];
}

LabelValue encode_triplet(const ParamTable& p, const Triplet& t) {
  if (!triplet_valid(p, t)) {
    throw validation_error(validation_error::kind::out_of_range,
                           "triplet coordinates out of range");
  }
  if (t.level == 0) return t.h;
  return p.gamma[t.level - 1] + t.h * p.J[t.level] + t.j;
}

Triplet decode_triplet(const ParamTable& p, const LabelValue& nu) {
  if (nu < 1 || nu >= p.gamma_max()) {
    throw validation_error(validation_error::kind::out_of_range,
                           "label outside [1, gamma_K)");
  }
  // Level i holds exactly [gamma[i-1], gamma[i]).
  auto it = std::upper_bound(p.gamma.begin(), p.gamma.end(), nu);
  int level = static_cast<int>(it - p.gamma.begin());
  if (level == 0) return Triplet{0, nu, 0};

  BigInt h, j;
  BigInt offset = nu - p.gamma[level - 1];
  mpz_fdiv_qr(h.get_mpz_t(), j.get_mpz_t(), offset.get_mpz_t(),
              p.J[level].get_mpz_t());
  return Triplet{level, std::move(h), std::move(j)};
}

IntInterval interval_of(const ParamTable& p, const Triplet& t) {
  if (!triplet_valid(p, t)) {
    throw validation_error(validation_error::kind::out_of_range,
                           "triplet coordinates out of range");
  }
  if (t.level == 0) return IntInterval{t.h, t.h + 1};
  const BigInt& x = p.x[t.level];
  return IntInterval{x * t.h, x * (t.h + t.j)};
}

}  // namespace anclab
