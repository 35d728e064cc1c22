#include "anclab/bigint.hpp"

#include "anclab/errors.hpp"

namespace anclab {

int bit_width(const BigInt& m) {
  ANCLAB_CHECK(m >= 0);
  if (m == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

int ceil_log2(const BigInt& m) {
  ANCLAB_CHECK(m >= 1);
  // sizeinbase gives floor(log2) + 1; exact powers of two shave one off.
  std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  bool exact_pow2 = mpz_scan1(m.get_mpz_t(), 0) == bits - 1;
  return static_cast<int>(exact_pow2 ? bits - 1 : bits);
}

BigInt ceil_pow2(const BigInt& m, int* exponent) {
  int e = ceil_log2(m);
  if (exponent) *exponent = e;
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  ANCLAB_CHECK(a >= 0 && b > 0);
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mul(const BigRat& r, const BigInt& m) {
  ANCLAB_CHECK(r >= 0 && m >= 0);
  BigInt q;
  BigInt num = r.get_num() * m;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

BigInt ceil_rat(const BigRat& r) {
  ANCLAB_CHECK(r >= 0);
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10) != 0) {
    return std::nullopt;
  }
  return v;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace anclab
