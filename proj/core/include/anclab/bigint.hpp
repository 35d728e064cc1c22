#ifndef ANCLAB_BIGINT_HPP
#define ANCLAB_BIGINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace anclab {

// All label-space and table arithmetic is exact. Label values reach
// O(n * d^2) and the tables must stay exact for n up to 2^40 with d up
// to n, so fixed-width integers are out.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Number of bits needed to store values in [0, m], i.e. ceil(log2(m + 1)).
// bit_width(0) == 0, bit_width(1) == 1, bit_width(255) == 8.
int bit_width(const BigInt& m);

// ceil(log2(m)) for m >= 1. ceil_log2(1) == 0, ceil_log2(3) == 2.
int ceil_log2(const BigInt& m);

// Smallest power of two >= m (m >= 1), together with its exponent.
BigInt ceil_pow2(const BigInt& m, int* exponent = nullptr);

// ceil(a / b) for a >= 0, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// floor(r * m) computed exactly; r must be nonnegative.
BigInt floor_mul(const BigRat& r, const BigInt& m);

// ceil(r) for a nonnegative rational.
BigInt ceil_rat(const BigRat& r);

// Parses a decimal integer; nullopt on any stray character.
std::optional<BigInt> parse_bigint(std::string_view text);

std::string to_string(const BigInt& v);

}  // namespace anclab

#endif
