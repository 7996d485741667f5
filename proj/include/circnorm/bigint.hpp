#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace circnorm {

using BigInt = mpz_class;

/// 2^53: every integer strictly below this converts to double exactly.
inline constexpr unsigned kExactDoubleBits = 53;
/// 2^26: entries below this keep pairwise products below 2^52.
inline constexpr unsigned kGramEntryBits = 26;

/// True when 0 <= |x| < 2^bits.
inline bool fits_below_pow2(const BigInt& x, unsigned bits) {
  return sgn(x) == 0 || mpz_sizeinbase(x.get_mpz_t(), 2) <= bits;
}

/// Largest entry bit length test over a whole row.
inline bool all_fit_below_pow2(std::span<const BigInt> xs, unsigned bits) {
  for (const auto& x : xs) {
    if (!fits_below_pow2(x, bits)) return false;
  }
  return true;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Round-to-nearest conversion (mpz_get_d truncates). Overflows to +/-inf.
double to_double_rounded(const BigInt& x);

/// Throws InvalidArgument on anything other than an optionally signed run of
/// decimal digits.
BigInt parse_decimal(const std::string& text);

}  // namespace circnorm
