#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circnorm/bigint.hpp"
#include "circnorm/circulant.hpp"

namespace testing_support {

using circnorm::BigInt;

inline BigInt big(__int128 x) {
  // mpz has no 128-bit constructor; go through decimal.
  if (x == 0) return BigInt(0);
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return BigInt(digits, 10);
}

inline std::vector<BigInt> bigs(const std::vector<__int128>& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.push_back(big(x));
  return out;
}

inline std::vector<BigInt> bigs(const std::vector<std::int64_t>& xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(static_cast<long>(x));
  return out;
}

inline circnorm::CirculantMatrix circ(const std::vector<std::int64_t>& row) {
  return circnorm::CirculantMatrix(bigs(row));
}

/// Nonnegative row; roughly a third of the rows are sparse so that ties and
/// reducible patterns show up.
inline std::vector<std::int64_t> random_row(std::mt19937_64& rng, std::size_t n,
                                            std::int64_t max_entry = 1000) {
  std::uniform_int_distribution<std::int64_t> value(0, max_entry);
  std::bernoulli_distribution sparse_row(0.3);
  std::bernoulli_distribution zero(0.8);
  const bool sparse = sparse_row(rng);
  std::vector<std::int64_t> row(n);
  for (auto& x : row) x = (sparse && zero(rng)) ? 0 : value(rng);
  return row;
}

inline double max_abs(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace testing_support
