#include "circnorm/bigint.hpp"

#include <cstdlib>

#include "circnorm/errors.hpp"

namespace circnorm {

double to_double_rounded(const BigInt& x) {
  if (fits_below_pow2(x, kExactDoubleBits)) return x.get_d();
  // strtod rounds to nearest and returns HUGE_VAL on overflow.
  const std::string digits = x.get_str(10);
  return std::strtod(digits.c_str(), nullptr);
}

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw Error(ErrorKind::InvalidArgument, "expected an integer, got '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::InvalidArgument, "expected an integer, got '" + text + "'");
    }
  }
  BigInt value(text.substr(text[0] == '+' ? 1 : 0), 10);
  return value;
}

}  // namespace circnorm
