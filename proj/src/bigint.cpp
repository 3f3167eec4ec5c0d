#include "pmod04/bigint.hpp"

#include <stdexcept>

namespace pmod04 {

BigInt pow3(unsigned exponent) {
  BigInt result = 1;
  BigInt base = 3;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string decimal_string(const BigInt& num, const BigInt& den,
                           int significant) {
  if (den <= 0 || num < 0 || num > den || significant < 1)
    throw std::invalid_argument("decimal_string requires 0 <= num <= den");
  if (num == 0) return "0";
  if (num == den) return "1";

  // k = position of the first significant digit after the decimal point.
  int k = 1;
  BigInt scaled = num * 10;
  while (scaled < den) {
    scaled *= 10;
    ++k;
  }

  BigInt pow_sig = 1;
  for (int i = 1; i < significant; ++i) pow_sig *= 10;
  // round(num * 10^(k + significant - 1) / den), half away from zero
  BigInt mantissa = (2 * scaled * pow_sig + den) / (2 * den);

  BigInt limit = pow_sig * 10;
  if (mantissa == limit) {  // rounding carried into an extra digit
    mantissa = pow_sig;
    --k;
  }

  std::string digits = mantissa.str();
  std::string out;
  if (k == 0) {
    // value rounded up to 1.000...; keep `significant` digits
    out = digits.substr(0, 1) + "." + digits.substr(1);
  } else {
    out = "0.";
    out.append(size_t(k - 1), '0');
    out += digits;
  }
  return out;
}

}  // namespace pmod04
