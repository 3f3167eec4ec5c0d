#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pmod04 {

// All counts in this library are exact. cpp_int keeps small values on the
// stack, so the census hot paths stay cheap.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt pow3(unsigned exponent);

/// Decimal rendering of num/den with `significant` significant digits,
/// rounded half away from zero. Requires 0 <= num <= den, den > 0.
/// Exact integer arithmetic throughout; "0" and "1" render bare.
std::string decimal_string(const BigInt& num, const BigInt& den,
                           int significant = 6);

}  // namespace pmod04
