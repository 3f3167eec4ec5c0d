#include "pmod04/series.hpp"

#include <stdexcept>
#include <utility>

namespace pmod04 {

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> coeffs)
    : coeffs_(coeffs) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(size_t i) const {
  static const BigInt zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  return IntPolynomial(std::move(out));
}

RationalGF gf_h() { return {IntPolynomial{1, 1}, IntPolynomial{1, -3}}; }

RationalGF gf_r() { return {IntPolynomial{0, 4, 8}, IntPolynomial{1, 0, -3}}; }

RationalGF gf_p() {
  return {IntPolynomial{0, 0, 4, 12},
          IntPolynomial{1, -3} * IntPolynomial{1, 0, -3}};
}

std::vector<BigInt> expand(const RationalGF& gf, int terms) {
  if (terms < 0) throw std::invalid_argument("terms must be >= 0");
  const IntPolynomial& num = gf.numerator;
  const IntPolynomial& den = gf.denominator;
  const BigInt& d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw std::invalid_argument(
        "denominator constant term must be a unit (+1 or -1)");

  std::vector<BigInt> c(size_t(terms) + 1);
  for (size_t n = 0; n < c.size(); ++n) {
    BigInt acc = num.coeff(n);
    const size_t reach = std::min(n, den.size() - 1);
    for (size_t j = 1; j <= reach; ++j) acc -= den.coeff(j) * c[n - j];
    c[n] = d0 == 1 ? acc : -acc;
  }
  return c;
}

IdentityCheckReport gf_identity_check(const RationalGF& h, const RationalGF& r,
                                      const RationalGF& p) {
  // p/q_p == (h_num - h_den)/h_den - r_num/r_den, cross-multiplied:
  IntPolynomial lhs = p.numerator * (h.denominator * r.denominator);
  IntPolynomial rhs =
      p.denominator * ((h.numerator - h.denominator) * r.denominator -
                       r.numerator * h.denominator);
  IntPolynomial residual = lhs - rhs;
  return {residual.is_zero(), std::move(residual)};
}

IdentityCheckReport gf_identity_check() {
  return gf_identity_check(gf_h(), gf_r(), gf_p());
}

}  // namespace pmod04
