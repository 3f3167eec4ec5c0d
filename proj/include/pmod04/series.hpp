#pragma once

#include <initializer_list>
#include <vector>

#include "pmod04/bigint.hpp"

namespace pmod04 {

/// Dense integer polynomial, coefficient i = coefficient of x^i. Trailing
/// zeros are trimmed; the zero polynomial stores no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Number of stored coefficients (degree + 1 for nonzero polynomials).
  size_t size() const { return coeffs_.size(); }
  /// Coefficient of x^i; zero beyond the stored range.
  const BigInt& coeff(size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// numerator / denominator as a formal power series at x = 0; the
/// denominator must have a nonzero constant term.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// Growth function of the whole group: (1 + x) / (1 - 3x).
RationalGF gf_h();
/// Growth function of the reducible classes: (4x + 8x^2) / (1 - 3x^2).
RationalGF gf_r();
/// Growth function of the pseudo-Anosov classes:
/// 4x^2 (1 + 3x) / ((1 - 3x)(1 - 3x^2)).
RationalGF gf_p();

/// First terms+1 power-series coefficients c_0..c_terms, computed exactly
/// by the linear recurrence the denominator induces. The denominator's
/// constant term must be +1 or -1.
std::vector<BigInt> expand(const RationalGF& gf, int terms);

struct IdentityCheckReport {
  bool passed;
  IntPolynomial residual;  // zero iff passed
};

/// Checks p = h - 1 - r as an exact identity of rational functions by
/// cross-multiplication (no truncation involved).
IdentityCheckReport gf_identity_check(const RationalGF& h, const RationalGF& r,
                                      const RationalGF& p);
IdentityCheckReport gf_identity_check();

}  // namespace pmod04
