#include "pmod04/series.hpp"

#include <doctest.h>

#include "pmod04/census.hpp"

using namespace pmod04;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPolynomial one_plus_x{1, 1};
  IntPolynomial one_minus_x{1, -1};
  CHECK(one_plus_x * one_minus_x == IntPolynomial{1, 0, -1});

  IntPolynomial p{0, 4, 8};
  CHECK(p + IntPolynomial{} == p);
  CHECK(p - p == IntPolynomial{});
  CHECK((p - p).is_zero());

  CHECK(IntPolynomial{1, -3} * IntPolynomial{1, 0, -3} ==
        IntPolynomial{1, -3, -3, 9});

  // trailing zeros trim away
  CHECK(IntPolynomial{1, 2, 0, 0} == IntPolynomial{1, 2});
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{5}.coeff(3) == 0);
}

TEST_CASE("the three growth functions") {
  CHECK(gf_r().numerator == IntPolynomial{0, 4, 8});
  CHECK(gf_r().denominator == IntPolynomial{1, 0, -3});
  CHECK(gf_h().numerator == IntPolynomial{1, 1});
  CHECK(gf_h().denominator == IntPolynomial{1, -3});
  CHECK(gf_p().numerator == IntPolynomial{0, 0, 4, 12});
  CHECK(gf_p().denominator == IntPolynomial{1, -3} * IntPolynomial{1, 0, -3});
}

TEST_CASE("series expansion") {
  CHECK(expand(gf_h(), 3) == big({1, 4, 12, 36}));
  CHECK(expand(gf_r(), 5) == big({0, 4, 8, 12, 24, 36}));
  CHECK(expand(gf_p(), 4) == big({0, 0, 4, 24, 84}));
  CHECK(expand(gf_p(), 6) == big({0, 0, 4, 24, 84, 288, 900}));
  CHECK(expand(gf_r(), 0) == big({0}));

  // h-coefficients: 1, 4, then tripling
  auto h = expand(gf_h(), 20);
  CHECK(h[0] == 1);
  CHECK(h[1] == 4);
  for (size_t n = 2; n < h.size(); ++n) CHECK(h[n] == 3 * h[n - 1]);

  // r-coefficients follow the parity-split closed forms
  auto r = expand(gf_r(), 20);
  CHECK(r[0] == 0);
  for (int n = 1; n <= 20; ++n) {
    BigInt expect = n % 2 == 1 ? 4 * pow3(unsigned((n - 1) / 2))
                               : 8 * pow3(unsigned((n - 2) / 2));
    CHECK(r[size_t(n)] == expect);
  }
}

TEST_CASE("expansion rejects a non-unit constant term") {
  RationalGF bad{IntPolynomial{1}, IntPolynomial{2, 1}};
  CHECK_THROWS_AS(expand(bad, 3), std::invalid_argument);
  RationalGF zero_den{IntPolynomial{1}, IntPolynomial{}};
  CHECK_THROWS_AS(expand(zero_den, 3), std::invalid_argument);

  // constant term -1 is a unit: 1/(x-1) = -1 - x - x^2 - ...
  RationalGF negated{IntPolynomial{1}, IntPolynomial{-1, 1}};
  CHECK(expand(negated, 2) == big({-1, -1, -1}));
}

TEST_CASE("p = h - 1 - r as rational functions") {
  auto report = gf_identity_check();
  CHECK(report.passed);
  CHECK(report.residual.is_zero());

  // a single perturbed coefficient must be caught
  RationalGF r_bad = gf_r();
  r_bad.numerator = r_bad.numerator + IntPolynomial{1};
  auto bad = gf_identity_check(gf_h(), r_bad, gf_p());
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.residual.is_zero());

  // ...every single coefficient of every polynomial, in fact
  auto bump = [](const IntPolynomial& p, size_t i) {
    std::vector<BigInt> c(p.coeffs());
    if (i >= c.size()) c.resize(i + 1);
    c[i] += 1;
    return IntPolynomial(c);
  };
  for (int which = 0; which < 6; ++which) {
    RationalGF h = gf_h(), r = gf_r(), p = gf_p();
    IntPolynomial* target = which == 0   ? &h.numerator
                            : which == 1 ? &h.denominator
                            : which == 2 ? &r.numerator
                            : which == 3 ? &r.denominator
                            : which == 4 ? &p.numerator
                                         : &p.denominator;
    for (size_t i = 0; i < target->size(); ++i) {
      IntPolynomial saved = *target;
      *target = bump(saved, i);
      CHECK_FALSE(gf_identity_check(h, r, p).passed);
      *target = saved;
    }
  }

  // truncated cross-check of the same identity
  auto h = expand(gf_h(), 14);
  auto r = expand(gf_r(), 14);
  auto p = expand(gf_p(), 14);
  for (size_t n = 0; n <= 14; ++n) {
    BigInt expect = h[n] - r[n] - (n == 0 ? 1 : 0);
    CHECK(p[n] == expect);
  }
}

TEST_CASE("series coefficients match the enumerated census") {
  auto rows = census_rows(8);
  auto h = expand(gf_h(), 8);
  auto r = expand(gf_r(), 8);
  auto p = expand(gf_p(), 8);
  for (size_t n = 0; n <= 8; ++n) {
    CHECK(h[n] == rows[n].total);
    CHECK(r[n] == rows[n].reducible);
    CHECK(p[n] == rows[n].pseudo_anosov);
  }
}
