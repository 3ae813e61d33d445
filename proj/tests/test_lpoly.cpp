#include <doctest.h>

#include <random>

#include "cubics/errors.hpp"
#include "cubics/kernels.hpp"
#include "cubics/lpoly.hpp"

using namespace cubics;

TEST_CASE("basic arithmetic and trimming") {
  LPoly a{1, -1, 1};  // 1 - L + L^2
  LPoly b = LPoly::monomial(2) - LPoly::monomial(1) + LPoly(1);
  CHECK(a == b);
  CHECK(a.degree() == 2);
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.coeff(1) == -1);
  CHECK(a.coeff(7) == 0);

  LPoly c = a * LPoly{0, 1};  // L - L^2 + L^3
  CHECK(c == LPoly{0, 1, -1, 1});
  CHECK(c == a.shifted(1));
  CHECK(c.valuation() == 1);
  CHECK(c.eval(2) == Rational(2 - 4 + 8));
}

TEST_CASE("division") {
  LPoly a{0, 0, -1, 0, -1, 0, -1};  // -(L^2 + L^4 + L^6)
  LPoly b{0, -1};
  LPoly q = div_exact(a, b);
  CHECK(q == LPoly{0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(div_exact(LPoly{1, 1}, LPoly{0, 1}), InexactDivision);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    LPoly x, y;
    for (int d = deg(rng); d >= 0; --d) x += LPoly::monomial(d, coeff(rng));
    for (int d = deg(rng); d >= 0; --d) y += LPoly::monomial(d, coeff(rng));
    if (y.is_zero()) continue;
    CHECK(div_exact(x * y, y) == x);
  }
}

TEST_CASE("gcd and content") {
  LPoly a = LPoly{1, 1} * LPoly{2, 0, 2};  // (1+L) * 2(1+L^2)
  LPoly b = LPoly{1, 1} * LPoly{0, 3};
  LPoly g = poly_gcd(a, b);
  CHECK(g == LPoly{1, 1});
  CHECK(integer_content(a) == 2);
  CHECK(denominator_lcm(LPoly{Rational(1, 2), Rational(1, 3)}) == 6);
}

TEST_CASE("kernel of integer matrices") {
  Mat<Int> a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  auto ker = kernel_bareiss<Int>(a);
  CHECK(ker.rank == 1);
  CHECK(ker.basis.size() == 2);
  for (const auto& v : ker.basis) {
    CHECK(a(0, 0) * v(0) + a(0, 1) * v(1) + a(0, 2) * v(2) == 0);
  }
}

TEST_CASE("kernel of polynomial matrices") {
  // columns: (1, 0), (0, L), (1+L, L^2): third = (1+L) c1 + L c2
  Mat<LPoly> a(2, 3);
  a(0, 0) = LPoly(1);
  a(1, 0) = LPoly();
  a(0, 1) = LPoly();
  a(1, 1) = LPoly{0, 1};
  a(0, 2) = LPoly{1, 1};
  a(1, 2) = LPoly{0, 0, 1};
  auto ker = kernel_bareiss<LPoly>(a);
  CHECK(ker.rank == 2);
  REQUIRE(ker.basis.size() == 1);
  const auto& v = ker.basis[0];
  for (int r = 0; r < 2; ++r) {
    LPoly acc;
    for (int c = 0; c < 3; ++c) acc += a(r, c) * v(c);
    CHECK(acc.is_zero());
  }
  // proportional to ((1+L), L, -1)
  CHECK(v(0) * LPoly{0, 1} == v(1) * LPoly{1, 1});
}

TEST_CASE("kernel ranks on random rational matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 4, n = 6;
    Mat<Int> a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    auto ker = kernel_bareiss<Int>(a);
    CHECK(ker.rank + static_cast<int>(ker.basis.size()) == n);
    for (const auto& v : ker.basis) {
      bool nonzero = false;
      for (int j = 0; j < n; ++j) nonzero |= v(j) != 0;
      CHECK(nonzero);
      for (int i = 0; i < m; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += a(i, j) * v(j);
        CHECK(acc == 0);
      }
    }
  }
}
