#include <doctest.h>

#include <random>

#include "cubics/charring.hpp"
#include "cubics/context.hpp"
#include "cubics/errors.hpp"

using namespace cubics;

namespace {

Context& ctx() { return Context::get(); }
const CharacterTable& t() { return ctx().e6(); }

GradedCharacter S() { return ctx().motives().S(); }

IrrepDecomposition dec(const GradedCharacter& x) { return decompose(t(), x); }

GradedCharacter random_graded(std::mt19937& rng) {
  std::uniform_int_distribution<int> irrep(1, 25), degree(0, 2), mult(-2, 2), count(1, 3);
  GradedCharacter x = GradedCharacter::zero(t());
  for (int i = count(rng); i > 0; --i) {
    const int m = mult(rng);
    if (m == 0) continue;
    x += Rational(m) *
         GradedCharacter::from_class_function(ClassFunction::irrep(t(), irrep(rng)), degree(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const GradedCharacter L = GradedCharacter::lefschetz_power(t(), 1);
  CHECK(L * L == GradedCharacter::lefschetz_power(t(), 2));
  const GradedCharacter s = S();
  CHECK((s - s).is_zero());
  CHECK(s + (-s) == GradedCharacter::zero(t()));

  // multiplication against the printed square
  CHECK(dec(s * s) == decomposition_from(TableId::WE6, {{0, {{1, 1}}},
                                                        {1, {{1, 2}, {3, 2}}},
                                                        {2, {{1, 4}, {3, 2}, {9, 1}, {10, 1}}},
                                                        {3, {{1, 2}, {3, 2}}},
                                                        {4, {{1, 1}}}}));

  GradedCharacter other = GradedCharacter::unit(derive_class_sizes(load_z2s3s3_table()));
  CHECK_THROWS_AS(other + S(), TableMismatch);
}

TEST_CASE("adams operations") {
  const GradedCharacter chi3 =
      GradedCharacter::from_class_function(ClassFunction::irrep(t(), 3));
  CHECK(adams(t(), chi3, 1) == chi3);
  const GradedCharacter triv = GradedCharacter::unit(t());
  for (long m : {2L, 3L, 5L, 6L}) CHECK(adams(t(), triv, m) == triv);

  // psi_2(chi3) at class 9 reads chi3 at the square class 3
  const GradedCharacter a2 = adams(t(), chi3, 2);
  CHECK(a2.term(0).at(9) == t().chi(3, 3));
  CHECK(a2.term(0).at(9) == -2);

  // degree moves d -> m d
  const GradedCharacter shifted = chi3.shifted(2);
  CHECK(adams(t(), shifted, 3).term(6).at(1) == t().chi(3, 1));
}

TEST_CASE("symmetric powers") {
  const GradedCharacter s = S();
  CHECK(sym_power(t(), s, 0) == GradedCharacter::unit(t()));
  CHECK(sym_power(t(), s, 1) == s);
  CHECK(sym_power(t(), GradedCharacter::unit(t()), 4) == GradedCharacter::unit(t()));

  // the printed symmetric square
  CHECK(dec(sym_power(t(), s, 2)) ==
        decomposition_from(TableId::WE6, {{0, {{1, 1}}},
                                          {1, {{1, 1}, {3, 1}}},
                                          {2, {{1, 3}, {3, 1}, {10, 1}}},
                                          {3, {{1, 1}, {3, 1}}},
                                          {4, {{1, 1}}}}));

  // Sym^2(chi3) forced two ways: by the Newton recursion and by expanding
  // the sum axiom on the L^2 coefficient of Sym^2(S)
  const GradedCharacter chi3 =
      GradedCharacter::from_class_function(ClassFunction::irrep(t(), 3), 0, true);
  CHECK(dec(sym_power(t(), chi3, 2)) ==
        decomposition_from(TableId::WE6, {{0, {{1, 1}, {10, 1}}}}));
  {
    const ClassFunction sym2_s_deg2 = sym_power(t(), s, 2).term(2);
    // L^2 coefficient = 1 (from 1 * L^2) + Sym^2(1 + chi3)
    ClassFunction v = ClassFunction::irrep(t(), 3) + ClassFunction::trivial(t());
    GradedCharacter vg = GradedCharacter::from_class_function(v);
    const ClassFunction sym2_v = sym_power(t(), vg, 2).term(0);
    CHECK(sym2_s_deg2 == sym2_v + ClassFunction::trivial(t()));
  }
}

TEST_CASE("decompose and reconstruct") {
  const GradedCharacter z = ctx().motives().Z();
  CHECK(dec(z) == decomposition_from(TableId::WE6,
                                     {{0, {{1, 1}, {3, 1}, {8, 1}, {10, 1}, {16, 1}}}}));

  // regular character decomposes with multiplicities equal to dimensions
  ClassFunction reg = ClassFunction::zero(t());
  reg.v(0) = Rational(t().group_order);
  const IrrepDecomposition dreg = dec(GradedCharacter::from_class_function(reg));
  for (int i = 1; i <= 25; ++i) CHECK(dreg.terms.at(0).at(i) == t().chi(i, 1));

  // effective flag turns fractional multiplicities into errors
  ClassFunction half = ClassFunction::zero(t());
  half.v(0) = Rational(1, 2);
  GradedCharacter bad = GradedCharacter::from_class_function(half, 0, true);
  CHECK_THROWS_AS(decompose(t(), bad), NonIntegralDecomposition);
  bad.effective = false;
  CHECK(decompose(t(), bad).terms.at(0).size() == 25);
}

TEST_CASE("evaluations") {
  const GradedCharacter z = ctx().motives().Z();
  CHECK(dimension(z) == 72);
  CHECK(dimension(S()) == 9);
  CHECK(mod_L(t(), S()) == ClassFunction::trivial(t()));

  // dimension is multiplicative
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const GradedCharacter x = random_graded(rng), y = random_graded(rng);
    CHECK(dimension(x * y) == dimension(x) * dimension(y));
    ClassFunction l1 = evaluate_L1(t(), x * y);
    CHECK(l1.at(1) == dimension(x * y));
  }
}

TEST_CASE("negative degrees are representable") {
  const GradedCharacter linv = GradedCharacter::lefschetz_power(t(), -1);
  CHECK(linv * GradedCharacter::lefschetz_power(t(), 1) == GradedCharacter::unit(t()));
  const GradedCharacter x = S().shifted(-2);
  CHECK(x.min_degree() == -2);
  CHECK(x.shifted(2) == S());
  CHECK(adams(t(), x, 2).min_degree() == -4);
  CHECK(sym_power(t(), x, 2) == sym_power(t(), S(), 2).shifted(-4));
}

TEST_CASE("pretty printer and json") {
  const IrrepDecomposition d = dec(S());
  CHECK(d.pretty().find("L^2") != std::string::npos);
  CHECK(d.json() == R"({"0":{"chi1":1},"1":{"chi1":1,"chi3":1},"2":{"chi1":1}})");
  CHECK(d.integral());
}

TEST_CASE("sum axiom property") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedCharacter x = random_graded(rng), y = random_graded(rng);
    const int n = 1 + trial % 5;
    GradedCharacter rhs = GradedCharacter::zero(t());
    for (int i = 0; i <= n; ++i) rhs += sym_power(t(), x, i) * sym_power(t(), y, n - i);
    CHECK(sym_power(t(), x + y, n) == rhs);
  }
}

TEST_CASE("lefschetz twist property") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedCharacter x = random_graded(rng);
    const int m = 1 + trial % 4, n = 1 + trial % 5;
    CHECK(sym_power(t(), x.shifted(m), n) == sym_power(t(), x, n).shifted(n * m));
  }
}

TEST_CASE("sym of negation inverts the series") {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedCharacter x = random_graded(rng);
    const int n = 1 + trial % 5;
    GradedCharacter acc = GradedCharacter::zero(t());
    for (int i = 0; i <= n; ++i) acc += sym_power(t(), x, i) * sym_power(t(), -x, n - i);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("decompose round trip") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedCharacter x = random_graded(rng);
    CHECK(reconstruct(t(), decompose(t(), x)) == x);
  }
}
