#include <doctest.h>

#include "cubics/context.hpp"
#include "cubics/errors.hpp"
#include "cubics/motives.hpp"

using namespace cubics;

namespace {

Context& ctx() { return Context::get(); }
const CharacterTable& t() { return ctx().e6(); }
Motives& mo() { return ctx().motives(); }

IrrepDecomposition dec(const GradedCharacter& x) { return decompose(t(), x); }

Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// test-only oracle: the generating series of Hilbert scheme classes as the
// product over i of the symmetric-power series evaluated at L^{i-1} t^i,
// expanded directly with graded-character coefficients
std::vector<GradedCharacter> hilb_series_oracle(int nmax) {
  std::vector<GradedCharacter> out(nmax + 1, GradedCharacter::zero(t()));
  out[0] = GradedCharacter::unit(t());
  for (int i = 1; i <= nmax; ++i) {
    // factor Z(S, L^{i-1} t^i) = sum_j Sym^j(S) L^{j(i-1)} t^{ij}
    std::vector<GradedCharacter> factor(nmax + 1, GradedCharacter::zero(t()));
    factor[0] = GradedCharacter::unit(t());
    for (int j = 1; i * j <= nmax; ++j)
      factor[i * j] = mo().sym_class(j).shifted(j * (i - 1));
    std::vector<GradedCharacter> next(nmax + 1, GradedCharacter::zero(t()));
    for (int a = 0; a <= nmax; ++a)
      for (int b = 0; a + b <= nmax; ++b) next[a + b] += out[a] * factor[b];
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("surface class and the zero-dimensional classes") {
  CHECK(dec(mo().S()) == decomposition_from(TableId::WE6, {{0, {{1, 1}}},
                                                           {1, {{1, 1}, {3, 1}}},
                                                           {2, {{1, 1}}}}));
  CHECK(dimension(mo().S()) == 9);
  CHECK(mod_L(t(), mo().S()) == ClassFunction::trivial(t()));

  CHECK(dec(mo().F()) == decomposition_from(TableId::WE6, {{0, {{1, 1}, {3, 1}, {10, 1}}}}));
  CHECK(dimension(mo().F()) == 27);
  CHECK(dec(mo().Z()) ==
        decomposition_from(TableId::WE6, {{0, {{1, 1}, {3, 1}, {8, 1}, {10, 1}, {16, 1}}}}));
  CHECK(dec(mo().V()) == decomposition_from(TableId::WE6, {{0, {{1, 1}, {3, 1}}}}));
}

TEST_CASE("degree-3 classes") {
  CHECK(dec(mo().sym_class(3)) ==
        decomposition_from(TableId::WE6, {{0, {{1, 1}}},
                                          {1, {{1, 1}, {3, 1}}},
                                          {2, {{1, 3}, {3, 1}, {10, 1}}},
                                          {3, {{1, 3}, {3, 3}, {10, 2}, {16, 1}}},
                                          {4, {{1, 3}, {3, 1}, {10, 1}}},
                                          {5, {{1, 1}, {3, 1}}},
                                          {6, {{1, 1}}}}));
  const GradedCharacter sxs2 = mo().parse("S*S^(2)");
  CHECK(dec(sxs2).terms.at(3) ==
        std::map<int, Rational>{{1, 6}, {3, 7}, {9, 1}, {10, 3}, {16, 1}, {20, 1}});
  const GradedCharacter s3 = mo().parse("S^3");
  CHECK(dec(s3).terms.at(3) ==
        std::map<int, Rational>{{1, 10}, {3, 12}, {9, 3}, {10, 4}, {12, 1}, {16, 1}, {20, 2}});
  // the cube is palindromic: the printed display's last-but-one coefficient
  // is forced to 3 + 3 chi3 by multiplicativity
  CHECK(dec(s3).terms.at(5) == dec(s3).terms.at(1));
  CHECK(dec(s3).terms.at(1) == std::map<int, Rational>{{1, 3}, {3, 3}});
}

TEST_CASE("degree-4 classes") {
  CHECK(dec(mo().sym_class(4)).terms.at(4) ==
        std::map<int, Rational>{{1, 6}, {3, 4}, {8, 1}, {10, 5}, {16, 1}, {20, 1}});
  CHECK(dec(mo().parse("S^(2)*S^(2)")).terms.at(4) ==
        std::map<int, Rational>{
            {1, 17}, {3, 13}, {8, 1}, {9, 4}, {10, 13}, {13, 1}, {16, 3}, {17, 1}, {20, 4}, {23, 1}});
  CHECK(dec(mo().parse("S^4")).terms.at(4) ==
        std::map<int, Rational>{{1, 40},
                                {3, 41},
                                {7, 1},
                                {8, 1},
                                {9, 24},
                                {10, 29},
                                {12, 4},
                                {13, 2},
                                {16, 7},
                                {17, 2},
                                {20, 12},
                                {23, 3},
                                {25, 3}});
}

TEST_CASE("hilbert classes against the product-series oracle") {
  const auto series = hilb_series_oracle(4);
  for (int n = 1; n <= 4; ++n) CHECK(mo().hilb_class(n) == series[n]);

  CHECK(dec(mo().hilb_class(2)) ==
        decomposition_from(TableId::WE6, {{0, {{1, 1}}},
                                          {1, {{1, 2}, {3, 1}}},
                                          {2, {{1, 4}, {3, 2}, {10, 1}}},
                                          {3, {{1, 2}, {3, 1}}},
                                          {4, {{1, 1}}}}));

  // dimensions forced by the product series at L = 1
  CHECK(dimension(mo().hilb_class(2)) == 54);
  CHECK(dimension(mo().hilb_class(3)) == 255);
  CHECK(dimension(mo().hilb_class(4)) == 1035);

  // expansion through symmetric powers, the three displayed identities
  const GradedCharacter& s = mo().S();
  CHECK(mo().hilb_class(2) == mo().sym_class(2) + s.shifted(1));
  CHECK(mo().hilb_class(3) == mo().sym_class(3) + (s * s).shifted(1) + s.shifted(2));
  CHECK(mo().hilb_class(4) == mo().sym_class(4) + (s * mo().sym_class(2)).shifted(1) +
                                  mo().sym_class(2).shifted(2) + (s * s).shifted(2) +
                                  s.shifted(3));
}

TEST_CASE("palindromy of symmetric and hilbert classes") {
  for (int n = 1; n <= 5; ++n) {
    const IrrepDecomposition d = dec(mo().sym_class(n));
    for (const auto& [deg, row] : d.terms) CHECK(row == d.terms.at(2 * n - deg));
  }
  for (int n = 2; n <= 4; ++n) {
    const IrrepDecomposition d = dec(mo().hilb_class(n));
    for (const auto& [deg, row] : d.terms) CHECK(row == d.terms.at(2 * n - deg));
  }
}

TEST_CASE("dimensions of symmetric powers count multisets") {
  for (int n = 1; n <= 5; ++n)
    CHECK(dimension(mo().sym_class(n)) == binom(9 + n - 1, n));
}

TEST_CASE("monomial enumeration") {
  const auto monos = mo().monomials_up_to(4);
  CHECK(monos.size() == 12);  // partitions of 0..4
  CHECK(monos.front().name() == "1");
  CHECK(monos.back().name() == "S^(4)");

  const auto deg5 = mo().monomials_up_to(5);
  CHECK(deg5.size() == 19);
  CHECK(deg5.back().name() == "S^(5)");

  ClassMonomial m;
  m.parts = {1, 1, 2};
  CHECK(m.name() == "S^2*S^(2)");
  CHECK(m.degree() == 4);
  m.hilb = true;
  CHECK(m.name() == "S^2*S^[2]");

  CHECK(monomial_parts("S^2*S^(2)") == std::vector<int>{1, 1, 2});
  CHECK(monomial_parts("1") == std::vector<int>{});
  CHECK(!monomial_parts("Z").has_value());
}

TEST_CASE("name parser and degrees") {
  int deg = 0;
  mo().parse("S*S^(3)", &deg);
  CHECK(deg == 4);
  mo().parse("S^[4]", &deg);
  CHECK(deg == 4);
  mo().parse("F", &deg);
  CHECK(deg == 0);
  CHECK(mo().parse("S*S") == mo().parse("S^2"));
  CHECK(mo().parse("1") == GradedCharacter::unit(t()));
  CHECK_THROWS_AS(mo().parse("Q"), Error);

  const NamedClass nc = mo().named("S*S^(2)");
  CHECK(nc.formula_degree == 3);
  CHECK(nc.value == mo().parse("S") * mo().sym_class(2));
}

TEST_CASE("products add formula degrees") {
  auto cands = mo().candidate_set(4, true, true);
  CHECK(cands.size() == 14);  // 12 monomials + F + Z
  for (const auto& c : cands) {
    if (c.name == "F" || c.name == "Z") {
      CHECK(c.formula_degree == 0);
    } else {
      const auto parts = monomial_parts(c.name);
      REQUIRE(parts.has_value());
      int sum = 0;
      for (int p : *parts) sum += p;
      CHECK(c.formula_degree == sum);
    }
  }
}
