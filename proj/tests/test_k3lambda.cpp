#include <doctest.h>

#include <random>

#include "cubics/context.hpp"
#include "cubics/errors.hpp"
#include "cubics/k3lambda.hpp"

using namespace cubics;

namespace {

Context& ctx() { return Context::get(); }

K3Poly kp(std::initializer_list<std::pair<K3Poly, LPoly>> parts) {
  K3Poly p;
  for (const auto& [gen, coeff] : parts) p += lpoly_times(coeff, gen);
  return p;
}

}  // namespace

TEST_CASE("free ring arithmetic") {
  const K3Poly k1 = K3Poly::k(1), k2 = K3Poly::k(2);
  CHECK(k1 * k2 == k2 * k1);
  CHECK((k1 - k1).is_zero());
  CHECK(K3Poly::one().shifted(3) == K3Poly::constant(LPoly::monomial(3)));
  CHECK((k1 * k1).str().find("k1*k1") != std::string::npos);
  CHECK_THROWS_AS(K3Poly::k(5), UnsupportedDegree);
}

TEST_CASE("symmetric powers of twisted generators") {
  // Sym^n(L^m k1) = L^{nm} k_n
  CHECK(sym_power_free(K3Poly::k(1).shifted(1), 2) == K3Poly::k(2).shifted(2));
  CHECK(sym_power_free(K3Poly::k(1).shifted(2), 3) == K3Poly::k(3).shifted(6));
  CHECK(sym_power_free(K3Poly::k(1), 0) == K3Poly::one());
  CHECK(sym_power_free(K3Poly::k(1), 1) == K3Poly::k(1));
  CHECK_THROWS_AS(sym_power_free(K3Poly::k(1), 5), UnsupportedDegree);
  CHECK_THROWS_AS(sym_power_free(K3Poly::k(2), 2), Error);

  // constants go through multiset counting: Sym^2(2) = 3, Sym^3(2) = 4
  CHECK(sym_power_free(K3Poly::constant(LPoly(2)), 2) == K3Poly::constant(LPoly(3)));
  CHECK(sym_power_free(K3Poly::constant(LPoly(2)), 3) == K3Poly::constant(LPoly(4)));
}

TEST_CASE("fourfold expansions match the displayed ones") {
  const FourfoldClasses f = fourfold_classes();
  const K3Poly one = K3Poly::one(), k1 = K3Poly::k(1), k2 = K3Poly::k(2), k3 = K3Poly::k(3),
               k4 = K3Poly::k(4);

  CHECK(f.Y == kp({{k1, LPoly{0, 1}}, {one, LPoly{1, 0, 1, 0, 1}}}));
  CHECK(f.F == kp({{k2, LPoly{1}}, {k1, LPoly{0, 1}}}));

  CHECK(f.Ysym2 == kp({{k2, LPoly{0, 0, 1}},
                       {k1, LPoly{0, 1, 0, 1, 0, 1}},
                       {one, LPoly{1, 0, 1, 0, 2, 0, 1, 0, 1}}}));
  CHECK(f.Y2 == kp({{k1 * k1, LPoly{0, 0, 1}},
                    {k1, LPoly{0, 2, 0, 2, 0, 2}},
                    {one, LPoly{1, 0, 2, 0, 3, 0, 2, 0, 1}}}));
  CHECK(f.Ysym3 == kp({{k3, LPoly{0, 0, 0, 1}},
                       {k2, LPoly{0, 0, 1, 0, 1, 0, 1}},
                       {k1, LPoly{0, 1, 0, 1, 0, 2, 0, 1, 0, 1}},
                       {one, LPoly{1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 1, 0, 1}}}));
  CHECK(f.YxYsym2 == kp({{k1 * k2, LPoly{0, 0, 0, 1}},
                         {k2, LPoly{0, 0, 1, 0, 1, 0, 1}},
                         {k1 * k1, LPoly{0, 0, 1, 0, 1, 0, 1}},
                         {k1, LPoly{0, 2, 0, 3, 0, 5, 0, 3, 0, 2}},
                         {one, LPoly{1, 0, 2, 0, 4, 0, 4, 0, 4, 0, 2, 0, 1}}}));
  CHECK(f.Ysym4 == kp({{k4, LPoly{0, 0, 0, 0, 1}},
                       {k3, LPoly{0, 0, 0, 1, 0, 1, 0, 1}},
                       {k2, LPoly{0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1}},
                       {k1, LPoly{0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 1, 0, 1}},
                       {one, LPoly{1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 2, 0, 2, 0, 1, 0, 1}}}));
}

TEST_CASE("two-point relation in the free ring") {
  CHECK(yfy_fourfold_residual().is_zero());
}

TEST_CASE("derived relation") {
  const FourfoldRelation rel = derive_fourfold_relation();
  CHECK(rel.funcfield_nullity == 1);
  CHECK(rel.residual_zero);
  CHECK(rel.relation.coeff_of("Z") == LPoly::monomial(4));
  CHECK(rel.relation.coeff_of("Y^(4)") == LPoly{-1});
  // reduction modulo L has the forbidden shape of the surface case
  ModLReport ml = modl_obstruction(rel.relation);
  std::map<std::string, Rational> c(ml.congruence.begin(), ml.congruence.end());
  CHECK(c == std::map<std::string, Rational>{{"Y^(4)", -1}, {"Y^(3)", 1}});
  CHECK(ml.forbidden_shape);
  CHECK(ml.pivot == "Y^(3)");
}

TEST_CASE("substitution oracle") {
  const CharacterTable& t = ctx().e6();
  const GradedCharacter& s = ctx().motives().S();
  const FourfoldClasses f = fourfold_classes();

  // free and character-level symmetric powers agree after substitution
  const GradedCharacter y = substitute(t, f.Y, s);
  for (int n = 2; n <= 4; ++n)
    CHECK(substitute(t, sym_power_free(f.Y, n), s) == sym_power(t, y, n));

  // the derived relation substitutes to the zero graded character
  const FourfoldRelation rel = derive_fourfold_relation();
  const std::vector<const K3Poly*> order = {&f.one, &f.Y,       &f.Y2,    &f.Ysym2,
                                            &f.Ysym3, &f.YxYsym2, &f.Ysym4, &f.Z};
  GradedCharacter residual = GradedCharacter::zero(t);
  for (std::size_t i = 0; i < order.size(); ++i)
    residual += lpoly_times(rel.relation.coeffs[i], substitute(t, *order[i], s));
  CHECK(residual.is_zero());

  // the two-point relation substitutes to zero as well
  GradedCharacter yfy = substitute(t, yfy_fourfold_residual(), s);
  CHECK(yfy.is_zero());
}

TEST_CASE("categorical evaluation") {
  CHECK(gk_sym2(0) == 0);
  CHECK(gk_sym2(1) == 2);
  for (long m = 0; m <= 20; ++m) {
    // points of two unordered points on m points: C(m,2) + m
    CHECK(gk_sym2(Int(m)) - m == Int(m) * (m - 1) / 2 + m);
  }

  // L -> 1 turns the projective-space class into its point count
  const CharacterTable& t = ctx().e6();
  for (int d = 0; d <= 4; ++d) {
    GradedCharacter pd = GradedCharacter::zero(t);
    for (int i = 0; i <= d; ++i) pd += GradedCharacter::lefschetz_power(t, i);
    const ClassFunction v = cat_eval(t, pd);
    CHECK(v.at(1) == d + 1);
  }
  CHECK(cat_eval(kp({{K3Poly::k(1), LPoly{0, 1, 1}}})) ==
        kp({{K3Poly::k(1), LPoly(2)}}));
}

TEST_CASE("sum axiom in the free ring") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> c(0, 2), d(0, 2), sign(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto rand_poly = [&](bool allow_virtual) {
      K3Poly p;
      for (int i = 0; i < 2; ++i) {
        int coeff = c(rng);
        if (allow_virtual && sign(rng)) coeff = -coeff;
        p += lpoly_times(LPoly::monomial(d(rng), coeff), K3Poly::one());
        p += lpoly_times(LPoly::monomial(d(rng), c(rng)), K3Poly::k(1));
      }
      return p;
    };
    const K3Poly x = rand_poly(trial % 2 == 0), y = rand_poly(false);
    const int n = 1 + trial % 3;
    K3Poly rhs;
    for (int i = 0; i <= n; ++i) rhs += sym_power_free(x, i) * sym_power_free(y, n - i);
    CHECK(sym_power_free(x + y, n) == rhs);
  }
}

TEST_CASE("lefschetz twist in the free ring") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> c(0, 2), d(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    K3Poly x;
    x += lpoly_times(LPoly::monomial(d(rng), c(rng)), K3Poly::one());
    x += lpoly_times(LPoly::monomial(d(rng), c(rng)), K3Poly::k(1));
    const int m = 1 + trial % 3, n = 1 + trial % 4;
    CHECK(sym_power_free(x.shifted(m), n) == sym_power_free(x, n).shifted(n * m));
  }
}
