#pragma once

#include <array>
#include <map>
#include <string>

#include "cubics/charring.hpp"
#include "cubics/lpoly.hpp"
#include "cubics/relfind.hpp"

namespace cubics {

/// Monomial in the free symmetric-power generators k1..k4 (k_n stands for
/// the n-th symmetric power of the K3 class; k1^2 and k2 stay distinct).
struct K3Mono {
  std::array<int, 4> e{0, 0, 0, 0};
  friend auto operator<=>(const K3Mono&, const K3Mono&) = default;
  std::string str() const;
};

/// Polynomial over Q[L] in the free generators.
struct K3Poly {
  std::map<K3Mono, LPoly> terms;

  static K3Poly zero() { return {}; }
  static K3Poly one();
  static K3Poly constant(const LPoly& p);
  static K3Poly k(int n);  // generator k_n, 1 <= n <= 4

  bool is_zero() const;

  K3Poly& operator+=(const K3Poly& o);
  K3Poly& operator-=(const K3Poly& o);
  friend K3Poly operator+(K3Poly a, const K3Poly& b) { return a += b; }
  friend K3Poly operator-(K3Poly a, const K3Poly& b) { return a -= b; }
  friend K3Poly operator*(const K3Poly& a, const K3Poly& b);
  friend bool operator==(const K3Poly& a, const K3Poly& b);

  K3Poly shifted(int d) const;  // multiply by L^d
  std::string str() const;
};

K3Poly lpoly_times(const LPoly& p, const K3Poly& x);

/// Symmetric power in the free pre-lambda ring. The argument must be linear
/// in k1 with integer constant coefficients (which covers the fourfold class
/// and everything derived from it); Sym^n(L^m k1) = L^{nm} k_n, constants go
/// through multiset counting, negative summands through the series inverse.
/// Throws UnsupportedDegree for n > 4.
K3Poly sym_power_free(const K3Poly& p, int n);

/// The named classes of the fourfold calculus under the K3 assumption
/// [Y] = L k1 + 1 + L^2 + L^4.
struct FourfoldClasses {
  K3Poly one, Y, Y2, Ysym2, Ysym3, YxYsym2, Ysym4, F, Z;
};

FourfoldClasses fourfold_classes();

/// Residual of [Y^(2)] - (1 + L^4)[Y] - L^2 [F(Y)]; zero when the
/// two-point relation holds in the free ring.
K3Poly yfy_fourfold_residual();

struct FourfoldRelation {
  RelationVector relation;   // minimized, Z coefficient positive
  int funcfield_nullity = 1;
  bool residual_zero = false;
};

/// Nullspace search over {1, Y, Y^2, Y^(2), Y^(3), Y*Y^(2), Y^(4), Z(Y)}
/// with polynomial coefficients in L. Throws UnexpectedNullity when the
/// kernel over rational functions in L is not one-dimensional.
FourfoldRelation derive_fourfold_relation();

/// Substitute k_n -> Sym^n(x) (and L-powers into degree shifts) into a free
/// polynomial; turns every free-ring identity into a graded-character one.
GradedCharacter substitute(const CharacterTable& t, const K3Poly& p, const GradedCharacter& x);

/// Symmetric square in the Grothendieck ring of categories on integers:
/// Sym^2_GK(m) = C(m,2) + 2m.
Int gk_sym2(const Int& m);

/// Evaluation L -> 1.
K3Poly cat_eval(const K3Poly& p);
ClassFunction cat_eval(const CharacterTable& t, const GradedCharacter& x);

}  // namespace cubics
