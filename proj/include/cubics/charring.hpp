#pragma once

#include <map>
#include <string>

#include "cubics/chartable.hpp"
#include "cubics/lpoly.hpp"

namespace cubics {

/// Element of the graded virtual-character ring Rep(G)[L, L^-1]: a finitely
/// supported map from L-degree to a class function. Zero coefficients are
/// never stored. The `effective` flag marks classes built from genuine
/// actions; decompose() enforces non-negative integer multiplicities for
/// them.
struct GradedCharacter {
  TableId table = TableId::WE6;
  int nclasses = 0;
  bool effective = false;
  std::map<int, ClassFunction> terms;

  static GradedCharacter zero(const CharacterTable& t);
  static GradedCharacter unit(const CharacterTable& t);  // 1 at degree 0
  static GradedCharacter lefschetz_power(const CharacterTable& t, int d);
  static GradedCharacter from_class_function(ClassFunction f, int degree = 0,
                                             bool effective = false);

  bool is_zero() const { return terms.empty(); }
  int min_degree() const;  // 0 for zero element
  int max_degree() const;
  /// Coefficient of L^d (zero class function when absent).
  ClassFunction term(int d) const;

  GradedCharacter& operator+=(const GradedCharacter& o);
  GradedCharacter& operator-=(const GradedCharacter& o);
  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
  friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) { return a -= b; }
  friend GradedCharacter operator-(const GradedCharacter& a);
  friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b);
  friend GradedCharacter operator*(const Rational& s, GradedCharacter a);
  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);

  GradedCharacter shifted(int d) const;  // multiply by L^d

 private:
  void insert_term(int d, ClassFunction f);
};

/// p(L) * x.
GradedCharacter lpoly_times(const LPoly& p, const GradedCharacter& x);

/// Adams operation: degree d moves to d*m, values are composed with the
/// power maps of the table.
GradedCharacter adams(const CharacterTable& t, const GradedCharacter& x, long m);

/// Symmetric power through the Newton recursion
///   n h_n = sum_{m=1..n} psi_m(x) h_{n-m};
/// valid for virtual arguments and compatible with Sym^n(L^m a) = L^{nm} Sym^n(a).
GradedCharacter sym_power(const CharacterTable& t, const GradedCharacter& x, int n);

/// Irreducible decomposition per degree; multiplicities are exact rationals
/// (integers for honest virtual characters).
struct IrrepDecomposition {
  TableId table = TableId::WE6;
  std::map<int, std::map<int, Rational>> terms;  // degree -> irrep index -> multiplicity

  bool integral() const;
  bool operator==(const IrrepDecomposition& o) const {
    return table == o.table && terms == o.terms;
  }

  /// Display-style rendering: 1 + (1 + x3)L + (3 + x3 + x10)L^2 + ...
  std::string pretty() const;
  std::string json() const;  // {"0": {"chi1": 1}, ...}
};

IrrepDecomposition decompose(const CharacterTable& t, const GradedCharacter& x);
GradedCharacter reconstruct(const CharacterTable& t, const IrrepDecomposition& d);

/// Convenience for golden tests: build a decomposition from integer data.
IrrepDecomposition decomposition_from(TableId table,
                                      const std::map<int, std::map<int, long>>& data);

Rational dimension(const GradedCharacter& x);                       // at L=1, identity class
ClassFunction evaluate_L1(const CharacterTable& t, const GradedCharacter& x);
ClassFunction mod_L(const CharacterTable& t, const GradedCharacter& x);  // degree-0 term

}  // namespace cubics
