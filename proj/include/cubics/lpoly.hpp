#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cubics/numeric.hpp"

namespace cubics {

/// Polynomial in the Lefschetz variable L with rational coefficients.
/// Coefficients are stored densely by ascending power; no trailing zeros.
class LPoly {
 public:
  LPoly() = default;
  LPoly(int v) : LPoly(Rational(v)) {}
  LPoly(const Rational& v) {
    if (v != 0) c_.push_back(v);
  }
  LPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

  static LPoly monomial(int power, const Rational& a = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int power) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational constant_term() const { return coeff(0); }
  const Rational& leading() const;
  int valuation() const;  // smallest power with nonzero coefficient; -1 for zero

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator-(const LPoly& a);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const Rational& s, const LPoly& a);
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

  LPoly shifted(int power) const;  // multiply by L^power
  Rational eval(const Rational& x) const;

  std::string str(const std::string& var = "L") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact polynomial division; throws InexactDivision if b does not divide a.
LPoly div_exact(const LPoly& a, const LPoly& b);

/// Division with remainder over the rationals: a = q*b + r, deg r < deg b.
void divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r);

/// GCD, normalized to integer coefficients, content 1, positive leading coefficient.
LPoly poly_gcd(LPoly a, LPoly b);

/// lcm of coefficient denominators.
Int denominator_lcm(const LPoly& p);

/// gcd of coefficient numerators for an integer-coefficient polynomial.
Int integer_content(const LPoly& p);

}  // namespace cubics

// Minimal NumTraits so LPoly can live in Eigen matrices.
namespace Eigen {
template <>
struct NumTraits<cubics::LPoly> {
  using Real = cubics::LPoly;
  using NonInteger = cubics::LPoly;
  using Nested = cubics::LPoly;
  using Literal = cubics::LPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
