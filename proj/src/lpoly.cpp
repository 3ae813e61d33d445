#include "cubics/lpoly.hpp"

#include <sstream>

#include "cubics/errors.hpp"

namespace cubics {

LPoly LPoly::monomial(int power, const Rational& a) {
  LPoly p;
  if (a == 0) return p;
  p.c_.assign(power + 1, Rational(0));
  p.c_[power] = a;
  return p;
}

Rational LPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return Rational(0);
  return c_[power];
}

const Rational& LPoly::leading() const {
  if (is_zero()) throw Error("LPoly::leading on zero polynomial");
  return c_.back();
}

int LPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

void LPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

LPoly operator-(const LPoly& a) {
  LPoly r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

LPoly operator*(const Rational& s, const LPoly& a) {
  LPoly r;
  if (s == 0) return r;
  r.c_ = a.c_;
  for (auto& v : r.c_) v *= s;
  return r;
}

LPoly LPoly::shifted(int power) const {
  if (is_zero()) return LPoly();
  LPoly r;
  r.c_.assign(c_.size() + power, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k + power] = c_[k];
  return r;
}

Rational LPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string LPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& a = c_[k];
    if (a == 0) continue;
    Rational mag = a < 0 ? Rational(-a) : a;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

void divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r) {
  if (b.is_zero()) throw Error("LPoly division by zero");
  q = LPoly();
  r = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const Rational f = r.leading() / lb;
    q += LPoly::monomial(shift, f);
    r -= f * b.shifted(shift);
  }
}

LPoly div_exact(const LPoly& a, const LPoly& b) {
  LPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero())
    throw InexactDivision("LPoly div_exact: remainder " + r.str());
  return q;
}

Int denominator_lcm(const LPoly& p) {
  Int l = 1;
  for (const auto& a : p.coeffs())
    if (a != 0) l = boost::multiprecision::lcm(l, denominator(a));
  return l;
}

Int integer_content(const LPoly& p) {
  Int g = 0;
  for (const auto& a : p.coeffs()) {
    if (a == 0) continue;
    if (!is_integer(a)) throw Error("integer_content on non-integer polynomial");
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(a)));
  }
  return g;
}

LPoly poly_gcd(LPoly a, LPoly b) {
  while (!b.is_zero()) {
    LPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  // normalize: integer coefficients, content one, positive leading coefficient
  LPoly g = Rational(denominator_lcm(a)) * a;
  Int content = integer_content(g);
  if (content != 0) g = Rational(Int(1), content) * g;
  if (g.leading() < 0) g = Rational(-1) * g;
  return g;
}

}  // namespace cubics
