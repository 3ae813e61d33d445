#include "cubics/k3lambda.hpp"

#include <set>
#include <sstream>
#include <vector>

#include "cubics/errors.hpp"
#include "cubics/kernels.hpp"
#include "cubics/series.hpp"

namespace cubics {

std::string K3Mono::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < e[i]; ++j) {
      if (!first) os << "*";
      first = false;
      os << "k" << (i + 1);
    }
  }
  return first ? "1" : os.str();
}

K3Poly K3Poly::one() { return constant(LPoly(1)); }

K3Poly K3Poly::constant(const LPoly& p) {
  K3Poly r;
  if (!p.is_zero()) r.terms.emplace(K3Mono{}, p);
  return r;
}

K3Poly K3Poly::k(int n) {
  if (n < 1 || n > 4) throw UnsupportedDegree("k(n): n must be 1..4");
  K3Mono m;
  m.e[n - 1] = 1;
  K3Poly r;
  r.terms.emplace(m, LPoly(1));
  return r;
}

bool K3Poly::is_zero() const {
  for (const auto& [m, p] : terms)
    if (!p.is_zero()) return false;
  return true;
}

K3Poly& K3Poly::operator+=(const K3Poly& o) {
  for (const auto& [m, p] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end())
      terms.emplace(m, p);
    else {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

K3Poly& K3Poly::operator-=(const K3Poly& o) {
  for (const auto& [m, p] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end())
      terms.emplace(m, Rational(-1) * p);
    else {
      it->second -= p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

K3Poly operator*(const K3Poly& a, const K3Poly& b) {
  K3Poly r;
  for (const auto& [m1, p1] : a.terms)
    for (const auto& [m2, p2] : b.terms) {
      K3Mono m;
      for (int i = 0; i < 4; ++i) m.e[i] = m1.e[i] + m2.e[i];
      LPoly prod = p1 * p2;
      auto it = r.terms.find(m);
      if (it == r.terms.end())
        r.terms.emplace(m, std::move(prod));
      else {
        it->second += prod;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

bool operator==(const K3Poly& a, const K3Poly& b) {
  K3Poly d = a;
  d -= b;
  return d.is_zero();
}

K3Poly K3Poly::shifted(int d) const {
  K3Poly r;
  for (const auto& [m, p] : terms) r.terms.emplace(m, p.shifted(d));
  return r;
}

std::string K3Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, p] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")";
    if (m != K3Mono{}) os << "*" << m.str();
  }
  return os.str();
}

K3Poly lpoly_times(const LPoly& p, const K3Poly& x) {
  K3Poly r;
  for (const auto& [m, q] : x.terms) {
    LPoly prod = p * q;
    if (!prod.is_zero()) r.terms.emplace(m, std::move(prod));
  }
  return r;
}

K3Poly sym_power_free(const K3Poly& p, int n) {
  if (n < 0) throw UnsupportedDegree("sym_power_free: negative degree");
  if (n > 4) throw UnsupportedDegree("sym_power_free: degree > 4 not supported");

  TruncSeries<K3Poly> total(n + 1);
  total[0] = K3Poly::one();
  const K3Mono kOne{};
  K3Mono k1;
  k1.e[0] = 1;

  for (const auto& [mono, coeff] : p.terms) {
    const bool is_const = (mono == kOne);
    const bool is_k1 = (mono == k1);
    if (!is_const && !is_k1)
      throw Error("sym_power_free: argument must be linear in k1, found " + mono.str());
    for (int d = 0; d <= coeff.degree(); ++d) {
      const Rational c = coeff.coeff(d);
      if (c == 0) continue;
      const Int ci = to_int(c);
      TruncSeries<K3Poly> atom(n + 1);
      for (int j = 0; j <= n; ++j) {
        if (is_const)
          atom[j] = K3Poly::constant(LPoly::monomial(j * d));
        else
          atom[j] = (j == 0 ? K3Poly::one() : K3Poly::k(j).shifted(j * d));
      }
      total = series_mul(total, series_pow(atom, static_cast<long>(ci), n), n);
    }
  }
  return total[n];
}

FourfoldClasses fourfold_classes() {
  FourfoldClasses f;
  f.one = K3Poly::one();
  f.Y = K3Poly::constant(LPoly{1, 0, 1, 0, 1}) + K3Poly::k(1).shifted(1);
  f.Y2 = f.Y * f.Y;
  f.Ysym2 = sym_power_free(f.Y, 2);
  f.Ysym3 = sym_power_free(f.Y, 3);
  f.YxYsym2 = f.Y * f.Ysym2;
  f.Ysym4 = sym_power_free(f.Y, 4);
  f.F = K3Poly::k(2) + K3Poly::k(1).shifted(1);
  // Hilb-form expansion of four points on the K3 surface
  f.Z = K3Poly::k(4) + (K3Poly::k(1) * K3Poly::k(2)).shifted(1) + K3Poly::k(2).shifted(2) +
        (K3Poly::k(1) * K3Poly::k(1)).shifted(2) + K3Poly::k(1).shifted(3);
  return f;
}

K3Poly yfy_fourfold_residual() {
  const FourfoldClasses f = fourfold_classes();
  return f.Ysym2 - lpoly_times(LPoly{1, 0, 0, 0, 1}, f.Y) - f.F.shifted(2);
}

FourfoldRelation derive_fourfold_relation() {
  const FourfoldClasses f = fourfold_classes();
  const std::vector<std::pair<std::string, const K3Poly*>> classes = {
      {"1", &f.one},     {"Y", &f.Y},           {"Y^2", &f.Y2},    {"Y^(2)", &f.Ysym2},
      {"Y^(3)", &f.Ysym3}, {"Y*Y^(2)", &f.YxYsym2}, {"Y^(4)", &f.Ysym4}, {"Z", &f.Z}};

  std::set<K3Mono> monos;
  for (const auto& [name, poly] : classes)
    for (const auto& [m, p] : poly->terms) monos.insert(m);

  Mat<LPoly> a(static_cast<int>(monos.size()), static_cast<int>(classes.size()));
  int row = 0;
  for (const auto& m : monos) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      auto it = classes[j].second->terms.find(m);
      a(row, static_cast<int>(j)) = it == classes[j].second->terms.end() ? LPoly() : it->second;
    }
    ++row;
  }

  auto ker = kernel_bareiss<LPoly>(std::move(a));
  if (ker.basis.size() != 1)
    throw UnexpectedNullity("fourfold relation space has dimension " +
                            std::to_string(ker.basis.size()) + " over Q(L)");

  FourfoldRelation out;
  out.funcfield_nullity = 1;
  RelationVector rel;
  for (const auto& [name, poly] : classes) rel.labels.push_back(name);
  rel.coeffs.assign(ker.basis[0].data(), ker.basis[0].data() + ker.basis[0].size());
  out.relation = minimize(std::move(rel));  // distinguished: last nonzero = Z

  K3Poly residual;
  for (std::size_t j = 0; j < classes.size(); ++j)
    residual += lpoly_times(out.relation.coeffs[j], *classes[j].second);
  out.residual_zero = residual.is_zero();
  return out;
}

GradedCharacter substitute(const CharacterTable& t, const K3Poly& p, const GradedCharacter& x) {
  std::array<GradedCharacter, 5> sym{GradedCharacter::unit(t), x, sym_power(t, x, 2),
                                     sym_power(t, x, 3), sym_power(t, x, 4)};
  GradedCharacter out = GradedCharacter::zero(t);
  for (const auto& [m, coeff] : p.terms) {
    GradedCharacter term = GradedCharacter::unit(t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < m.e[i]; ++j) term = term * sym[i + 1];
    out += lpoly_times(coeff, term);
  }
  return out;
}

Int gk_sym2(const Int& m) { return m * (m - 1) / 2 + 2 * m; }

K3Poly cat_eval(const K3Poly& p) {
  K3Poly r;
  for (const auto& [m, coeff] : p.terms) {
    const Rational v = coeff.eval(1);
    if (v != 0) r.terms.emplace(m, LPoly(v));
  }
  return r;
}

ClassFunction cat_eval(const CharacterTable& t, const GradedCharacter& x) {
  return evaluate_L1(t, x);
}

}  // namespace cubics
