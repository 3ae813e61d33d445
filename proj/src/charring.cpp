#include "cubics/charring.hpp"

#include <sstream>

#include <json.hpp>

#include "cubics/errors.hpp"

namespace cubics {

GradedCharacter GradedCharacter::zero(const CharacterTable& t) {
  GradedCharacter x;
  x.table = t.id;
  x.nclasses = t.n;
  return x;
}

GradedCharacter GradedCharacter::unit(const CharacterTable& t) {
  GradedCharacter x = zero(t);
  x.effective = true;
  x.terms.emplace(0, ClassFunction::trivial(t));
  return x;
}

GradedCharacter GradedCharacter::lefschetz_power(const CharacterTable& t, int d) {
  GradedCharacter x = zero(t);
  x.effective = true;
  x.terms.emplace(d, ClassFunction::trivial(t));
  return x;
}

GradedCharacter GradedCharacter::from_class_function(ClassFunction f, int degree, bool effective) {
  GradedCharacter x;
  x.table = f.table;
  x.nclasses = f.size();
  x.effective = effective;
  if (!f.is_zero()) x.terms.emplace(degree, std::move(f));
  return x;
}

int GradedCharacter::min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
int GradedCharacter::max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }

ClassFunction GradedCharacter::term(int d) const {
  auto it = terms.find(d);
  if (it != terms.end()) return it->second;
  ClassFunction f;
  f.table = table;
  f.v = Vec<Rational>::Constant(nclasses, Rational(0));
  return f;
}

void GradedCharacter::insert_term(int d, ClassFunction f) {
  if (!f.is_zero()) terms.emplace(d, std::move(f));
}

namespace {
void check_tables(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.table != b.table || a.nclasses != b.nclasses)
    throw TableMismatch("graded characters over different tables");
}
}  // namespace

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  check_tables(*this, o);
  effective = effective && o.effective;
  for (const auto& [d, f] : o.terms) {
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms.emplace(d, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& o) {
  return *this += -o;
}

GradedCharacter operator-(const GradedCharacter& a) {
  GradedCharacter r = a;
  r.effective = false;
  for (auto& [d, f] : r.terms) f = Rational(-1) * f;
  return r;
}

GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
  check_tables(a, b);
  GradedCharacter r;
  r.table = a.table;
  r.nclasses = a.nclasses;
  r.effective = a.effective && b.effective;
  for (const auto& [da, fa] : a.terms)
    for (const auto& [db, fb] : b.terms) {
      ClassFunction prod = fa * fb;
      auto it = r.terms.find(da + db);
      if (it == r.terms.end()) {
        r.terms.emplace(da + db, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

GradedCharacter operator*(const Rational& s, GradedCharacter a) {
  if (s == 0) {
    a.terms.clear();
    return a;
  }
  for (auto& [d, f] : a.terms) f = s * f;
  if (s < 0) a.effective = false;
  return a;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  return a.table == b.table && a.terms == b.terms;
}

GradedCharacter GradedCharacter::shifted(int d) const {
  GradedCharacter r = *this;
  if (d == 0) return r;
  std::map<int, ClassFunction> shifted;
  for (auto& [deg, f] : r.terms) shifted.emplace(deg + d, std::move(f));
  r.terms = std::move(shifted);
  return r;
}

GradedCharacter lpoly_times(const LPoly& p, const GradedCharacter& x) {
  GradedCharacter r;
  r.table = x.table;
  r.nclasses = x.nclasses;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    r += p.coeff(k) * x.shifted(k);
  }
  return r;
}

GradedCharacter adams(const CharacterTable& t, const GradedCharacter& x, long m) {
  if (t.id != x.table) throw TableMismatch("adams: table mismatch");
  GradedCharacter r = GradedCharacter::zero(t);
  for (const auto& [d, f] : x.terms) {
    ClassFunction g = ClassFunction::zero(t);
    for (int c = 1; c <= t.n; ++c) g.v(c - 1) = f.at(power_class(t, c, m));
    if (!g.is_zero()) r.terms.emplace(d * static_cast<int>(m), std::move(g));
  }
  return r;
}

GradedCharacter sym_power(const CharacterTable& t, const GradedCharacter& x, int n) {
  if (n < 0) throw UnsupportedDegree("sym_power: negative degree");
  std::vector<GradedCharacter> h;
  h.push_back(GradedCharacter::unit(t));
  std::vector<GradedCharacter> psi;  // psi[m-1] = adams(x, m)
  for (int k = 1; k <= n; ++k) {
    psi.push_back(adams(t, x, k));
    GradedCharacter acc = GradedCharacter::zero(t);
    for (int m = 1; m <= k; ++m) acc += psi[m - 1] * h[k - m];
    h.push_back(Rational(1, k) * acc);
  }
  GradedCharacter r = h[n];
  r.effective = x.effective;
  return r;
}

IrrepDecomposition decompose(const CharacterTable& t, const GradedCharacter& x) {
  if (t.id != x.table) throw TableMismatch("decompose: table mismatch");
  IrrepDecomposition d;
  d.table = t.id;
  for (const auto& [deg, f] : x.terms) {
    const Vec<Rational> mult = irrep_multiplicities(t, f);
    std::map<int, Rational> row;
    for (int i = 0; i < t.n; ++i) {
      if (mult(i) == 0) continue;
      if (x.effective && (!is_integer(mult(i)) || mult(i) < 0))
        throw NonIntegralDecomposition("effective class has multiplicity " + mult(i).str() +
                                       " of chi_" + std::to_string(i + 1) + " at degree " +
                                       std::to_string(deg));
      row.emplace(i + 1, mult(i));
    }
    if (!row.empty()) d.terms.emplace(deg, std::move(row));
  }
  return d;
}

GradedCharacter reconstruct(const CharacterTable& t, const IrrepDecomposition& d) {
  if (t.id != d.table) throw TableMismatch("reconstruct: table mismatch");
  GradedCharacter x = GradedCharacter::zero(t);
  for (const auto& [deg, row] : d.terms) {
    ClassFunction f = ClassFunction::zero(t);
    for (const auto& [irrep, mult] : row) f += mult * ClassFunction::irrep(t, irrep);
    if (!f.is_zero()) x.terms.emplace(deg, std::move(f));
  }
  return x;
}

IrrepDecomposition decomposition_from(TableId table,
                                      const std::map<int, std::map<int, long>>& data) {
  IrrepDecomposition d;
  d.table = table;
  for (const auto& [deg, row] : data) {
    std::map<int, Rational> r;
    for (const auto& [irrep, mult] : row)
      if (mult != 0) r.emplace(irrep, Rational(mult));
    if (!r.empty()) d.terms.emplace(deg, std::move(r));
  }
  return d;
}

bool IrrepDecomposition::integral() const {
  for (const auto& [deg, row] : terms)
    for (const auto& [irrep, mult] : row)
      if (!is_integer(mult)) return false;
  return true;
}

std::string IrrepDecomposition::pretty() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first_deg = true;
  for (const auto& [deg, row] : terms) {
    if (!first_deg) os << " + ";
    first_deg = false;
    std::ostringstream block;
    bool first = true;
    for (const auto& [irrep, mult] : row) {
      if (!first) block << " + ";
      first = false;
      if (irrep == 1) {
        block << mult.str();
      } else {
        if (mult != 1) block << mult.str();
        block << "\xcf\x87" << irrep;  // chi
      }
    }
    if (deg == 0) {
      os << block.str();
    } else {
      const bool bare_unit = row.size() == 1 && row.begin()->first == 1 &&
                             row.begin()->second == 1;
      if (row.size() > 1)
        os << "(" << block.str() << ")";
      else if (!bare_unit)
        os << block.str();
      os << "L";
      if (deg != 1) os << "^" << deg;
    }
  }
  return os.str();
}

std::string IrrepDecomposition::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [deg, row] : terms) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [irrep, mult] : row) {
      const std::string key = "chi" + std::to_string(irrep);
      if (is_integer(mult))
        r[key] = static_cast<std::int64_t>(to_int(mult));
      else
        r[key] = mult.str();
    }
    j[std::to_string(deg)] = r;
  }
  return j.dump();
}

Rational dimension(const GradedCharacter& x) {
  Rational s(0);
  for (const auto& [d, f] : x.terms) s += f.v(0);
  return s;
}

ClassFunction evaluate_L1(const CharacterTable& t, const GradedCharacter& x) {
  ClassFunction s = ClassFunction::zero(t);
  for (const auto& [d, f] : x.terms) s += f;
  return s;
}

ClassFunction mod_L(const CharacterTable&, const GradedCharacter& x) { return x.term(0); }

}  // namespace cubics
