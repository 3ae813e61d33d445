#include "cubics/relfind.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubics/errors.hpp"
#include "cubics/kernels.hpp"

namespace cubics {

bool RelationVector::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

const LPoly& RelationVector::coeff_of(const std::string& label) const {
  static const LPoly kZero;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return coeffs[i];
  return kZero;
}

std::string RelationVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[i].str() << ")*[" << labels[i] << "]";
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// per-class polynomial coordinates: irrep index (1-based) -> coefficient in Q[L]
std::vector<std::map<int, LPoly>> class_coordinates(const CharacterTable& t,
                                                    const std::vector<NamedClass>& classes) {
  std::vector<std::map<int, LPoly>> out;
  out.reserve(classes.size());
  for (const auto& c : classes) {
    const IrrepDecomposition dec = decompose(t, c.value);
    std::map<int, LPoly> coords;
    for (const auto& [deg, row] : dec.terms)
      for (const auto& [irrep, mult] : row) coords[irrep] += LPoly::monomial(deg, mult);
    out.push_back(std::move(coords));
  }
  return out;
}

RelationVector normalize_integer_content(RelationVector rel) {
  Int denl = 1;
  for (const auto& c : rel.coeffs) denl = boost::multiprecision::lcm(denl, denominator_lcm(c));
  Int content = 0;
  for (auto& c : rel.coeffs) {
    c = Rational(denl) * c;
    content = boost::multiprecision::gcd(content, integer_content(c));
  }
  if (content > 1)
    for (auto& c : rel.coeffs) c = Rational(Int(1), content) * c;
  return rel;
}

}  // namespace

RelationSpace find_relations(const CharacterTable& t, const std::vector<NamedClass>& classes,
                             int max_coeff_degree) {
  if (max_coeff_degree < 0) throw Error("find_relations: negative coefficient degree bound");
  for (const auto& c : classes)
    if (c.value.table != t.id) throw TableMismatch("find_relations: class over wrong table");

  RelationSpace space;
  space.max_coeff_degree = max_coeff_degree;
  for (const auto& c : classes) space.labels.push_back(c.name);

  const int m = static_cast<int>(classes.size());
  const auto coords = class_coordinates(t, classes);

  std::set<int> irreps;
  for (const auto& coord : coords)
    for (const auto& [irrep, p] : coord) irreps.insert(irrep);
  const std::vector<int> irrep_rows(irreps.begin(), irreps.end());

  // kernel over the rational-function field: rows are irreps, entries in Q[L]
  {
    Mat<LPoly> a(static_cast<int>(irrep_rows.size()), m);
    for (std::size_t r = 0; r < irrep_rows.size(); ++r)
      for (int j = 0; j < m; ++j) {
        auto it = coords[j].find(irrep_rows[r]);
        a(static_cast<int>(r), j) = it == coords[j].end() ? LPoly() : it->second;
      }
    auto ker = kernel_bareiss<LPoly>(std::move(a));
    space.funcfield_nullity = static_cast<int>(ker.basis.size());
    for (const auto& v : ker.basis) {
      RelationVector rel;
      rel.labels = space.labels;
      rel.coeffs.assign(v.data(), v.data() + v.size());
      space.funcfield_basis.push_back(minimize(std::move(rel)));
    }
  }

  // flattened rational kernel with coefficient degrees bounded by D
  {
    int max_class_degree = 0;
    for (const auto& c : classes) max_class_degree = std::max(max_class_degree, c.value.max_degree());
    const int emax = max_class_degree + max_coeff_degree;
    const int cols = m * (max_coeff_degree + 1);

    std::vector<std::vector<Int>> rows;
    for (int irrep : irrep_rows) {
      for (int e = 0; e <= emax; ++e) {
        std::vector<Int> row(cols, Int(0));
        bool nonzero = false;
        for (int j = 0; j < m; ++j) {
          auto it = coords[j].find(irrep);
          if (it == coords[j].end()) continue;
          for (int k = 0; k <= max_coeff_degree; ++k) {
            const Rational v = it->second.coeff(e - k);
            if (v == 0) continue;
            row[j * (max_coeff_degree + 1) + k] = to_int(v);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    Mat<Int> a(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < cols; ++c) a(static_cast<int>(r), c) = rows[r][c];
    auto ker = kernel_bareiss<Int>(std::move(a));
    space.raw_nullity = static_cast<int>(ker.basis.size());
    for (const auto& v : ker.basis) {
      RelationVector rel;
      rel.labels = space.labels;
      rel.coeffs.resize(m);
      for (int j = 0; j < m; ++j) {
        LPoly p;
        for (int k = 0; k <= max_coeff_degree; ++k)
          p += LPoly::monomial(k, Rational(v(j * (max_coeff_degree + 1) + k)));
        rel.coeffs[j] = p;
      }
      space.raw_basis.push_back(normalize_integer_content(std::move(rel)));
    }
  }

  return space;
}

RelationVector minimize(RelationVector rel, int distinguished) {
  if (rel.is_zero()) return rel;
  rel = normalize_integer_content(std::move(rel));

  LPoly g;
  for (const auto& c : rel.coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? poly_gcd(c, LPoly()) : poly_gcd(g, c);
  }
  if (!g.is_zero() && g.degree() >= 0)
    for (auto& c : rel.coeffs)
      if (!c.is_zero()) c = div_exact(c, g);
  rel = normalize_integer_content(std::move(rel));

  int dist = distinguished;
  if (dist < 0) {
    for (int i = static_cast<int>(rel.coeffs.size()) - 1; i >= 0; --i)
      if (!rel.coeffs[i].is_zero()) {
        dist = i;
        break;
      }
  }
  if (dist >= 0 && !rel.coeffs[dist].is_zero() && rel.coeffs[dist].leading() < 0)
    for (auto& c : rel.coeffs) c = Rational(-1) * c;
  return rel;
}

GradedCharacter verify_relation(const CharacterTable& t, const std::vector<NamedClass>& classes,
                                const RelationVector& rel) {
  GradedCharacter acc = GradedCharacter::zero(t);
  for (std::size_t i = 0; i < rel.labels.size(); ++i) {
    if (rel.coeffs[i].is_zero()) continue;
    const NamedClass* found = nullptr;
    for (const auto& c : classes)
      if (c.name == rel.labels[i]) {
        found = &c;
        break;
      }
    if (!found) throw Error("verify_relation: unresolved class " + rel.labels[i]);
    acc += lpoly_times(rel.coeffs[i], found->value);
  }
  return acc;
}

namespace {

std::set<int> support_L1(const CharacterTable& t, const NamedClass& c) {
  std::set<int> s;
  for (const auto& [deg, row] : decompose(t, c.value).terms)
    for (const auto& [irrep, mult] : row) s.insert(irrep);
  return s;
}

}  // namespace

BlockingCertificate nonexistence_certificate(const CharacterTable& t,
                                             const std::vector<NamedClass>& candidates,
                                             const std::vector<std::string>& targets) {
  std::vector<std::set<int>> support;
  for (const auto& c : candidates) support.push_back(support_L1(t, c));

  std::vector<bool> removed(candidates.size(), false);
  std::set<std::string> pending(targets.begin(), targets.end());
  BlockingCertificate cert;

  bool changed = true;
  while (changed && !pending.empty()) {
    changed = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (removed[i] || !pending.count(candidates[i].name)) continue;
      std::set<int> unique = support[i];
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (j == i || removed[j]) continue;
        for (int irrep : support[j]) unique.erase(irrep);
      }
      if (!unique.empty()) {
        cert.blocked.push_back({candidates[i].name, {unique.begin(), unique.end()}});
        removed[i] = true;
        pending.erase(candidates[i].name);
        changed = true;
      }
    }
  }
  cert.complete = pending.empty();
  if (!cert.complete) {
    std::string missing;
    for (const auto& name : pending) missing += (missing.empty() ? "" : ", ") + name;
    throw CertificateUnavailable("no blocking irrep for: " + missing);
  }
  return cert;
}

int min_L_valuation(const CharacterTable& t, const std::vector<NamedClass>& classes, int irrep) {
  int best = -1;
  for (const auto& c : classes) {
    for (const auto& [deg, row] : decompose(t, c.value).terms) {
      if (row.count(irrep)) {
        if (best < 0 || deg < best) best = deg;
        break;  // terms are ordered by degree
      }
    }
  }
  return best;
}

ModLReport modl_obstruction(const RelationVector& rel) {
  ModLReport rep;
  for (std::size_t i = 0; i < rel.labels.size(); ++i) {
    const Rational c0 = rel.coeffs[i].constant_term();
    if (c0 != 0) rep.congruence.emplace_back(rel.labels[i], c0);
  }

  // shape: a pure power S^(3m) isolated against products that each contain a
  // factor prime to 3, with integer cofactors after scaling
  for (const auto& [pivot_name, pivot_coeff] : rep.congruence) {
    auto parts = monomial_parts(pivot_name);
    if (!parts || parts->size() != 1 || (*parts)[0] % 3 != 0) continue;
    bool ok = true;
    for (const auto& [name, coeff] : rep.congruence) {
      if (name == pivot_name) continue;
      auto p = monomial_parts(name);
      if (!p || p->empty()) {
        ok = false;
        break;
      }
      bool coprime_factor = false;
      for (int part : *p) coprime_factor |= (part % 3 != 0);
      if (!coprime_factor) {
        ok = false;
        break;
      }
      if (!is_integer(coeff / pivot_coeff)) {
        ok = false;
        break;
      }
    }
    if (ok && rep.congruence.size() >= 2) {
      rep.forbidden_shape = true;
      rep.pivot = pivot_name;
      break;
    }
  }

  std::ostringstream os;
  bool first = true;
  for (const auto& [name, coeff] : rep.congruence) {
    const Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.str() << "*";
    os << "[" << name << "]";
  }
  os << " == 0 (mod L)";
  rep.text = rep.congruence.empty() ? "0 == 0 (mod L)" : os.str();
  return rep;
}

RelationVector RegisteredRelation::vec() const {
  RelationVector v;
  for (const auto& [label, coeff] : coeffs) {
    v.labels.push_back(label);
    v.coeffs.push_back(coeff);
  }
  return v;
}

const std::vector<RegisteredRelation>& relation_registry() {
  static const std::vector<RegisteredRelation> kRegistry = [] {
    std::vector<RegisteredRelation> r;
    // degree-4 relation linking Z(S) to symmetric powers, Sym form
    r.push_back({"szs-sym",
                 "unique degree-4 relation for smooth cubic surfaces with Z(S), Sym form",
                 RelationDomain::Smooth,
                 {{"Z", LPoly{0, 0, 0, 0, 1}},
                  {"S^(4)", LPoly{-1}},
                  {"S^(3)", LPoly{1, -1, 1}},
                  {"S*S^(2)", LPoly{0, 1}},
                  {"S^2", LPoly{0, -1, -1, -1}},
                  {"S^(2)", LPoly{0, 0, 2}},
                  {"S", LPoly{0, 1, -1, 1, -1, 1}},
                  {"1", LPoly{0, 0, -1, 0, -1, 0, -1}}}});
    r.push_back({"szs-hilb",
                 "unique degree-4 relation for smooth cubic surfaces with Z(S), Hilb form",
                 RelationDomain::Smooth,
                 {{"Z", LPoly{0, 0, 0, 0, 1}},
                  {"S^[4]", LPoly{-1}},
                  {"S^[3]", LPoly{1, -1, 1}},
                  {"S*S^[2]", LPoly{0, 2}},
                  {"S^2", LPoly{0, -2, -1, -2}},
                  {"S^[2]", LPoly{0, 0, 3}},
                  {"S", LPoly{0, 1, -2, 0, -2, 1}},
                  {"1", LPoly{0, 0, -1, 0, -1, 0, -1}}}});
    r.push_back({"yfy",
                 "degree-2 relation with the Fano variety of lines, Sym form",
                 RelationDomain::Smooth,
                 {{"F", LPoly{0, 0, 1}}, {"S", LPoly{1, 0, 1}}, {"S^(2)", LPoly{-1}}}});
    r.push_back({"yfy-hilb",
                 "degree-2 relation with the Fano variety of lines, Hilb form",
                 RelationDomain::Smooth,
                 {{"F", LPoly{0, 0, 1}}, {"S", LPoly{1, 1, 1}}, {"S^[2]", LPoly{-1}}}});
    r.push_back({"deg5",
                 "unique homogeneous degree-5 relation for smooth cubic surfaces",
                 RelationDomain::Smooth,
                 {{"S^(5)", LPoly{1}},
                  {"S*S^(3)", LPoly{1, 0, 1}},
                  {"S*S^(4)", LPoly{-1}},
                  {"S^(3)", LPoly{-1, 0, -1, 0, -1}},
                  {"S^2*S^(2)", LPoly{0, 1}},
                  {"S*S^(2)", LPoly{0, -2, -1, -2}},
                  {"S^3", LPoly{0, -1, -1, -1}},
                  {"S^2", LPoly{0, 2, 3, 5, 3, 2}},
                  {"S^(2)", LPoly{0, 1, 1, 1, 1, 1}},
                  {"S", LPoly{0, -1, -3, -4, -5, -4, -3, -1}},
                  {"1", LPoly{0, 0, 1, 1, 2, 1, 2, 1, 1}}}});
    r.push_back({"a1",
                 "degree-4 relation for a one-node cubic surface, in the Burnside ring of S6",
                 RelationDomain::A1,
                 {{"Z", LPoly{0, 0, 0, 0, 1}},
                  {"S^(4)", LPoly{-1}},
                  {"S^(3)", LPoly{1, -1, 1}},
                  {"S*S^(2)", LPoly{0, 1}},
                  {"S^2", LPoly{0, -1, -1, -1}},
                  {"S^(2)", LPoly{0, 0, 1}},
                  {"S", LPoly{0, 1, 0, 2, 0, 1}},
                  {"1", LPoly{0, 0, -1, -1, -1, -1, -1}}}});
    r.push_back({"a2",
                 "degree-4 relation for a cubic surface with one cusp, in the Burnside ring of "
                 "Z2x(S3xS3)",
                 RelationDomain::A2,
                 {{"Z", LPoly{0, 0, 0, 0, 1}},
                  {"S^(4)", LPoly{-1}},
                  {"S^(3)", LPoly{1, -1, 1}},
                  {"S*S^(2)", LPoly{0, 1}},
                  {"S^2", LPoly{0, -1, -1, -1}},
                  {"S^(2)", LPoly{0, 0, 1}},
                  {"S", LPoly{0, 1, 0, 2, 0, 1}},
                  {"A", LPoly{0, 0, 0, 0, -1}},
                  {"1", LPoly{0, 0, -1, -1, 0, -1, -1}}}});
    return r;
  }();
  return kRegistry;
}

const RegisteredRelation& registered_relation(const std::string& id) {
  for (const auto& r : relation_registry())
    if (r.id == id) return r;
  throw Error("unknown relation id: " + id);
}

}  // namespace cubics
