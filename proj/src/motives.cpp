#include "cubics/motives.hpp"

#include <algorithm>
#include <sstream>

#include "cubics/errors.hpp"

namespace cubics {

int ClassMonomial::degree() const {
  int d = 0;
  for (int p : parts) d += p;
  return d;
}

std::string ClassMonomial::name() const {
  if (parts.empty()) return "1";
  std::ostringstream os;
  int i = 0;
  bool first = true;
  const int n = static_cast<int>(parts.size());
  while (i < n) {
    int j = i;
    while (j < n && parts[j] == parts[i]) ++j;
    const int part = parts[i];
    const int count = j - i;
    if (!first) os << "*";
    first = false;
    if (part == 1) {
      os << "S";
      if (count > 1) os << "^" << count;
    } else {
      const std::string base =
          (hilb ? "S^[" + std::to_string(part) + "]" : "S^(" + std::to_string(part) + ")");
      os << base;
      for (int k = 1; k < count; ++k) os << "*" << base;
    }
    i = j;
  }
  return os.str();
}

Motives::Motives(const CharacterTable& table, const WeylGroup& weyl)
    : table_(&table), weyl_(&weyl) {}

const GradedCharacter& Motives::S() {
  auto it = memo_.find("S");
  if (it == memo_.end()) {
    GradedCharacter s = GradedCharacter::unit(*table_);
    s += GradedCharacter::from_class_function(lattice_character(*weyl_, *table_), 1, true);
    s += GradedCharacter::lefschetz_power(*table_, 2);
    s.effective = true;
    it = memo_.emplace("S", std::move(s)).first;
  }
  return it->second;
}

const GradedCharacter& Motives::F() {
  auto it = memo_.find("F");
  if (it == memo_.end())
    it = memo_
             .emplace("F", GradedCharacter::from_class_function(
                               permutation_character_lines(*weyl_, *table_), 0, true))
             .first;
  return it->second;
}

const GradedCharacter& Motives::Z() {
  auto it = memo_.find("Z");
  if (it == memo_.end())
    it = memo_
             .emplace("Z", GradedCharacter::from_class_function(
                               permutation_character_roots(*weyl_, *table_), 0, true))
             .first;
  return it->second;
}

const GradedCharacter& Motives::V() {
  auto it = memo_.find("V");
  if (it == memo_.end())
    it = memo_
             .emplace("V", GradedCharacter::from_class_function(
                               lattice_character(*weyl_, *table_), 0, true))
             .first;
  return it->second;
}

const GradedCharacter& Motives::sym_class(int n) {
  const std::string key = "S^(" + std::to_string(n) + ")";
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, sym_power(*table_, S(), n)).first;
  return it->second;
}

const GradedCharacter& Motives::hilb_class(int n) {
  if (n < 1 || n > 4) throw UnsupportedDegree("hilb_class: n must be 1..4");
  const std::string key = "S^[" + std::to_string(n) + "]";
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    GradedCharacter h = GradedCharacter::zero(*table_);
    switch (n) {
      case 1:
        h = S();
        break;
      case 2:
        h = sym_class(2) + S().shifted(1);
        break;
      case 3:
        h = sym_class(3) + (S() * S()).shifted(1) + S().shifted(2);
        break;
      case 4:
        h = sym_class(4) + (S() * sym_class(2)).shifted(1) + sym_class(2).shifted(2) +
            (S() * S()).shifted(2) + S().shifted(3);
        break;
    }
    h.effective = true;
    it = memo_.emplace(key, std::move(h)).first;
  }
  return it->second;
}

const GradedCharacter& Motives::monomial(const ClassMonomial& m) {
  const std::string key = m.name();
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    GradedCharacter v = GradedCharacter::unit(*table_);
    for (int p : m.parts) v = v * (m.hilb && p > 1 ? hilb_class(p) : sym_class(p));
    it = memo_.emplace(key, std::move(v)).first;
  }
  return it->second;
}

NamedClass Motives::named(const std::string& name) {
  NamedClass c;
  c.name = name;
  c.value = parse(name, &c.formula_degree);
  return c;
}

GradedCharacter Motives::parse(const std::string& name, int* formula_degree) {
  GradedCharacter v = GradedCharacter::unit(*table_);
  int degree = 0;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    if (tok.empty()) throw Error("parse: empty factor in '" + name + "'");
    if (tok == "1") continue;
    if (tok == "L") {
      v = v.shifted(1);
    } else if (tok == "F") {
      v = v * F();
    } else if (tok == "Z") {
      v = v * Z();
    } else if (tok == "V") {
      v = v * V();
    } else if (tok == "S") {
      v = v * S();
      degree += 1;
    } else if (tok.rfind("S^(", 0) == 0 && tok.back() == ')') {
      const int n = std::stoi(tok.substr(3, tok.size() - 4));
      v = v * sym_class(n);
      degree += n;
    } else if (tok.rfind("S^[", 0) == 0 && tok.back() == ']') {
      const int n = std::stoi(tok.substr(3, tok.size() - 4));
      v = v * hilb_class(n);
      degree += n;
    } else if (tok.rfind("S^", 0) == 0) {
      const int e = std::stoi(tok.substr(2));
      for (int k = 0; k < e; ++k) v = v * S();
      degree += e;
    } else {
      throw Error("parse: unknown class '" + tok + "'");
    }
  }
  if (formula_degree) *formula_degree = degree;
  return v;
}

std::vector<ClassMonomial> Motives::monomials_up_to(int d, bool hilb) const {
  std::vector<ClassMonomial> out;
  std::vector<int> cur;
  // partitions in ascending-part form, enumerated depth-first
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    ClassMonomial m;
    m.parts = cur;
    m.hilb = hilb;
    out.push_back(m);
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, 1);
  std::sort(out.begin(), out.end(), [](const ClassMonomial& a, const ClassMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.parts < b.parts;
  });
  return out;
}

std::vector<NamedClass> Motives::candidate_set(int max_degree, bool with_F, bool with_Z,
                                               bool hilb) {
  std::vector<NamedClass> out;
  for (const auto& m : monomials_up_to(max_degree, hilb)) {
    NamedClass c;
    c.name = m.name();
    c.formula_degree = m.degree();
    c.value = monomial(m);
    out.push_back(std::move(c));
  }
  if (with_F) out.push_back({"F", 0, F()});
  if (with_Z) out.push_back({"Z", 0, Z()});
  return out;
}

std::optional<std::vector<int>> monomial_parts(const std::string& name) {
  std::vector<int> parts;
  if (name == "1") return parts;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    // the base symbol is formal: both surface (S) and fourfold (Y) monomials
    if (tok == "S" || tok == "Y") {
      parts.push_back(1);
    } else if (tok.size() > 4 && (tok[0] == 'S' || tok[0] == 'Y') &&
               ((tok.rfind("^(", 1) == 1 && tok.back() == ')') ||
                (tok.rfind("^[", 1) == 1 && tok.back() == ']'))) {
      parts.push_back(std::stoi(tok.substr(3, tok.size() - 4)));
    } else if (tok.size() > 2 && (tok[0] == 'S' || tok[0] == 'Y') && tok[1] == '^') {
      const int e = std::stoi(tok.substr(2));
      for (int k = 0; k < e; ++k) parts.push_back(1);
    } else {
      return std::nullopt;
    }
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace cubics
