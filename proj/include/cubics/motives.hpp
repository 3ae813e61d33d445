#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubics/charring.hpp"
#include "cubics/rootsys.hpp"

namespace cubics {

/// A class with its symbolic name and formula degree (degree n for the n-th
/// symmetric power or Hilbert scheme of points, degrees add over products,
/// auxiliary classes have degree zero).
struct NamedClass {
  std::string name;
  int formula_degree = 0;
  GradedCharacter value;
};

/// Monomial in the formula vocabulary: a multiset of symmetric-power sizes
/// ("parts"), each either Sym-form or Hilb-form. S itself is the part 1.
struct ClassMonomial {
  std::vector<int> parts;  // sorted ascending
  bool hilb = false;       // parts > 1 taken as S^[n] instead of S^(n)

  int degree() const;
  std::string name() const;
};

/// Builders for every named class over the W(E6) table, memoized by name.
class Motives {
 public:
  Motives(const CharacterTable& table, const WeylGroup& weyl);

  const CharacterTable& table() const { return *table_; }

  const GradedCharacter& S();                 // 1 + (1 + chi3) L + L^2
  const GradedCharacter& F();                 // permutation character on the 27 lines
  const GradedCharacter& Z();                 // permutation character on the 72 roots
  const GradedCharacter& V();                 // lattice character
  const GradedCharacter& sym_class(int n);    // S^(n)
  const GradedCharacter& hilb_class(int n);   // S^[n], n <= 4
  const GradedCharacter& monomial(const ClassMonomial& m);

  NamedClass named(const std::string& name);
  /// Parses "1", "S", "S^2", "S^(3)", "S^[4]", "F", "Z", "V" and
  /// '*'-separated products of these.
  GradedCharacter parse(const std::string& name, int* formula_degree = nullptr);

  /// All monomials of formula degree <= d in Sym-form (or Hilb-form),
  /// i.e. one per partition of every e <= d; the empty partition is the
  /// constant class "1".
  std::vector<ClassMonomial> monomials_up_to(int d, bool hilb = false) const;

  /// Candidate lists for the relation searches.
  std::vector<NamedClass> candidate_set(int max_degree, bool with_F, bool with_Z,
                                        bool hilb = false);

 private:
  const CharacterTable* table_;
  const WeylGroup* weyl_;
  std::map<std::string, GradedCharacter> memo_;
};

/// Sym-form monomial parts of a class name, when the class is a monomial in
/// S-powers (Hilb parts count like Sym parts); nullopt for F, Z, V.
std::optional<std::vector<int>> monomial_parts(const std::string& name);

}  // namespace cubics
