#pragma once

#include <string>
#include <vector>

#include "cubics/charring.hpp"
#include "cubics/lpoly.hpp"
#include "cubics/motives.hpp"

namespace cubics {

/// A linear combination sum_j p_j(L) * [X_j], one polynomial per candidate
/// class; a relation when it evaluates to zero.
struct RelationVector {
  std::vector<std::string> labels;
  std::vector<LPoly> coeffs;

  bool is_zero() const;
  const LPoly& coeff_of(const std::string& label) const;
  std::string str() const;
};

struct RelationSpace {
  std::vector<std::string> labels;
  int max_coeff_degree = 0;
  /// Kernel of the flattened rational system with coefficient degrees <= D.
  int raw_nullity = 0;
  std::vector<RelationVector> raw_basis;
  /// Kernel dimension over the field of rational functions in L
  /// (the "up to multiplication by polynomials in L" count).
  int funcfield_nullity = 0;
  std::vector<RelationVector> funcfield_basis;  // minimized generators
};

/// Exact nullspace search over the candidate classes: both the flattened
/// rational kernel at the given coefficient-degree bound and the kernel over
/// rational functions in L. Elimination is fraction-free (Bareiss) with
/// deterministic pivoting.
RelationSpace find_relations(const CharacterTable& t, const std::vector<NamedClass>& classes,
                             int max_coeff_degree);

/// Canonical form: clear denominators, divide by the polynomial gcd and the
/// integer content of all entries, and fix the sign so the distinguished
/// entry (default: the last nonzero one) has positive leading coefficient.
RelationVector minimize(RelationVector rel, int distinguished = -1);

/// Evaluates the combination in the graded character ring; zero iff the
/// relation holds. Labels are resolved against `classes` by name.
GradedCharacter verify_relation(const CharacterTable& t, const std::vector<NamedClass>& classes,
                                const RelationVector& rel);

struct BlockedClass {
  std::string name;
  std::vector<int> irreps;  // blocking irreps (1-based), unique to this class
};

struct BlockingCertificate {
  bool complete = false;
  std::vector<BlockedClass> blocked;  // in elimination order
  std::string note;
};

/// Reproduces the blocking-summand nonexistence argument: iteratively finds a
/// target class owning an irreducible summand (after L -> 1) that occurs in
/// no other remaining candidate, removes it, and repeats. Throws
/// CertificateUnavailable when some target cannot be blocked.
BlockingCertificate nonexistence_certificate(const CharacterTable& t,
                                             const std::vector<NamedClass>& candidates,
                                             const std::vector<std::string>& targets);

/// Smallest L-degree at which chi_irrep occurs among the given classes;
/// -1 when it never occurs.
int min_L_valuation(const CharacterTable& t, const std::vector<NamedClass>& classes, int irrep);

struct ModLReport {
  /// Classes with nonzero constant coefficient, with those coefficients.
  std::vector<std::pair<std::string, Rational>> congruence;
  bool forbidden_shape = false;
  std::string pivot;  // the isolated S^(3m) class when flagged
  std::string text;
};

/// Constant terms of the coefficients, i.e. the relation modulo L, plus the
/// stable-birational shape test: flagged when the congruence isolates a pure
/// power S^(3m) against products that all contain a factor prime to 3.
ModLReport modl_obstruction(const RelationVector& rel);

enum class RelationDomain { Smooth, A1, A2 };

struct RegisteredRelation {
  std::string id;
  std::string description;
  RelationDomain domain;
  std::vector<std::pair<std::string, LPoly>> coeffs;  // moved to one side; zero sum
  RelationVector vec() const;
};

/// The named relations exposed by the CLI: szs-sym, szs-hilb, yfy, yfy-hilb,
/// deg5, a1, a2.
const std::vector<RegisteredRelation>& relation_registry();
const RegisteredRelation& registered_relation(const std::string& id);

}  // namespace cubics
