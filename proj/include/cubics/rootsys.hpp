#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubics/chartable.hpp"
#include "cubics/numeric.hpp"

namespace cubics {

/// Vector in the rank-7 geometric Neron-Severi lattice, coordinates over
/// the basis E0..E6.
using LatticeVector = Eigen::Matrix<std::int64_t, 7, 1>;
using LatticeMatrix = Eigen::Matrix<std::int64_t, 7, 7>;

/// The lattice Z^7 with the intersection form diag(1,-1,...,-1) and the
/// canonical class K = -3 E0 + E1 + ... + E6.
struct Lattice {
  LatticeMatrix gram;
  LatticeVector canonical;
};

Lattice build_lattice();

inline std::int64_t pairing(const Lattice& lat, const LatticeVector& a, const LatticeVector& b) {
  return (a.transpose() * lat.gram * b)(0, 0);
}

/// The 72 roots (r,r) = -2, (r,K) = 0, in lexicographic coordinate order.
struct RootSet {
  std::vector<LatticeVector> roots;
  int index_of(const LatticeVector& v) const;  // -1 if absent
  std::unordered_map<std::string, int> lookup;
};

/// The 27 lines (l,l) = -1, (l,K) = -1, in lexicographic coordinate order.
struct LineSet {
  std::vector<LatticeVector> lines;
};

RootSet enumerate_roots(const Lattice& lat);
LineSet enumerate_lines(const Lattice& lat);

/// Group element stored as its permutation of the 72 roots.
using RootPerm = std::array<std::uint8_t, 72>;

RootPerm identity_perm();
RootPerm compose(const RootPerm& a, const RootPerm& b);  // (a*b)(x) = a(b(x))
RootPerm inverse(const RootPerm& a);

/// Reflection r_alpha: v -> v + (alpha,v) alpha as a permutation of the
/// roots. Requires (alpha,alpha) = -2.
RootPerm reflection(const Lattice& lat, const RootSet& rs, const LatticeVector& alpha);

struct ConjClass {
  int representative = 0;  // element index
  Int size = 0;
  int order = 0;
  std::int64_t lattice_trace = 0;  // trace of the 7x7 matrix of the representative
  int table_column = 0;            // 1-based column of the W(E6) table; 0 before matching
};

class WeylGroup {
 public:
  const Lattice& lattice() const { return lat_; }
  const RootSet& roots() const { return roots_; }
  const LineSet& lines() const { return lines_; }

  std::size_t size() const { return elements_.size(); }
  const RootPerm& element(int i) const { return elements_[i]; }
  const std::vector<RootPerm>& generators() const { return generators_; }
  int index_of(const RootPerm& p) const;
  int multiply(int a, int b) const;

  int class_count() const { return static_cast<int>(classes_.size()); }
  const ConjClass& conj_class(int k) const { return classes_[k]; }
  int class_of(int element) const { return element_class_[element]; }
  bool matched() const { return matched_; }
  /// Class index (0-based) matched to a 1-based table column.
  int class_of_column(int column) const { return column_class_[column - 1]; }

  /// Lattice matrix of an element, reconstructed from its root permutation.
  LatticeMatrix lattice_matrix(int element) const;
  /// Induced permutation of the 27 lines.
  std::vector<int> line_perm(int element) const;

  friend WeylGroup generate_weyl(const Lattice& lat, const RootSet& roots, const LineSet& lines,
                                 const Int& expected_order);
  friend void conjugacy_classes(WeylGroup& w);
  friend void match_classes(WeylGroup& w, const CharacterTable& table);
  friend void save_weyl(const WeylGroup& w, std::ostream& os);
  friend bool load_weyl(WeylGroup& w, std::istream& is, const Lattice& lat, const RootSet& roots,
                        const LineSet& lines);

 private:
  Lattice lat_;
  RootSet roots_;
  LineSet lines_;
  std::vector<RootPerm> elements_;  // BFS order from the identity
  std::vector<RootPerm> generators_;
  std::unordered_map<std::string, int> element_index_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint8_t> element_class_;
  std::vector<int> column_class_;
  bool matched_ = false;
};

/// Closure of the six simple reflections E1-E2, ..., E5-E6, E0-E1-E2-E3.
/// Throws OrderMismatch when the closure size differs from expected_order.
WeylGroup generate_weyl(const Lattice& lat, const RootSet& roots, const LineSet& lines,
                        const Int& expected_order);

/// Partition into conjugacy classes by orbit closure under conjugation by
/// the generators; fills per-class order, size and lattice trace.
void conjugacy_classes(WeylGroup& w);

/// Bijection computed class -> table column by iterative refinement over
/// (order, size, reflection trace, power maps). Throws AmbiguousMatching /
/// InconsistentMatching when the fingerprints do not pin a unique bijection.
void match_classes(WeylGroup& w, const CharacterTable& table);

/// Fixed points of class representatives under an action; point_perm maps an
/// element index to the images of 0..degree-1.
ClassFunction permutation_character(const WeylGroup& w, const CharacterTable& table, int degree,
                                    const std::function<std::vector<int>(int)>& point_perm);

ClassFunction permutation_character_lines(const WeylGroup& w, const CharacterTable& table);
ClassFunction permutation_character_roots(const WeylGroup& w, const CharacterTable& table);
ClassFunction permutation_character_trivial(const WeylGroup& w, const CharacterTable& table);

/// Trace of class representatives on the full rank-7 lattice.
ClassFunction lattice_character(const WeylGroup& w, const CharacterTable& table);

std::string cycle_notation(const RootPerm& p);

/// Content hash of the root ordering, the cache key for generated groups.
std::uint64_t roots_fingerprint(const RootSet& rs);

/// Binary cache of a generated, classified, matched group.
void save_weyl(const WeylGroup& w, std::ostream& os);
bool load_weyl(WeylGroup& w, std::istream& is, const Lattice& lat, const RootSet& roots,
               const LineSet& lines);

std::string roots_to_tsv(const RootSet& rs);
std::string lines_to_tsv(const LineSet& ls);
std::string classes_to_json(const WeylGroup& w);

}  // namespace cubics
