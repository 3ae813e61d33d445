#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cubics/chartable.hpp"
#include "cubics/lpoly.hpp"
#include "cubics/rootsys.hpp"

namespace cubics {

/// Permutation of 0..n-1.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b);  // apply b, then a
  Perm inverse() const;
  int order() const;
  std::string key() const;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// Parses disjoint cycles with 1-based labels, e.g. "(14)(2536)" or "()".
Perm perm_from_cycles(int degree, const std::string& cycles);

class FiniteGroup {
 public:
  static FiniteGroup generate(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  int generator_element(int k) const { return generator_elements_[k]; }

  int index_of(const Perm& p) const;
  int mult(int a, int b) const;
  int inv(int a) const;
  /// BFS word structure: element i != 0 equals generator(via(i)) * parent(i).
  int parent(int i) const { return parents_[i]; }
  int via_generator(int i) const { return via_gen_[i]; }

  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int e) const { return element_class_[e]; }
  int class_rep(int k) const { return class_reps_[k]; }
  long class_size(int k) const { return class_sizes_[k]; }

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<int> generator_elements_;
  std::vector<Perm> elements_;
  std::map<std::string, int> index_;
  std::vector<int> parents_, via_gen_;
  std::vector<int> element_class_, class_reps_;
  std::vector<long> class_sizes_;
};

/// Finite G-set with a fully materialized action table.
struct GSet {
  const FiniteGroup* group = nullptr;
  std::string name;
  int points = 0;
  std::vector<std::vector<int>> act;  // act[element][point]

  int apply(int e, int x) const { return act[e][x]; }
};

/// Builds the action of every element from the actions of the generators
/// along the group's BFS words, then checks the action laws on all
/// (generator, element) pairs. Throws InvalidAction on violation.
GSet gset_from_generator_action(const FiniteGroup& g, std::string name, int points,
                                const std::vector<std::vector<int>>& generator_images);

GSet trivial_gset(const FiniteGroup& g, int points = 1, std::string name = "pt");
GSet natural_gset(const FiniteGroup& g, std::string name = "A");

GSet disjoint_union(const GSet& x, const GSet& y);
GSet product(const GSet& x, const GSet& y);
/// Multisets of size n (diagonals included).
GSet sym_power_gset(const GSet& x, int n);
/// n-element subsets of distinct points.
GSet distinct_subsets(const GSet& x, int n);

class BurnsideRing;

/// Integer combination of transitive G-set types (stabilizer conjugacy
/// classes), the canonical form of a Burnside-ring element.
struct VirtualGSet {
  BurnsideRing* ring = nullptr;
  std::map<int, long long> mult;

  bool is_zero() const;
  long long points() const;

  VirtualGSet& operator+=(const VirtualGSet& o);
  VirtualGSet& operator-=(const VirtualGSet& o);
  friend VirtualGSet operator+(VirtualGSet a, const VirtualGSet& b) { return a += b; }
  friend VirtualGSet operator-(VirtualGSet a, const VirtualGSet& b) { return a -= b; }
  friend VirtualGSet operator*(const VirtualGSet& a, const VirtualGSet& b);
  friend VirtualGSet operator*(long long s, VirtualGSet a);
  friend bool operator==(const VirtualGSet& a, const VirtualGSet& b);

  std::string str() const;
};

/// Registry of transitive types for one group, with memoized products and
/// symmetric powers of the types.
class BurnsideRing {
 public:
  explicit BurnsideRing(const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::string& type_label(int t) const { return types_[t].label; }
  long type_size(int t) const { return types_[t].orbit_size; }
  const GSet& type_representative(int t) const { return types_[t].representative; }

  VirtualGSet zero();
  VirtualGSet one();
  VirtualGSet of_type(int t, long long m = 1);

  /// Type of the orbit of one point (registers a new type when the
  /// stabilizer class has not been seen).
  int orbit_type(const GSet& x, int point);

  VirtualGSet product_types(int a, int b);
  VirtualGSet sym_type(int t, int n);

 private:
  struct TypeInfo {
    std::vector<int> stabilizer;  // sorted element indices
    long orbit_size = 0;
    std::string label;
    GSet representative;
  };
  bool conjugate_subgroups(const std::vector<int>& h, const std::vector<int>& k) const;

  const FiniteGroup* group_;
  std::vector<TypeInfo> types_;
  std::map<std::pair<int, int>, VirtualGSet> product_memo_;
  std::map<std::pair<int, int>, VirtualGSet> sym_memo_;
};

struct OrbitInfo {
  std::vector<int> orbit_points;
  int type = -1;
};

std::vector<OrbitInfo> orbits(BurnsideRing& ring, const GSet& x);
VirtualGSet to_virtual(BurnsideRing& ring, const GSet& x);
/// Isomorphism of G-sets decided by stabilizer-type multiplicities.
bool iso(BurnsideRing& ring, const GSet& x, const GSet& y);

/// Fixed points per table column; column_reps[c] is the group element
/// representing column c+1.
ClassFunction burn_char(const CharacterTable& table, const GSet& x,
                        const std::vector<int>& column_reps);

/// Graded Burnside-ring element: finitely supported map degree -> VirtualGSet.
struct GradedVirtual {
  BurnsideRing* ring = nullptr;
  std::map<int, VirtualGSet> terms;

  static GradedVirtual zero(BurnsideRing& r);
  static GradedVirtual unit(BurnsideRing& r);
  static GradedVirtual lefschetz_power(BurnsideRing& r, int d);
  static GradedVirtual from_virtual(VirtualGSet v, int degree = 0);

  bool is_zero() const;
  GradedVirtual shifted(int d) const;

  GradedVirtual& operator+=(const GradedVirtual& o);
  GradedVirtual& operator-=(const GradedVirtual& o);
  friend GradedVirtual operator+(GradedVirtual a, const GradedVirtual& b) { return a += b; }
  friend GradedVirtual operator-(GradedVirtual a, const GradedVirtual& b) { return a -= b; }
  friend GradedVirtual operator*(const GradedVirtual& a, const GradedVirtual& b);
  friend bool operator==(const GradedVirtual& a, const GradedVirtual& b);

  std::string str() const;
};

GradedVirtual lpoly_times(const LPoly& p, const GradedVirtual& x);
/// Symmetric power through the multiplicative total-symmetric series;
/// virtual coefficients go through the truncated series inverse.
GradedVirtual sym_power(const GradedVirtual& x, int n);

/// The node case: G = S6 on the six lines through the singular point.
struct A1Case {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<BurnsideRing> ring;
  GSet A;      // natural six-point set
  GSet Z;      // root W(R0)-orbits, 51 points
  GSet F;      // line W(R0)-orbits, 21 points
  int z_fixed_orbits = 0, z_singleton_orbits = 0, z_paired_orbits = 0;
};

A1Case build_a1_case(const Lattice& lat, const RootSet& roots, const LineSet& lines);

/// The cusp case: G = Z2 x| (S3 x S3) generated by (123), (456), (14)(25)(36).
struct A2Case {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<BurnsideRing> ring;
  GSet A;    // six points in two blocks
  GSet K;    // the two lines of the singular conic
  GSet A9;   // unordered cross-block pairs
  GSet A12;  // ordered same-block pairs
  GSet A18;  // ordered cross-block pairs
  GSet Z;    // root W(R0)-orbits, 31 points
  std::vector<int> column_reps;  // element index per table column
};

A2Case build_a2_case(const Lattice& lat, const RootSet& roots, const CharacterTable& gtable);

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BurnsideReport {
  std::vector<SuiteCheck> checks;
  bool all_pass() const;
};

BurnsideReport verify_a1_suite(const Lattice& lat, const RootSet& roots, const LineSet& lines);
BurnsideReport verify_a2_suite(const Lattice& lat, const RootSet& roots,
                               const CharacterTable& gtable);

}  // namespace cubics
