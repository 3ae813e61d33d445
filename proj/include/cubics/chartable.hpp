#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubics/errors.hpp"
#include "cubics/numeric.hpp"

namespace cubics {

enum class TableId { WE6, Z2S3S3 };

std::string table_name(TableId id);

/// 1-based row index into a character table (chi_1 .. chi_n).
struct IrrepId {
  TableId table;
  int index;
  friend bool operator==(const IrrepId&, const IrrepId&) = default;
  friend auto operator<=>(const IrrepId&, const IrrepId&) = default;
};

/// 1-based column index into a character table.
struct ConjClassId {
  TableId table;
  int index;
  friend bool operator==(const ConjClassId&, const ConjClassId&) = default;
  friend auto operator<=>(const ConjClassId&, const ConjClassId&) = default;
};

/// An integer character table together with element orders, the prime power
/// maps printed with it, and the class sizes recovered from orthogonality.
struct CharacterTable {
  TableId id = TableId::WE6;
  std::string name;
  int n = 0;
  std::vector<int> orders;                    // per class, 1-based semantics in [1..n] slots 0..n-1
  std::map<int, std::vector<int>> power_maps; // prime -> image class (1-based values)
  Mat<std::int64_t> values;                   // values(i,c) = chi_{i+1} on class c+1
  std::vector<std::string> class_labels;      // optional (cycle labels for the 72-element group)
  std::vector<Int> class_sizes;               // derived; empty until derive_class_sizes
  Int group_order = 0;                        // derived

  std::int64_t chi(int irrep, int cls) const { return values(irrep - 1, cls - 1); }
  int order_of(int cls) const { return orders[cls - 1]; }
  bool sizes_derived() const { return !class_sizes.empty(); }
};

/// A rational-valued function on the conjugacy classes of one table.
struct ClassFunction {
  TableId table = TableId::WE6;
  Vec<Rational> v;

  static ClassFunction zero(const CharacterTable& t);
  static ClassFunction trivial(const CharacterTable& t);
  /// The row chi_irrep of the table as a class function.
  static ClassFunction irrep(const CharacterTable& t, int irrep);

  int size() const { return static_cast<int>(v.size()); }
  bool is_zero() const;
  Rational at(int cls) const { return v(cls - 1); }  // 1-based

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);  // pointwise
  friend ClassFunction operator*(const Rational& s, ClassFunction a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

/// Bit-exact transcriptions of the two appendix tables. Class sizes and the
/// group order stay unset until derive_class_sizes runs.
CharacterTable load_e6_table();
CharacterTable load_z2s3s3_table();

/// Second orthogonality: group_order = sum of squared dimensions,
/// class_sizes[c] = group_order / sum_i chi_i(c)^2. Throws
/// NonIntegralClassSize when a division is not exact.
CharacterTable derive_class_sizes(CharacterTable table);

/// Class of g^m for g in class `cls`, via the embedded power maps.
/// The exponent is reduced modulo the element order first; the reduced
/// exponent is replaced by gcd(m mod ord, ord), which is legitimate because
/// every character in these tables is rational.
int power_class(const CharacterTable& table, int cls, long m);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

/// Column/row orthogonality, size bookkeeping, and power-map consistency.
ValidationReport validate_table(const CharacterTable& table);

/// Multiplicity vector <f, chi_i> for all irreps, via class sizes.
Vec<Rational> irrep_multiplicities(const CharacterTable& table, const ClassFunction& f);

std::string table_to_tsv(const CharacterTable& table);
std::string table_to_json(const CharacterTable& table);

}  // namespace cubics
