#include "cubics/chartable.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cubics {

namespace {

// Appendix table for W(E6): 25 classes, element orders, power maps for
// p = 2, 3, 5, then the 25 integer character rows.
constexpr int kE6N = 25;

constexpr int kE6Orders[kE6N] = {1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5,
                                 6, 6, 6, 6, 6, 6, 6, 8, 9, 10, 12, 12};

constexpr int kE6P2[kE6N] = {1, 1, 1, 1, 1, 6, 7, 8, 3, 4, 4, 4, 13,
                             6, 7, 7, 8, 8, 7, 8, 9, 22, 13, 19, 14};

constexpr int kE6P3[kE6N] = {1, 2, 3, 4, 5, 1, 1, 1, 9, 10, 11, 12, 13,
                             3, 3, 2, 3, 2, 4, 5, 21, 6, 23, 10, 9};

constexpr int kE6P5[kE6N] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 1,
                             14, 15, 16, 17, 18, 19, 20, 21, 22, 2, 24, 25};

constexpr std::int64_t kE6Values[kE6N][kE6N] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, -1, 1},
    {6, 4, -2, 2, 0, -3, 3, 0, 2, -2, 2, 0, 1, 1, 1, 1, -2, -2, -1, 0, 0, 0, -1, 1, -1},
    {6, -4, -2, 2, 0, -3, 3, 0, 2, 2, -2, 0, 1, 1, 1, -1, -2, 2, -1, 0, 0, 0, 1, -1, -1},
    {10, 0, -6, 2, 0, 1, -2, 4, 2, 0, 0, -2, 0, -3, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, -1},
    {15, -5, 7, 3, -1, -3, 0, 3, -1, -3, 1, 1, 0, 1, -2, -2, 1, 1, 0, -1, 1, 0, 0, 0, -1},
    {15, -5, -1, -1, 3, 6, 3, 0, 3, -1, -1, -1, 0, 2, -1, 1, 2, -2, -1, 0, 1, 0, 0, -1, 0},
    {15, 5, 7, 3, 1, -3, 0, 3, -1, 3, -1, 1, 0, 1, -2, 2, 1, -1, 0, 1, -1, 0, 0, 0, -1},
    {15, 5, -1, -1, -3, 6, 3, 0, 3, 1, 1, -1, 0, 2, -1, -1, 2, 2, -1, 0, -1, 0, 0, 1, 0},
    {20, 10, 4, 4, 2, 2, 5, -1, 0, 2, 2, 0, 0, -2, 1, 1, 1, 1, 1, -1, 0, -1, 0, -1, 0},
    {20, -10, 4, 4, -2, 2, 5, -1, 0, -2, -2, 0, 0, -2, 1, -1, 1, -1, 1, 1, 0, -1, 0, 1, 0},
    {20, 0, 4, -4, 0, -7, 2, 2, 4, 0, 0, 0, 0, 1, -2, 0, -2, 0, 2, 0, 0, -1, 0, 0, 1},
    {24, 4, 8, 0, 4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, -2, -1, 1, 0, 1, 0, 0, -1, 0, 0},
    {24, -4, 8, 0, -4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, 2, -1, -1, 0, -1, 0, 0, 1, 0, 0},
    {30, -10, -10, 2, 2, 3, 3, 3, -2, 4, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 1, 1},
    {30, 10, -10, 2, -2, 3, 3, 3, -2, -4, 0, 0, 0, -1, -1, 1, -1, 1, -1, 1, 0, 0, 0, -1, 1},
    {60, 10, -4, 4, 2, 6, -3, -3, 0, -2, -2, 0, 0, 2, -1, 1, -1, 1, 1, -1, 0, 0, 0, 1, 0},
    {60, -10, -4, 4, -2, 6, -3, -3, 0, 2, 2, 0, 0, 2, -1, -1, -1, -1, 1, 1, 0, 0, 0, -1, 0},
    {60, 0, 12, 4, 0, -3, -6, 0, 4, 0, 0, 0, 0, -3, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1},
    {64, 16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, -2, 0, -2, 0, 0, 0, 1, 1, 0, 0},
    {64, -16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, 2, 0, 2, 0, 0, 0, 1, -1, 0, 0},
    {80, 0, -16, 0, 0, -10, -4, 2, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 0, 0, -1, 0, 0, 0},
    {81, 9, 9, -3, -3, 0, 0, 0, -3, 3, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0},
    {81, -9, 9, -3, 3, 0, 0, 0, -3, -3, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
    {90, 0, -6, -6, 0, 9, 0, 0, 2, 0, 0, 2, 0, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}};

// Appendix table for Z2 x| (S3 x S3) inside S6. Columns are labeled by
// cycle representatives; element orders follow from the cycle types.
constexpr int kGN = 9;

const char* const kGLabels[kGN] = {"()",         "(56)",       "(456)",
                                   "(23)(56)",   "(23)(456)",  "(123)(456)",
                                   "(14)(25)(36)", "(14)(2536)", "(142536)"};

constexpr int kGOrders[kGN] = {1, 2, 3, 2, 6, 3, 2, 4, 6};

constexpr std::int64_t kGValues[kGN][kGN] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, 1, -1, 1, -1, 1, -1},
    {1, -1, 1, 1, -1, 1, 1, -1, 1},
    {1, 1, 1, 1, 1, 1, -1, -1, -1},
    {2, 0, 2, -2, 0, 2, 0, 0, 0},
    {4, -2, 1, 0, 1, -2, 0, 0, 0},
    {4, 0, -2, 0, 0, 1, -2, 0, 1},
    {4, 0, -2, 0, 0, 1, 2, 0, -1},
    {4, 2, 1, 0, -1, -2, 0, 0, 0}};

}  // namespace

std::string table_name(TableId id) {
  return id == TableId::WE6 ? "W(E6)" : "Z2x(S3xS3)";
}

CharacterTable load_e6_table() {
  CharacterTable t;
  t.id = TableId::WE6;
  t.name = table_name(t.id);
  t.n = kE6N;
  t.orders.assign(kE6Orders, kE6Orders + kE6N);
  t.power_maps[2].assign(kE6P2, kE6P2 + kE6N);
  t.power_maps[3].assign(kE6P3, kE6P3 + kE6N);
  t.power_maps[5].assign(kE6P5, kE6P5 + kE6N);
  t.values.resize(kE6N, kE6N);
  for (int i = 0; i < kE6N; ++i)
    for (int c = 0; c < kE6N; ++c) t.values(i, c) = kE6Values[i][c];
  return t;
}

CharacterTable load_z2s3s3_table() {
  CharacterTable t;
  t.id = TableId::Z2S3S3;
  t.name = table_name(t.id);
  t.n = kGN;
  t.orders.assign(kGOrders, kGOrders + kGN);
  t.class_labels.assign(kGLabels, kGLabels + kGN);
  t.values.resize(kGN, kGN);
  for (int i = 0; i < kGN; ++i)
    for (int c = 0; c < kGN; ++c) t.values(i, c) = kGValues[i][c];
  return t;
}

CharacterTable derive_class_sizes(CharacterTable table) {
  Int order = 0;
  for (int i = 0; i < table.n; ++i) order += Int(table.values(i, 0)) * table.values(i, 0);
  table.group_order = order;
  table.class_sizes.assign(table.n, Int(0));
  for (int c = 0; c < table.n; ++c) {
    Int norm = 0;
    for (int i = 0; i < table.n; ++i) norm += Int(table.values(i, c)) * table.values(i, c);
    if (norm == 0 || order % norm != 0)
      throw NonIntegralClassSize("class " + std::to_string(c + 1) + ": |G| not divisible by " +
                                 norm.str());
    table.class_sizes[c] = order / norm;
  }
  return table;
}

int power_class(const CharacterTable& table, int cls, long m) {
  if (m < 1) throw UnsupportedExponent("exponent must be positive");
  const int ord = table.order_of(cls);
  long r = m % ord;
  if (r == 0) return 1;
  // g^r is conjugate to g^gcd(r, ord) in a group with a rational table
  long d = std::gcd(r, static_cast<long>(ord));
  int c = cls;
  for (int p : {2, 3, 5}) {
    while (d % p == 0) {
      auto it = table.power_maps.find(p);
      if (it == table.power_maps.end())
        throw UnsupportedExponent("table " + table.name + " has no p=" + std::to_string(p) +
                                  " power map");
      c = it->second[c - 1];
      d /= p;
    }
  }
  if (d != 1)
    throw UnsupportedExponent("residual exponent " + std::to_string(d) +
                              " has a prime factor outside {2,3,5}");
  return c;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ValidationReport validate_table(const CharacterTable& t) {
  ValidationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  bool dims_pos = true;
  for (int i = 0; i < t.n; ++i) dims_pos &= t.values(i, 0) > 0;
  add("dimensions-positive", dims_pos);

  add("sizes-derived", t.sizes_derived());
  if (!t.sizes_derived()) return rep;

  bool col_orth = true;
  std::string col_detail;
  for (int c = 0; c < t.n && col_orth; ++c) {
    for (int d = 0; d < t.n && col_orth; ++d) {
      Int s = 0;
      for (int i = 0; i < t.n; ++i) s += Int(t.values(i, c)) * t.values(i, d);
      const Int expect = (c == d) ? t.group_order / t.class_sizes[c] : Int(0);
      if (s != expect) {
        col_orth = false;
        col_detail = "columns " + std::to_string(c + 1) + "," + std::to_string(d + 1);
      }
    }
  }
  add("column-orthogonality", col_orth, col_detail);

  bool row_orth = true;
  std::string row_detail;
  for (int i = 0; i < t.n && row_orth; ++i) {
    for (int j = 0; j < t.n && row_orth; ++j) {
      Int s = 0;
      for (int c = 0; c < t.n; ++c) s += t.class_sizes[c] * t.values(i, c) * t.values(j, c);
      const Int expect = (i == j) ? t.group_order : Int(0);
      if (s != expect) {
        row_orth = false;
        row_detail = "rows " + std::to_string(i + 1) + "," + std::to_string(j + 1);
      }
    }
  }
  add("row-orthogonality", row_orth, row_detail);

  Int size_sum = 0;
  for (const auto& s : t.class_sizes) size_sum += s;
  add("sizes-sum-to-order", size_sum == t.group_order);
  add("identity-class-size-one", t.class_sizes[0] == 1);

  bool pm_ok = true;
  std::string pm_detail;
  for (const auto& [p, img] : t.power_maps) {
    if (img[0] != 1) {
      pm_ok = false;
      pm_detail = "p=" + std::to_string(p) + " moves the identity class";
      break;
    }
    for (int c = 0; c < t.n; ++c) {
      const int oc = t.orders[c];
      const int oi = t.orders[img[c] - 1];
      if (oi != oc / std::gcd(oc, p)) {
        pm_ok = false;
        pm_detail = "p=" + std::to_string(p) + " at class " + std::to_string(c + 1);
        break;
      }
    }
    if (!pm_ok) break;
  }
  add("power-maps-respect-orders", pm_ok, pm_detail);
  return rep;
}

ClassFunction ClassFunction::zero(const CharacterTable& t) {
  ClassFunction f;
  f.table = t.id;
  f.v = Vec<Rational>::Constant(t.n, Rational(0));
  return f;
}

ClassFunction ClassFunction::trivial(const CharacterTable& t) {
  ClassFunction f;
  f.table = t.id;
  f.v = Vec<Rational>::Constant(t.n, Rational(1));
  return f;
}

ClassFunction ClassFunction::irrep(const CharacterTable& t, int irrep) {
  ClassFunction f = zero(t);
  for (int c = 0; c < t.n; ++c) f.v(c) = Rational(t.values(irrep - 1, c));
  return f;
}

bool ClassFunction::is_zero() const {
  for (Eigen::Index c = 0; c < v.size(); ++c)
    if (v(c) != 0) return false;
  return true;
}

namespace {
void check_same_table(const ClassFunction& a, const ClassFunction& b) {
  if (a.table != b.table || a.v.size() != b.v.size())
    throw TableMismatch("class functions over different tables");
}
}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same_table(*this, o);
  v += o.v;
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same_table(*this, o);
  v -= o.v;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  check_same_table(a, b);
  ClassFunction r = a;
  for (Eigen::Index c = 0; c < r.v.size(); ++c) r.v(c) *= b.v(c);
  return r;
}

ClassFunction operator*(const Rational& s, ClassFunction a) {
  for (Eigen::Index c = 0; c < a.v.size(); ++c) a.v(c) *= s;
  return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.table != b.table || a.v.size() != b.v.size()) return false;
  for (Eigen::Index c = 0; c < a.v.size(); ++c)
    if (a.v(c) != b.v(c)) return false;
  return true;
}

Vec<Rational> irrep_multiplicities(const CharacterTable& t, const ClassFunction& f) {
  if (t.id != f.table) throw TableMismatch("irrep_multiplicities: table mismatch");
  if (!t.sizes_derived()) throw Error("irrep_multiplicities: class sizes not derived");
  Vec<Rational> m = Vec<Rational>::Constant(t.n, Rational(0));
  const Rational order(t.group_order);
  for (int i = 0; i < t.n; ++i) {
    Rational s(0);
    for (int c = 0; c < t.n; ++c) s += Rational(t.class_sizes[c]) * Rational(t.values(i, c)) * f.v(c);
    m(i) = s / order;
  }
  return m;
}

std::string table_to_tsv(const CharacterTable& t) {
  std::ostringstream os;
  os << "class";
  for (int c = 1; c <= t.n; ++c) os << "\t" << c;
  os << "\norder";
  for (int c = 0; c < t.n; ++c) os << "\t" << t.orders[c];
  os << "\n";
  for (const auto& [p, img] : t.power_maps) {
    os << "p=" << p;
    for (int c = 0; c < t.n; ++c) os << "\t" << img[c];
    os << "\n";
  }
  if (t.sizes_derived()) {
    os << "size";
    for (int c = 0; c < t.n; ++c) os << "\t" << t.class_sizes[c].str();
    os << "\n";
  }
  for (int i = 0; i < t.n; ++i) {
    os << "chi" << (i + 1);
    for (int c = 0; c < t.n; ++c) os << "\t" << t.values(i, c);
    os << "\n";
  }
  return os.str();
}

std::string table_to_json(const CharacterTable& t) {
  nlohmann::ordered_json j;
  j["name"] = t.name;
  j["n"] = t.n;
  j["orders"] = t.orders;
  nlohmann::ordered_json pm = nlohmann::ordered_json::object();
  for (const auto& [p, img] : t.power_maps) pm[std::to_string(p)] = img;
  j["power_maps"] = pm;
  if (!t.class_labels.empty()) j["class_labels"] = t.class_labels;
  std::vector<std::vector<std::int64_t>> vals(t.n, std::vector<std::int64_t>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int c = 0; c < t.n; ++c) vals[i][c] = t.values(i, c);
  j["values"] = vals;
  if (t.sizes_derived()) {
    std::vector<std::string> sizes;
    for (const auto& s : t.class_sizes) sizes.push_back(s.str());
    j["class_sizes"] = sizes;
    j["group_order"] = t.group_order.str();
  }
  return j.dump(2);
}

}  // namespace cubics
