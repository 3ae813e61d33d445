#include "cubics/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cubics/errors.hpp"

namespace cubics {

namespace {

std::string perm_key(const RootPerm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size());
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  for (int i = 0; i < 7; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

std::string coord_key(const LatticeVector& v) {
  std::ostringstream os;
  for (int i = 0; i < 7; ++i) os << v(i) << ",";
  return os.str();
}

LatticeVector basis(int i) {
  LatticeVector v = LatticeVector::Zero();
  v(i) = 1;
  return v;
}

}  // namespace

Lattice build_lattice() {
  Lattice lat;
  lat.gram = LatticeMatrix::Zero();
  lat.gram(0, 0) = 1;
  for (int i = 1; i < 7; ++i) lat.gram(i, i) = -1;
  lat.canonical << -3, 1, 1, 1, 1, 1, 1;
  return lat;
}

int RootSet::index_of(const LatticeVector& v) const {
  auto it = lookup.find(coord_key(v));
  return it == lookup.end() ? -1 : it->second;
}

RootSet enumerate_roots(const Lattice& lat) {
  std::vector<LatticeVector> out;

  LatticeVector top = 2 * basis(0);
  for (int i = 1; i < 7; ++i) top -= basis(i);
  out.push_back(top);
  out.push_back(-top);

  for (int i = 1; i < 7; ++i)
    for (int j = 1; j < 7; ++j)
      if (i != j) out.push_back(basis(i) - basis(j));

  for (int i = 1; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        LatticeVector v = basis(0) - basis(i) - basis(j) - basis(k);
        out.push_back(v);
        out.push_back(-v);
      }

  for (const auto& r : out) {
    if (pairing(lat, r, r) != -2 || pairing(lat, r, lat.canonical) != 0)
      throw CardinalityMismatch("enumerated vector is not a root");
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const LatticeVector& a, const LatticeVector& b) { return a == b; }),
            out.end());
  if (out.size() != 72)
    throw CardinalityMismatch("expected 72 roots, found " + std::to_string(out.size()));

  RootSet rs;
  rs.roots = std::move(out);
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    rs.lookup.emplace(coord_key(rs.roots[i]), static_cast<int>(i));
  return rs;
}

LineSet enumerate_lines(const Lattice& lat) {
  std::vector<LatticeVector> out;
  for (int i = 1; i < 7; ++i) out.push_back(basis(i));
  for (int i = 1; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) out.push_back(basis(0) - basis(i) - basis(j));
  for (int i = 1; i < 7; ++i) {
    LatticeVector v = 2 * basis(0) + basis(i);
    for (int j = 1; j < 7; ++j) v -= basis(j);
    out.push_back(v);
  }
  for (const auto& l : out) {
    if (pairing(lat, l, l) != -1 || pairing(lat, l, lat.canonical) != -1)
      throw CardinalityMismatch("enumerated vector is not a line class");
  }
  std::sort(out.begin(), out.end(), lex_less);
  if (out.size() != 27)
    throw CardinalityMismatch("expected 27 lines, found " + std::to_string(out.size()));
  LineSet ls;
  ls.lines = std::move(out);
  return ls;
}

RootPerm identity_perm() {
  RootPerm p;
  for (int i = 0; i < 72; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

RootPerm compose(const RootPerm& a, const RootPerm& b) {
  RootPerm r;
  for (int i = 0; i < 72; ++i) r[i] = a[b[i]];
  return r;
}

RootPerm inverse(const RootPerm& a) {
  RootPerm r;
  for (int i = 0; i < 72; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

RootPerm reflection(const Lattice& lat, const RootSet& rs, const LatticeVector& alpha) {
  if (pairing(lat, alpha, alpha) != -2)
    throw NotARoot("reflection vector has self-pairing != -2");
  RootPerm p;
  for (int i = 0; i < 72; ++i) {
    const LatticeVector& r = rs.roots[i];
    LatticeVector image = r + pairing(lat, alpha, r) * alpha;
    const int j = rs.index_of(image);
    if (j < 0) throw NotARoot("reflection image left the root set");
    p[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

int WeylGroup::index_of(const RootPerm& p) const {
  auto it = element_index_.find(perm_key(p));
  return it == element_index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

WeylGroup generate_weyl(const Lattice& lat, const RootSet& roots, const LineSet& lines,
                        const Int& expected_order) {
  WeylGroup w;
  w.lat_ = lat;
  w.roots_ = roots;
  w.lines_ = lines;

  std::vector<LatticeVector> simple;
  for (int i = 1; i < 6; ++i) simple.push_back(basis(i) - basis(i + 1));
  simple.push_back(basis(0) - basis(1) - basis(2) - basis(3));
  for (const auto& a : simple) w.generators_.push_back(reflection(lat, roots, a));

  w.elements_.push_back(identity_perm());
  w.element_index_.emplace(perm_key(w.elements_[0]), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const auto& g : w.generators_) {
      RootPerm next = compose(g, w.elements_[cur]);
      auto [it, inserted] = w.element_index_.emplace(perm_key(next),
                                                     static_cast<int>(w.elements_.size()));
      if (inserted) {
        w.elements_.push_back(next);
        queue.push_back(it->second);
      }
    }
  }
  if (Int(w.elements_.size()) != expected_order)
    throw OrderMismatch("Weyl closure has " + std::to_string(w.elements_.size()) +
                        " elements, expected " + expected_order.str());
  return w;
}

namespace {

int perm_order(const RootPerm& p) {
  long ord = 1;
  std::array<bool, 72> seen{};
  for (int i = 0; i < 72; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long>(len));
  }
  return static_cast<int>(ord);
}

}  // namespace

namespace {

// exact inverse of a small rational matrix by Gauss-Jordan elimination
Eigen::Matrix<Rational, 7, 7> rational_inverse(Eigen::Matrix<Rational, 7, 7> a) {
  Eigen::Matrix<Rational, 7, 7> inv;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) inv(i, j) = Rational(i == j ? 1 : 0);
  for (int col = 0; col < 7; ++col) {
    int piv = -1;
    for (int r = col; r < 7; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("rational_inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < 7; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rational d = a(col, col);
    for (int j = 0; j < 7; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < 7; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (int j = 0; j < 7; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

LatticeMatrix WeylGroup::lattice_matrix(int element) const {
  // images of six independent roots plus the (fixed) canonical class pin the map
  std::vector<LatticeVector> simple;
  for (int i = 1; i < 6; ++i) simple.push_back(basis(i) - basis(i + 1));
  simple.push_back(basis(0) - basis(1) - basis(2) - basis(3));

  Eigen::Matrix<Rational, 7, 7> b, bi;
  for (int k = 0; k < 6; ++k) {
    const int idx = roots_.index_of(simple[k]);
    const int img = elements_[element][idx];
    for (int i = 0; i < 7; ++i) {
      b(i, k) = Rational(simple[k](i));
      bi(i, k) = Rational(roots_.roots[img](i));
    }
  }
  for (int i = 0; i < 7; ++i) {
    b(i, 6) = Rational(lat_.canonical(i));
    bi(i, 6) = Rational(lat_.canonical(i));
  }
  const Eigen::Matrix<Rational, 7, 7> binv = rational_inverse(b);
  LatticeMatrix out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Rational acc(0);
      for (int k = 0; k < 7; ++k) acc += bi(i, k) * binv(k, j);
      out(i, j) = to_i64(acc);
    }
  return out;
}

std::vector<int> WeylGroup::line_perm(int element) const {
  const LatticeMatrix m = lattice_matrix(element);
  std::vector<int> p(lines_.lines.size());
  for (std::size_t i = 0; i < lines_.lines.size(); ++i) {
    LatticeVector image = m * lines_.lines[i];
    int j = -1;
    for (std::size_t k = 0; k < lines_.lines.size(); ++k)
      if (lines_.lines[k] == image) {
        j = static_cast<int>(k);
        break;
      }
    if (j < 0) throw Error("line image left the line set");
    p[i] = j;
  }
  return p;
}

void conjugacy_classes(WeylGroup& w) {
  const int n = static_cast<int>(w.elements_.size());
  w.element_class_.assign(n, 0xff);
  w.classes_.clear();

  std::vector<RootPerm> gen_inv;
  for (const auto& g : w.generators_) gen_inv.push_back(inverse(g));

  for (int e = 0; e < n; ++e) {
    if (w.element_class_[e] != 0xff) continue;
    const auto cls_id = static_cast<std::uint8_t>(w.classes_.size());
    long size = 0;
    std::deque<int> queue{e};
    w.element_class_[e] = cls_id;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t k = 0; k < w.generators_.size(); ++k) {
        RootPerm conj = compose(w.generators_[k], compose(w.elements_[cur], gen_inv[k]));
        const int idx = w.index_of(conj);
        if (w.element_class_[idx] == 0xff) {
          w.element_class_[idx] = cls_id;
          queue.push_back(idx);
        }
      }
    }
    ConjClass c;
    c.representative = e;
    c.size = size;
    c.order = perm_order(w.elements_[e]);
    c.lattice_trace = w.lattice_matrix(e).trace();
    w.classes_.push_back(c);
  }
}

void match_classes(WeylGroup& w, const CharacterTable& table) {
  if (!table.sizes_derived()) throw Error("match_classes: table sizes not derived");
  const int k = w.class_count();
  if (k != table.n)
    throw InconsistentMatching("class count " + std::to_string(k) + " != table size");

  // p-power image class of each computed class
  std::map<int, std::vector<int>> power_image;
  for (int p : {2, 3, 5}) {
    power_image[p].resize(k);
    for (int c = 0; c < k; ++c) {
      const int rep = w.classes_[c].representative;
      RootPerm q = identity_perm();
      for (int t = 0; t < p; ++t) q = compose(q, w.elements_[rep]);
      power_image[p][c] = w.class_of(w.index_of(q));
    }
  }

  // candidate columns per class: order, size, and the six-dimensional
  // reflection trace against the chi_3 row
  std::vector<std::vector<int>> cand(k);
  for (int c = 0; c < k; ++c) {
    for (int col = 1; col <= table.n; ++col) {
      if (table.order_of(col) != w.classes_[c].order) continue;
      if (table.class_sizes[col - 1] != w.classes_[c].size) continue;
      if (table.chi(3, col) != w.classes_[c].lattice_trace - 1) continue;
      cand[c].push_back(col);
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < k; ++c) {
      auto& cs = cand[c];
      const auto before = cs.size();
      cs.erase(std::remove_if(cs.begin(), cs.end(),
                              [&](int col) {
                                for (int p : {2, 3, 5}) {
                                  const int img_cls = power_image[p][c];
                                  const int img_col = table.power_maps.at(p)[col - 1];
                                  const auto& ic = cand[img_cls];
                                  if (std::find(ic.begin(), ic.end(), img_col) == ic.end())
                                    return true;
                                }
                                return false;
                              }),
               cs.end());
      if (cs.empty()) throw InconsistentMatching("no column fits class " + std::to_string(c));
      if (cs.size() == 1) {
        for (int d = 0; d < k; ++d) {
          if (d == c) continue;
          auto& ds = cand[d];
          const auto n0 = ds.size();
          ds.erase(std::remove(ds.begin(), ds.end(), cs[0]), ds.end());
          if (ds.size() != n0) changed = true;
          if (ds.empty()) throw InconsistentMatching("column conflict during refinement");
        }
      }
      if (cs.size() != before) changed = true;
    }
  }

  w.column_class_.assign(table.n, -1);
  for (int c = 0; c < k; ++c) {
    if (cand[c].size() != 1)
      throw AmbiguousMatching("class " + std::to_string(c) + " has " +
                              std::to_string(cand[c].size()) + " candidate columns");
    const int col = cand[c][0];
    if (w.column_class_[col - 1] != -1) throw InconsistentMatching("matching is not injective");
    w.column_class_[col - 1] = c;
  }
  for (int c = 0; c < k; ++c) w.classes_[c].table_column = cand[c][0];
  w.matched_ = true;
}

ClassFunction permutation_character(const WeylGroup& w, const CharacterTable& table, int degree,
                                    const std::function<std::vector<int>(int)>& point_perm) {
  if (!w.matched()) throw Error("permutation_character: classes not matched");
  ClassFunction f = ClassFunction::zero(table);
  for (int col = 1; col <= table.n; ++col) {
    const auto& cls = w.conj_class(w.class_of_column(col));
    const std::vector<int> p = point_perm(cls.representative);
    if (static_cast<int>(p.size()) != degree) throw InvalidAction("degree mismatch");
    int fixed = 0;
    for (int i = 0; i < degree; ++i) fixed += (p[i] == i);
    f.v(col - 1) = Rational(fixed);
  }
  const Vec<Rational> mult = irrep_multiplicities(table, f);
  for (int i = 0; i < table.n; ++i) {
    if (!is_integer(mult(i)) || mult(i) < 0)
      throw NonIntegralDecomposition("permutation character has multiplicity " + mult(i).str() +
                                     " at chi_" + std::to_string(i + 1));
  }
  return f;
}

ClassFunction permutation_character_lines(const WeylGroup& w, const CharacterTable& table) {
  return permutation_character(w, table, static_cast<int>(w.lines().lines.size()),
                               [&](int rep) { return w.line_perm(rep); });
}

ClassFunction permutation_character_roots(const WeylGroup& w, const CharacterTable& table) {
  return permutation_character(w, table, 72, [&](int rep) {
    const RootPerm& p = w.element(rep);
    return std::vector<int>(p.begin(), p.end());
  });
}

ClassFunction permutation_character_trivial(const WeylGroup& w, const CharacterTable& table) {
  return permutation_character(w, table, 1, [](int) { return std::vector<int>{0}; });
}

ClassFunction lattice_character(const WeylGroup& w, const CharacterTable& table) {
  if (!w.matched()) throw Error("lattice_character: classes not matched");
  ClassFunction f = ClassFunction::zero(table);
  for (int col = 1; col <= table.n; ++col) {
    const auto& cls = w.conj_class(w.class_of_column(col));
    f.v(col - 1) = Rational(cls.lattice_trace);
  }
  const Vec<Rational> mult = irrep_multiplicities(table, f);
  for (int i = 0; i < table.n; ++i)
    if (!is_integer(mult(i)) || mult(i) < 0)
      throw NonIntegralDecomposition("lattice character decomposition failed");
  return f;
}

std::string cycle_notation(const RootPerm& p) {
  std::ostringstream os;
  std::array<bool, 72> seen{};
  bool any = false;
  for (int i = 0; i < 72; ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    os << "(";
    bool first = true;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

std::uint64_t roots_fingerprint(const RootSet& rs) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const auto& r : rs.roots)
    for (int i = 0; i < 7; ++i) {
      h ^= static_cast<std::uint64_t>(r(i) + 8);
      h *= 1099511628211ull;
    }
  return h;
}

namespace {
constexpr std::uint32_t kCacheMagic = 0x43554257;  // "CUBW"
constexpr std::uint32_t kCacheVersion = 1;

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool get(std::istream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return static_cast<bool>(is);
}
}  // namespace

void save_weyl(const WeylGroup& w, std::ostream& os) {
  put(os, kCacheMagic);
  put(os, kCacheVersion);
  put(os, roots_fingerprint(w.roots_));
  put(os, static_cast<std::uint64_t>(w.elements_.size()));
  for (const auto& p : w.elements_) os.write(reinterpret_cast<const char*>(p.data()), 72);
  put(os, static_cast<std::uint32_t>(w.classes_.size()));
  for (const auto& c : w.classes_) {
    put(os, static_cast<std::int64_t>(c.representative));
    put(os, static_cast<std::int64_t>(c.size.convert_to<long long>()));
    put(os, static_cast<std::int32_t>(c.order));
    put(os, c.lattice_trace);
    put(os, static_cast<std::int32_t>(c.table_column));
  }
  os.write(reinterpret_cast<const char*>(w.element_class_.data()),
           static_cast<std::streamsize>(w.element_class_.size()));
  put(os, static_cast<std::uint8_t>(w.matched_ ? 1 : 0));
  if (w.matched_)
    for (int v : w.column_class_) put(os, static_cast<std::int32_t>(v));
}

bool load_weyl(WeylGroup& w, std::istream& is, const Lattice& lat, const RootSet& roots,
               const LineSet& lines) {
  std::uint32_t magic = 0, version = 0;
  std::uint64_t fp = 0, count = 0;
  if (!get(is, magic) || magic != kCacheMagic) return false;
  if (!get(is, version) || version != kCacheVersion) return false;
  if (!get(is, fp) || fp != roots_fingerprint(roots)) return false;
  if (!get(is, count)) return false;

  w.lat_ = lat;
  w.roots_ = roots;
  w.lines_ = lines;
  w.generators_.clear();
  for (int i = 1; i < 6; ++i)
    w.generators_.push_back(reflection(lat, roots, basis(i) - basis(i + 1)));
  w.generators_.push_back(reflection(lat, roots, basis(0) - basis(1) - basis(2) - basis(3)));

  w.elements_.assign(count, RootPerm{});
  w.element_index_.clear();
  for (std::uint64_t i = 0; i < count; ++i) {
    is.read(reinterpret_cast<char*>(w.elements_[i].data()), 72);
    if (!is) return false;
    w.element_index_.emplace(perm_key(w.elements_[i]), static_cast<int>(i));
  }
  std::uint32_t nclasses = 0;
  if (!get(is, nclasses)) return false;
  w.classes_.assign(nclasses, ConjClass{});
  for (auto& c : w.classes_) {
    std::int64_t rep = 0, size = 0;
    std::int32_t order = 0, column = 0;
    std::int64_t trace = 0;
    if (!get(is, rep) || !get(is, size) || !get(is, order) || !get(is, trace) || !get(is, column))
      return false;
    c.representative = static_cast<int>(rep);
    c.size = size;
    c.order = order;
    c.lattice_trace = trace;
    c.table_column = column;
  }
  w.element_class_.assign(count, 0);
  is.read(reinterpret_cast<char*>(w.element_class_.data()), static_cast<std::streamsize>(count));
  if (!is) return false;
  std::uint8_t matched = 0;
  if (!get(is, matched)) return false;
  w.matched_ = matched != 0;
  w.column_class_.clear();
  if (w.matched_) {
    w.column_class_.assign(nclasses, -1);
    for (auto& v : w.column_class_) {
      std::int32_t x = 0;
      if (!get(is, x)) return false;
      v = x;
    }
  }
  return true;
}

std::string roots_to_tsv(const RootSet& rs) {
  std::ostringstream os;
  os << "index\tE0\tE1\tE2\tE3\tE4\tE5\tE6\n";
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    os << (i + 1);
    for (int c = 0; c < 7; ++c) os << "\t" << rs.roots[i](c);
    os << "\n";
  }
  return os.str();
}

std::string lines_to_tsv(const LineSet& ls) {
  std::ostringstream os;
  os << "index\tE0\tE1\tE2\tE3\tE4\tE5\tE6\n";
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    os << (i + 1);
    for (int c = 0; c < 7; ++c) os << "\t" << ls.lines[i](c);
    os << "\n";
  }
  return os.str();
}

std::string classes_to_json(const WeylGroup& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int c = 0; c < w.class_count(); ++c) {
    const auto& cls = w.conj_class(c);
    nlohmann::ordered_json j;
    j["class"] = c + 1;
    j["order"] = cls.order;
    j["size"] = cls.size.str();
    j["lattice_trace"] = cls.lattice_trace;
    j["table_column"] = cls.table_column;
    j["representative"] = cycle_notation(w.element(cls.representative));
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace cubics
