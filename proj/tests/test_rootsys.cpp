#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "cubics/context.hpp"
#include "cubics/errors.hpp"

using namespace cubics;

TEST_CASE("lattice pairing") {
  const Lattice lat = build_lattice();
  LatticeVector e0 = LatticeVector::Zero(), e1 = LatticeVector::Zero();
  e0(0) = 1;
  e1(1) = 1;
  CHECK(pairing(lat, e0, e0) == 1);
  CHECK(pairing(lat, e1, e1) == -1);
  CHECK(pairing(lat, e0, e1) == 0);
  CHECK(pairing(lat, lat.canonical, lat.canonical) == 3);
}

TEST_CASE("roots and lines") {
  const Lattice lat = build_lattice();
  const RootSet rs = enumerate_roots(lat);
  const LineSet ls = enumerate_lines(lat);
  CHECK(rs.roots.size() == 72);
  CHECK(ls.lines.size() == 27);
  for (const auto& r : rs.roots) {
    CHECK(pairing(lat, r, r) == -2);
    CHECK(pairing(lat, r, lat.canonical) == 0);
    CHECK(rs.index_of(-r) >= 0);  // closed under negation
  }
  for (const auto& l : ls.lines) {
    CHECK(pairing(lat, l, l) == -1);
    CHECK(pairing(lat, l, lat.canonical) == -1);
  }
}

TEST_CASE("reflections") {
  const Lattice lat = build_lattice();
  const RootSet rs = enumerate_roots(lat);
  LatticeVector alpha = rs.roots[10];
  const RootPerm r = reflection(lat, rs, alpha);
  CHECK(compose(r, r) == identity_perm());
  CHECK(rs.roots[r[10]] == -alpha);

  LatticeVector not_root = LatticeVector::Zero();
  not_root(0) = 1;
  CHECK_THROWS_AS(reflection(lat, rs, not_root), NotARoot);

  // reflections preserve the pairing on random root pairs
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 71);
  for (int trial = 0; trial < 100; ++trial) {
    const int i = pick(rng), j = pick(rng);
    CHECK(pairing(lat, rs.roots[r[i]], rs.roots[r[j]]) ==
          pairing(lat, rs.roots[i], rs.roots[j]));
  }
}

TEST_CASE("weyl group generation and classes") {
  Context& ctx = Context::get();
  const WeylGroup& w = ctx.weyl();

  CHECK(w.size() == 51840);
  CHECK(w.class_count() == 25);
  CHECK(w.element(0) == identity_perm());

  Int size_sum = 0;
  for (int k = 0; k < w.class_count(); ++k) size_sum += w.conj_class(k).size;
  CHECK(size_sum == 51840);

  // the permutation action commutes with negation
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(w.size()) - 1);
  const RootSet& rs = ctx.roots();
  for (int trial = 0; trial < 200; ++trial) {
    const int e = pick(rng);
    const RootPerm& p = w.element(e);
    for (int i : {0, 13, 44, 71}) {
      const int neg = rs.index_of(-rs.roots[i]);
      CHECK(rs.roots[p[neg]] == -rs.roots[p[i]]);
    }
  }

  // lattice matrices preserve the form and fix the canonical class
  for (int k = 0; k < w.class_count(); ++k) {
    const LatticeMatrix m = w.lattice_matrix(w.conj_class(k).representative);
    CHECK(LatticeVector(m * ctx.lattice().canonical) == ctx.lattice().canonical);
    CHECK(LatticeMatrix(m.transpose() * ctx.lattice().gram * m) == ctx.lattice().gram);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeMatrix m = w.lattice_matrix(pick(rng));
    CHECK(LatticeMatrix(m.transpose() * ctx.lattice().gram * m) == ctx.lattice().gram);
  }
}

TEST_CASE("matching against the table") {
  Context& ctx = Context::get();
  const WeylGroup& w = ctx.weyl();
  const CharacterTable& t = ctx.e6();
  REQUIRE(w.matched());

  // bijection with consistent orders and sizes
  std::set<int> seen;
  for (int col = 1; col <= t.n; ++col) {
    const int k = w.class_of_column(col);
    CHECK(!seen.count(k));
    seen.insert(k);
    CHECK(w.conj_class(k).order == t.order_of(col));
    CHECK(w.conj_class(k).size == t.class_sizes[col - 1]);
    CHECK(w.conj_class(k).lattice_trace - 1 == t.chi(3, col));
  }

  // identity class sits in column 1
  CHECK(w.class_of_column(1) == w.class_of(0));

  // the two order-4 classes with reflection trace 2 land in columns 9 and 11,
  // and their squares separate as columns 3 and 4
  const int k9 = w.class_of_column(9), k11 = w.class_of_column(11);
  CHECK(t.chi(3, 9) == 2);
  CHECK(t.chi(3, 11) == 2);
  CHECK(k9 != k11);
  auto square_column = [&](int k) {
    const RootPerm& rep = w.element(w.conj_class(k).representative);
    return w.conj_class(w.class_of(w.index_of(compose(rep, rep)))).table_column;
  };
  CHECK(square_column(k9) == 3);
  CHECK(square_column(k11) == 4);

  // the reflection class: order 2, size 36, lattice trace 5
  const int k2 = w.class_of_column(2);
  CHECK(w.conj_class(k2).order == 2);
  CHECK(w.conj_class(k2).size == 36);
  CHECK(w.conj_class(k2).lattice_trace == 5);
}

TEST_CASE("power maps agree with literal powers up to 12") {
  Context& ctx = Context::get();
  const WeylGroup& w = ctx.weyl();
  const CharacterTable& t = ctx.e6();
  for (int col = 1; col <= t.n; ++col) {
    const auto& cls = w.conj_class(w.class_of_column(col));
    RootPerm p = identity_perm();
    for (int m = 1; m <= 12; ++m) {
      p = compose(w.element(cls.representative), p);
      const int literal = w.conj_class(w.class_of(w.index_of(p))).table_column;
      CHECK(literal == power_class(t, col, m));
    }
  }
}

TEST_CASE("permutation characters") {
  Context& ctx = Context::get();
  const WeylGroup& w = ctx.weyl();
  const CharacterTable& t = ctx.e6();

  const ClassFunction lines = permutation_character_lines(w, t);
  const ClassFunction roots = permutation_character_roots(w, t);
  const ClassFunction triv = permutation_character_trivial(w, t);
  CHECK(lines.at(1) == 27);
  CHECK(roots.at(1) == 72);
  CHECK(triv == ClassFunction::trivial(t));

  auto mult_set = [&](const ClassFunction& f) {
    std::map<int, Rational> m;
    const Vec<Rational> v = irrep_multiplicities(t, f);
    for (int i = 1; i <= t.n; ++i)
      if (v(i - 1) != 0) m[i] = v(i - 1);
    return m;
  };
  CHECK(mult_set(lines) == std::map<int, Rational>{{1, 1}, {3, 1}, {10, 1}});
  CHECK(mult_set(roots) == std::map<int, Rational>{{1, 1}, {3, 1}, {8, 1}, {10, 1}, {16, 1}});

  const ClassFunction lat = lattice_character(w, t);
  CHECK(lat.at(1) == 7);
  CHECK(lat.at(2) == 5);  // reflection class: 1 + trace 4 on the orthogonal part
  CHECK(mult_set(lat) == std::map<int, Rational>{{1, 1}, {3, 1}});

  // values are fixed-point counts: bounded by the degree
  for (int c = 1; c <= t.n; ++c) {
    CHECK(lines.at(c) >= 0);
    CHECK(lines.at(c) <= 27);
    CHECK(roots.at(c) >= 0);
    CHECK(roots.at(c) <= 72);
  }
}

TEST_CASE("exports and cycle notation") {
  Context& ctx = Context::get();
  CHECK(roots_to_tsv(ctx.roots()).find("index\tE0") == 0);
  CHECK(lines_to_tsv(ctx.lines()).size() > 100);
  const std::string js = classes_to_json(ctx.weyl());
  CHECK(js.find("\"representative\"") != std::string::npos);
  CHECK(cycle_notation(identity_perm()) == "()");
}

TEST_CASE("matching failure modes") {
  Context& ctx = Context::get();

  // wrong table size
  WeylGroup copy = ctx.weyl();
  CHECK_THROWS_AS(match_classes(copy, derive_class_sizes(load_z2s3s3_table())),
                  InconsistentMatching);

  // corrupted fingerprints: swapping two element orders empties a candidate set
  CharacterTable bad = derive_class_sizes(load_e6_table());
  std::swap(bad.orders[0], bad.orders[24]);
  CHECK_THROWS_AS(match_classes(copy, bad), InconsistentMatching);
}

TEST_CASE("weyl cache round trip") {
  Context& ctx = Context::get();
  std::stringstream buf;
  save_weyl(ctx.weyl(), buf);
  WeylGroup loaded;
  REQUIRE(load_weyl(loaded, buf, ctx.lattice(), ctx.roots(), ctx.lines()));
  CHECK(loaded.size() == ctx.weyl().size());
  CHECK(loaded.class_count() == 25);
  CHECK(loaded.matched());
  for (int k = 0; k < 25; ++k)
    CHECK(loaded.conj_class(k).table_column == ctx.weyl().conj_class(k).table_column);
}
