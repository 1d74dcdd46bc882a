#include <doctest.h>

#include <algorithm>
#include <random>

#include "splitkit/catalog.hpp"
#include "splitkit/cyclic_axioms.hpp"
#include "splitkit/enumerate.hpp"
#include "splitkit/isomorphism.hpp"
#include "splitkit/structure.hpp"

using namespace splitkit;

namespace {

bool throws_code(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("from_bases validates the running examples") {
  BasisMatroid u24 = from_bases(4, {ElemSet::of({0, 1}), ElemSet::of({0, 2}),
                                    ElemSet::of({0, 3}), ElemSet::of({1, 2}),
                                    ElemSet::of({1, 3}), ElemSet::of({2, 3})});
  CHECK(u24 == uniform(2, 4));

  BasisMatroid pair = from_bases(2, {ElemSet::of({0}), ElemSet::of({1})});
  CHECK(pair.r == 1);
  CHECK(pair.rank(ElemSet::of({0, 1})) == 1);

  // x = 0 in {0,1} against {2,3}: neither {1,2} nor {1,3} is present.
  CHECK(throws_code(errc::exchange_violation, [] {
    from_bases(4, {ElemSet::of({0, 1}), ElemSet::of({2, 3})});
  }));
  CHECK(throws_code(errc::unequal_cardinality, [] {
    from_bases(2, {ElemSet::of({0, 1}), ElemSet::of({0})});
  }));
  CHECK(throws_code(errc::out_of_range, [] { from_bases(2, {ElemSet::of({5})}); }));

  // The empty matroid is a first-class value.
  BasisMatroid empty = from_bases(0, {ElemSet{}});
  CHECK(empty.n == 0);
  CHECK(empty.r == 0);
}

TEST_CASE("rank and closure") {
  BasisMatroid u24 = uniform(2, 4);
  CHECK(u24.rank(ElemSet::of({0, 1, 2})) == 2);
  CHECK(u24.rank(ElemSet{}) == 0);
  CHECK(u24.closure(ElemSet::of({0})) == ElemSet::of({0}));
  CHECK(u24.closure(u24.ground()) == u24.ground());

  BasisMatroid w2 = named("mw2");  // 0 and 1 parallel
  CHECK(w2.rank(ElemSet::of({0, 1})) == 1);
  CHECK(w2.closure(ElemSet::of({0})) == ElemSet::of({0, 1}));
}

TEST_CASE("subset tables agree with the kernel rank oracle") {
  for (const char* name : {"mw2", "s1", "f7", "u01+u12+u11"}) {
    BasisMatroid m = named(name);
    SubsetTables t = subset_tables(m);
    for (std::uint32_t mask = 0; mask < (1u << m.n); ++mask) {
      ElemSet x(static_cast<std::uint16_t>(mask));
      CHECK(t.rank[mask] == m.rank(x));
      CHECK(t.independent[mask] == (m.rank(x) == x.size()));
    }
  }
}

TEST_CASE("structure of the single forbidden minor") {
  BasisMatroid m = named("u01+u12+u11");  // 0 loop, {1,2} parallel, 3 coloop
  StructureReport st = structure(m);
  CHECK(st.loops == ElemSet::of({0}));
  CHECK(st.coloops == ElemSet::of({3}));
  REQUIRE(st.components.size() == 3);
  CHECK(st.components[0] == ElemSet::of({0}));
  CHECK(st.components[1] == ElemSet::of({1, 2}));
  CHECK(st.components[2] == ElemSet::of({3}));
  bool has_pair_class = false;
  for (ElemSet c : st.parallel_classes) has_pair_class |= (c == ElemSet::of({1, 2}));
  CHECK(has_pair_class);

  // Rank additivity over components.
  int sum = 0;
  for (ElemSet c : st.components) sum += m.rank(c);
  CHECK(sum == m.r);
}

TEST_CASE("uniform matroids have one component and no loops") {
  StructureReport st = structure(uniform(2, 5));
  CHECK(st.loops.empty());
  CHECK(st.coloops.empty());
  CHECK(st.components.size() == 1);
}

TEST_CASE("circuits of the rank-2 wheel, against the naive oracle") {
  BasisMatroid w2 = named("mw2");
  StructureReport st = structure(w2);
  // Computed by minimal-dependent enumeration: the parallel pair and the two
  // triangles through one element of it.
  std::vector<ElemSet> expected = {ElemSet::of({0, 1}), ElemSet::of({0, 2, 3}),
                                   ElemSet::of({1, 2, 3})};
  CHECK(st.circuits == expected);
  CHECK(st.circuits == circuits_naive(w2));
  CHECK(st.components.size() == 1);
}

TEST_CASE("table circuits match naive circuits on every matroid up to n=5") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : enumerate_all(n)) {
      CHECK(structure(m).circuits == circuits_naive(m));
    }
  }
}

TEST_CASE("cyclic flats of small matroids") {
  RankedFamily u24 = cyclic_flats(uniform(2, 4));
  REQUIRE(u24.entries.size() == 2);
  CHECK(u24.entries[0].set == ElemSet{});
  CHECK(u24.entries[0].rank == 0);
  CHECK(u24.entries[1].set == ElemSet::full(4));
  CHECK(u24.entries[1].rank == 2);

  RankedFamily w2 = cyclic_flats(named("mw2"));
  bool has_pair = false;
  for (const auto& e : w2.entries) has_pair |= (e.set == ElemSet::of({0, 1}) && e.rank == 1);
  CHECK(has_pair);

  BasisMatroid twopairs = direct_sum(uniform(1, 2), uniform(1, 2));
  RankedFamily cf = cyclic_flats(twopairs);
  REQUIRE(cf.entries.size() == 4);  // {}, two pairs, ground
  CHECK(cf.entries[1].set == ElemSet::of({0, 1}));
  CHECK(cf.entries[1].rank == 1);
  CHECK(cf.entries[2].set == ElemSet::of({2, 3}));
  CHECK(cf.entries[2].rank == 1);
}

TEST_CASE("cyclic-flat axioms: direct checks") {
  // {(0,0),(S,r)} induces the uniform matroid.
  RankedFamily fam{{{ElemSet{}, 0}, {ElemSet::full(5), 2}}};
  CyclicAxiomsResult res = verify_cyclic_axioms(fam, 5);
  REQUIRE(res.ok);
  CHECK(*res.induced == uniform(2, 5));

  // Nested pair with zero rank step violates (Z2).
  RankedFamily bad{{{ElemSet{}, 0},
                    {ElemSet::of({0, 1}), 1},
                    {ElemSet::of({0, 1, 2}), 1},
                    {ElemSet::full(4), 2}}};
  CyclicAxiomsResult r2 = verify_cyclic_axioms(bad, 4);
  CHECK(!r2.ok);
  CHECK(r2.failed_axiom == 2);

  // Two incomparable sets with no upper bound violate (Z0).
  RankedFamily nolattice{{{ElemSet{}, 0},
                          {ElemSet::of({0, 1}), 1},
                          {ElemSet::of({2, 3}), 1}}};
  CyclicAxiomsResult r0 = verify_cyclic_axioms(nolattice, 4);
  CHECK(!r0.ok);
  CHECK(r0.failed_axiom == 0);
}

TEST_CASE("cyclic-flat round trip reproduces every matroid up to n=4") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_all(n)) {
      CyclicAxiomsResult res = verify_cyclic_axioms(cyclic_flats(m), n);
      REQUIRE(res.ok);
      CHECK(*res.induced == m);
    }
  }
}

TEST_CASE("duals, minors, truncation, direct sums") {
  CHECK(dual(uniform(2, 5)) == uniform(3, 5));

  for (const auto& m : enumerate_all(4)) {
    CHECK(dual(dual(m)) == m);
  }

  // M/Z = (M* \ Z)*, and contraction matches its independent-set definition.
  BasisMatroid w2 = named("mw2");
  BasisMatroid c = contraction(w2, ElemSet::of({3}));
  CHECK(c.n == 3);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    ElemSet x(static_cast<std::uint16_t>(mask));
    ElemSet orig;  // map {0,1,2} back onto {0,1,2} (element 3 removed)
    for (int e : x) orig = orig.with(e);
    bool indep_def = w2.rank(orig | ElemSet::of({3})) - w2.rank(ElemSet::of({3})) ==
                     x.size();
    CHECK(c.is_independent(x) == indep_def);
  }

  // The 3-truncation of four parallel pairs: connected, rank 3 on 8 elements.
  BasisMatroid pairs4 = direct_sum(direct_sum(uniform(1, 2), uniform(1, 2)),
                                   direct_sum(uniform(1, 2), uniform(1, 2)));
  BasisMatroid t = truncation(pairs4, 3);
  CHECK(t.n == 8);
  CHECK(t.r == 3);
  CHECK(is_connected(t));

  CHECK(throws_code(errc::out_of_range, [&] { truncation(t, 7); }));
  CHECK(truncation(t, t.r) == t);

  // Deletion relabels order-preservingly.
  BasisMatroid d = deletion(uniform(2, 5), ElemSet::of({1, 3}));
  CHECK(d == uniform(2, 3));
}

TEST_CASE("connectivity routes agree up to n=5") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : enumerate_all(n)) {
      SubsetTables t = subset_tables(m);
      CHECK(is_connected(m, t) == is_connected_by_rank(m, t));
    }
  }
}

TEST_CASE("rank is monotone and submodular on samples") {
  for (const char* name : {"mw2", "s2", "f7"}) {
    BasisMatroid m = named(name);
    SubsetTables t = subset_tables(m);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      ElemSet x(static_cast<std::uint16_t>(rng() & m.ground().bits));
      ElemSet y(static_cast<std::uint16_t>(rng() & m.ground().bits));
      CHECK(t.rank[x.bits] <= x.size());
      if (x.subset_of(y)) CHECK(t.rank[x.bits] <= t.rank[y.bits]);
      CHECK(t.rank[(x | y).bits] + t.rank[(x & y).bits] <=
            t.rank[x.bits] + t.rank[y.bits]);
    }
  }
}

TEST_CASE("isomorphism") {
  BasisMatroid w2 = named("mw2");
  auto id = is_isomorphic(w2, w2);
  REQUIRE(id.has_value());
  CHECK(relabel_bases(w2.bases, *id) == w2.bases);

  CHECK(is_isomorphic(uniform(2, 4), dual(uniform(2, 4))).has_value());

  BasisMatroid f7 = named("f7");
  BasisMatroid f7s = named("f7star");
  CHECK(!is_isomorphic(f7, f7s).has_value());
  CHECK(f7s == dual(f7));

  // A relabeling is recognized, and the witness maps bases onto bases.
  std::vector<int> perm = {2, 0, 3, 1};
  BasisMatroid shuffled{4, 2, relabel_bases(w2.bases, perm)};
  auto found = is_isomorphic(w2, shuffled);
  REQUIRE(found.has_value());
  CHECK(relabel_bases(w2.bases, *found) == shuffled.bases);
}

TEST_CASE("canonical form is a class invariant") {
  std::mt19937 rng(7);
  for (const auto& m : enumerate_all(4)) {
    std::vector<int> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    BasisMatroid shuffled{m.n, m.r, relabel_bases(m.bases, perm)};
    CHECK(canonical_form(m).bases == canonical_form(shuffled).bases);
  }
}

TEST_CASE("witness relabeling helpers") {
  Relabeling rel = compress_map(6, ElemSet::of({1, 3, 4}));
  CHECK(rel.new_n == 3);
  CHECK(rel.apply(ElemSet::of({1, 4})) == ElemSet::of({0, 2}));
  CHECK(rel.preimage(ElemSet::of({0, 2})) == ElemSet::of({1, 4}));
}
