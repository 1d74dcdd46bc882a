#include <doctest.h>

#include "oracles.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/classify.hpp"
#include "splitkit/isomorphism.hpp"
#include "splitkit/structure.hpp"

using namespace splitkit;

TEST_CASE("the rank-2 wheel") {
  BasisMatroid w2 = named("mw2");
  CHECK(w2.n == 4);
  CHECK(w2.r == 2);
  CHECK(w2.bases.size() == 5);
  CHECK(!w2.has_basis(ElemSet::of({0, 1})));
  validate(w2);
}

TEST_CASE("Fano and its dual") {
  BasisMatroid f7 = named("f7");
  CHECK(f7.n == 7);
  CHECK(f7.r == 3);
  CHECK(f7.bases.size() == 28);
  CHECK(named("f7star") == dual(f7));
  validate(f7);

  // Independent count of the 28 bases: triples of nonzero GF(2)^3 vectors
  // with a ^ b != c, checked without the library's elimination.
  int count = 0;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      for (int c = b + 1; c <= 7; ++c) {
        if (testing::gf2_triple_independent(static_cast<std::uint16_t>(a),
                                            static_cast<std::uint16_t>(b),
                                            static_cast<std::uint16_t>(c)))
          ++count;
      }
    }
  }
  CHECK(count == 28);
}

TEST_CASE("graphic constructions") {
  BasisMatroid k4 = named("mk4");
  CHECK(k4.n == 6);
  CHECK(k4.r == 3);
  CHECK(k4.bases.size() == 16);  // Cayley: 4^2 spanning trees
  validate(k4);

  CHECK(from_graph(3, {{0, 1}, {1, 2}, {0, 2}}) == uniform(2, 3));
  // A self-loop is a matroid loop.
  BasisMatroid with_loop = from_graph(2, {{0, 1}, {0, 0}});
  CHECK(structure(with_loop).loops == ElemSet::of({1}));
}

TEST_CASE("gf2 constructions") {
  CHECK(from_gf2({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == uniform(3, 3));
  BasisMatroid ag = named("ag32");
  CHECK(ag.n == 8);
  CHECK(ag.r == 4);
  validate(ag);
}

TEST_CASE("every catalog matroid validates") {
  for (const std::string& name : catalog_names()) {
    BasisMatroid m = named(name);
    validate(m);
  }
  CHECK(named("U(2,4)") == uniform(2, 4));
  try {
    named("nosuch");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_name);
  }
}

TEST_CASE("excluded minors have the defining minor-minimality property") {
  for (const char* name : {"s1", "s2", "s3", "s4", "mw2+mw2"}) {
    BasisMatroid m = named(name);
    CHECK(!is_split(m));
    for (int e = 0; e < m.n; ++e) {
      CHECK(is_split(deletion(m, ElemSet::single(e))));
      CHECK(is_split(contraction(m, ElemSet::single(e))));
    }
  }
  for (const char* name : {"s1", "s2", "s3", "s4"}) {
    CHECK(is_connected(named(name)));
  }
  CHECK(!is_connected(named("mw2+mw2")));
}

TEST_CASE("the four S-matroids are pairwise non-isomorphic") {
  const char* names[] = {"s1", "s2", "s3", "s4"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(!is_isomorphic(named(names[i]), named(names[j])).has_value());
    }
  }
}

TEST_CASE("Acketa's binary paving matroids") {
  for (const char* name : {"mk4e", "mk4", "mk23", "f7", "f7star", "ag32"}) {
    ClassificationReport rep = classify(named(name));
    CHECK(rep.binary);
    CHECK(rep.paving);
  }
}
