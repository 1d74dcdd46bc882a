#include <doctest.h>

#include <vector>

#include "splitkit/elemset.hpp"

using namespace splitkit;

TEST_CASE("set operations are exact") {
  ElemSet a = ElemSet::of({0, 2, 5});
  ElemSet b = ElemSet::of({2, 3});
  CHECK(a.size() == 3);
  CHECK((a & b) == ElemSet::of({2}));
  CHECK((a | b) == ElemSet::of({0, 2, 3, 5}));
  CHECK((a - b) == ElemSet::of({0, 5}));
  CHECK(a.complement_in(6) == ElemSet::of({1, 3, 4}));
  CHECK(a.contains(5));
  CHECK(!a.contains(1));
  CHECK(ElemSet::of({2}).subset_of(a));
  CHECK(!a.subset_of(b));
  CHECK(a.to_string() == "{0,2,5}");
  CHECK(ElemSet{}.to_string() == "{}");
}

TEST_CASE("element iteration is ascending") {
  std::vector<int> got;
  for (int e : ElemSet::of({1, 4, 6})) got.push_back(e);
  CHECK(got == std::vector<int>{1, 4, 6});
}

TEST_CASE("k-subset enumeration is ascending and complete") {
  int count = 0;
  std::uint32_t last = 0;
  for_each_subset_of_size(ElemSet::full(6), 3, [&](ElemSet x) {
    CHECK(x.size() == 3);
    if (count > 0) CHECK(x.bits > last);
    last = x.bits;
    ++count;
  });
  CHECK(count == 20);
}

TEST_CASE("subset enumeration over a sparse universe") {
  ElemSet universe = ElemSet::of({1, 3, 6});
  std::vector<ElemSet> got;
  for_each_subset(universe, [&](ElemSet x) { got.push_back(x); });
  CHECK(got.size() == 8);
  for (ElemSet x : got) CHECK(x.subset_of(universe));
  int pairs = 0;
  for_each_subset_of_size(universe, 2, [&](ElemSet x) {
    CHECK(x.subset_of(universe));
    ++pairs;
  });
  CHECK(pairs == 3);
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(16, 8) == 12870);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}
