#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "splitkit/enumerate.hpp"

using namespace splitkit;

TEST_CASE("labeled counts match the direct-enumeration oracle") {
  const std::uint64_t expected[] = {1, 2, 5, 16, 68, 406};
  for (int n = 0; n <= 5; ++n) {
    std::vector<BasisMatroid> all = enumerate_all(n);
    CHECK(all.size() == expected[n]);
    CHECK(testing::brute_count_matroids(n) == expected[n]);
  }
}

TEST_CASE("stream is duplicate-free and exchange-valid (sampled revalidation)") {
  std::set<std::pair<int, std::vector<ElemSet>>> seen;
  std::size_t idx = 0;
  enumerate_all(5, [&](const BasisMatroid& m) {
    CHECK(seen.insert({m.r, m.bases}).second);
    if (idx % 97 == 0) validate(m);  // random 1% revalidation
    ++idx;
  });
}

TEST_CASE("exhaustive guard") {
  try {
    enumerate_all(7);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("isomorphism-class counts") {
  CHECK(dedupe_iso(enumerate_all(1)).size() == 2);
  CHECK(dedupe_iso(enumerate_all(2)).size() == 4);
  CHECK(dedupe_iso(enumerate_all(4)).size() == 17);
}

TEST_CASE("random representations are deterministic in the seed") {
  SplitRepSample a = random_splitrep(6, 2, 2, 12345);
  SplitRepSample b = random_splitrep(6, 2, 2, 12345);
  CHECK(a.rep == b.rep);
  SplitRepSample c = random_splitrep(6, 2, 2, 54321);
  CHECK((a.rep == c.rep) == false);  // overwhelmingly likely distinct
  CHECK(validate(a.rep).h1);
}

TEST_CASE("sampler preconditions") {
  try {
    random_splitrep(11, 2, 2, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::out_of_range);
  }
  try {
    random_splitrep(8, 2, 9, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::out_of_range);
  }
  // q = 0 always succeeds and is uniform.
  SplitRepSample s = random_splitrep(5, 2, 0, 7);
  CHECK(to_basis_matroid(s.rep) == uniform(2, 5));
}

TEST_CASE("verify_theorems is clean at n=4 and guards n=7") {
  EnumerationReport report = verify_theorems(4);
  CHECK(report.total() == 1 + 2 + 5 + 16 + 68);
  CHECK(report.disagreements.empty());
  for (const auto& [name, count] : report.failures) CHECK(count == 0);
  CHECK(report.count_by_n_rank.at({4, 2}) == 36);

  try {
    verify_theorems(7);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
}
