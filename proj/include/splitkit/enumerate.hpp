#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "splitkit/basis_matroid.hpp"
#include "splitkit/splitrep.hpp"

namespace splitkit {

/// Streams every labeled matroid on {0,...,n-1} exactly once, grouped by
/// rank ascending, basis families in lexicographic order within a rank.
/// Candidate families are grown basis-by-basis with incremental exchange
/// bookkeeping, so branches that can never be completed die early.
/// Throws TOO_LARGE for n > 6.
void enumerate_all(int n, const std::function<void(const BasisMatroid&)>& sink);

/// Convenience collector.
std::vector<BasisMatroid> enumerate_all(int n);

/// One representative per isomorphism class: the canonical (lexicographically
/// minimal) labeling, deduplicated on the canonical basis list.
std::vector<BasisMatroid> dedupe_iso(const std::vector<BasisMatroid>& stream);

/// Deterministic sampler: rejection-samples hyperedge/rank pairs until (H1)
/// holds. The returned flags report (H2)-(H4), which are free to fail.
/// Throws GIVE_UP when the attempt budget runs out.
struct SplitRepSample {
  SplitRep rep;
  RepFlags flags;
};

SplitRepSample random_splitrep(int n, int r, int q, std::uint64_t seed);

/// Desk-scale cross-validation of every theorem over the exhaustive stream.
struct EnumerationReport {
  std::map<std::pair<int, int>, std::uint64_t> count_by_n_rank;
  std::map<int, std::uint64_t> count_by_n;
  std::map<std::string, std::uint64_t> class_counts;
  /// One entry per failed check: check name plus the offending basis list.
  std::vector<std::string> disagreements;
  /// Per-check failure tallies, zero on a healthy build.
  std::map<std::string, std::uint64_t> failures;

  [[nodiscard]] std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [n, c] : count_by_n) t += c;
    return t;
  }
};

/// Runs the full invariant suite (four-way equivalence, excluded minors,
/// binary catalog completeness, cyclic-flat round trips, connectivity
/// properties, duality involution) over all matroids with n <= n_max.
EnumerationReport verify_theorems(int n_max);

}  // namespace splitkit
