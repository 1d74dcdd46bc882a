#pragma once

#include <vector>

#include "splitkit/basis_matroid.hpp"

namespace splitkit {

/// Ranked set family; houses cyclic-flat systems. Sets are pairwise distinct,
/// kept sorted by (size, mask).
struct RankedFamily {
  struct Entry {
    ElemSet set;
    int rank = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  friend bool operator==(const RankedFamily&, const RankedFamily&) = default;
};

struct StructureReport {
  ElemSet loops;
  ElemSet coloops;
  std::vector<ElemSet> parallel_classes;  // non-loop elements grouped by rank-1 closure
  std::vector<ElemSet> circuits;          // minimal dependent sets, sorted by (size, mask)
  std::vector<ElemSet> components;        // sorted by lowest element; loops and coloops are singletons
};

StructureReport structure(const BasisMatroid& m);
StructureReport structure(const BasisMatroid& m, const SubsetTables& t);

/// All closed sets, ascending by mask.
std::vector<ElemSet> flats(const BasisMatroid& m);
std::vector<ElemSet> flats(const BasisMatroid& m, const SubsetTables& t);

/// Flats whose restriction has no coloop, with their ranks. The empty set is
/// included exactly when the matroid is loopless; the minimal cyclic flat is
/// always the set of loops.
RankedFamily cyclic_flats(const BasisMatroid& m);
RankedFamily cyclic_flats(const BasisMatroid& m, const SubsetTables& t);

/// Connectivity via circuit components. Matroids on at most one element are
/// connected.
bool is_connected(const BasisMatroid& m);
bool is_connected(const BasisMatroid& m, const SubsetTables& t);

/// Independent route: rank(X) + rank(S-X) > rank(S) for every proper
/// nonempty X. Must agree with is_connected everywhere.
bool is_connected_by_rank(const BasisMatroid& m);
bool is_connected_by_rank(const BasisMatroid& m, const SubsetTables& t);

/// Naive circuit enumeration straight from the kernel rank oracle, without
/// the subset tables. Cross-check oracle for structure().circuits.
std::vector<ElemSet> circuits_naive(const BasisMatroid& m);

}  // namespace splitkit
