#pragma once

#include <string>
#include <vector>

#include "splitkit/basis_matroid.hpp"
#include "splitkit/structure.hpp"

namespace splitkit {

/// Hypergraph representation of an elementary split matroid: independent sets
/// are the X with |X| <= r and |X & H_i| <= r_i for every hyperedge. (H1) is
/// essential and enforced at construction; (H2)-(H4) are advisory and a
/// representation is non-redundant exactly when all four hold.
struct SplitRep {
  struct Hyperedge {
    ElemSet set;
    int rank = 0;
    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
  };

  int n = 0;
  int r = 0;
  std::vector<Hyperedge> edges;

  [[nodiscard]] int q() const { return static_cast<int>(edges.size()); }
  [[nodiscard]] ElemSet ground() const { return ElemSet::full(n); }

  friend bool operator==(const SplitRep&, const SplitRep&) = default;
};

inline constexpr int kMaxHyperedges = 64;

/// Exact evaluation of the four condition families, with first-violation
/// witnesses in `detail`.
struct RepFlags {
  bool h1 = true, h2 = true, h3 = true, h4 = true;
  std::string detail;

  [[nodiscard]] bool non_redundant() const { return h1 && h2 && h3 && h4; }
};

RepFlags validate(const SplitRep& rep);

/// Validating factory. Throws H1_VIOLATION when some pair has
/// |H_i & H_j| > r_i + r_j - r, and OUT_OF_RANGE on malformed fields.
SplitRep make_rep(int n, int r, std::vector<SplitRep::Hyperedge> edges);

/// Closed-form rank: min{ r, |Z|, min_i(|Z - H_i| + r_i) }. Requires (H1).
int rank_of(const SplitRep& rep, ElemSet z);

/// Explicit basis matroid of the representation; the bases are the
/// independent sets of maximal size rank_of(S).
BasisMatroid to_basis_matroid(const SplitRep& rep);

/// Restores (H2)-(H4) without changing the independence family: r is lowered
/// to min_i(|S - H_i| + r_i) when (H2) fails, and hyperedges whose constraint
/// is redundant under (H3) or (H4) are dropped.
SplitRep normalize(const SplitRep& rep);

/// Dual representation: H~_i = S - H_i, r~ = |S| - r, r~_i = |H~_i| - r + r_i.
/// Requires (H2) (normalize first); preserves non-redundancy.
SplitRep dualize(const SplitRep& rep);

/// Deletion keeps r and the edge ranks, intersecting hyperedges with the kept
/// set; relabels onto {0,...,n-|z|-1}.
SplitRep delete_from_rep(const SplitRep& rep, ElemSet z);

/// Contraction via dualize(delete(dualize(.))) with normalization in between.
SplitRep contract_in_rep(const SplitRep& rep, ElemSet z);

/// Contract `con`, then delete `del` (disjoint sets in the original labels).
SplitRep minor_of_rep(const SplitRep& rep, ElemSet del, ElemSet con);

/// Keeps the hyperedges, replaces r by k; requires 0 <= k < r.
SplitRep truncate_rep(const SplitRep& rep, int k);

/// Per-hyperedge check that M|H_i and M/H_i are uniform of the predicted
/// parameters. Requires a non-redundant representation; both flags must come
/// back true for every edge.
struct UniformPartCheck {
  int index = 0;
  bool restriction_ok = false;
  bool contraction_ok = false;
};

std::vector<UniformPartCheck> uniform_parts(const SplitRep& rep);

/// {(0,0), (H_i, r_i)..., (S, r)} — the cyclic flats of the represented
/// matroid when the representation is non-redundant, q >= 1, every r_i is
/// positive and (H2) is strict. Throws PRECONDITION otherwise.
RankedFamily cyclic_flats_of_rep(const SplitRep& rep);

}  // namespace splitkit
