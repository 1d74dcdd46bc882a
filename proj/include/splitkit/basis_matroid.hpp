#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "splitkit/elemset.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

/// Explicit matroid given by its full basis family. This is the ground-truth
/// oracle representation: every derived notion (rank, closure, circuits,
/// minors, ...) is computed from the basis list.
///
/// Invariants: bases is nonempty, strictly ascending by mask, every basis has
/// exactly r elements within {0,...,n-1}, and the family satisfies basis
/// exchange. `from_bases` checks all of this; internal constructions preserve
/// it.
struct BasisMatroid {
  int n = 0;
  int r = 0;
  std::vector<ElemSet> bases;

  /// max |B & X| over all bases B (the greedy rank oracle).
  [[nodiscard]] int rank(ElemSet x) const;
  [[nodiscard]] bool is_independent(ElemSet x) const { return rank(x) == x.size(); }
  /// {e : rank(X + e) = rank(X)}; a flat containing X.
  [[nodiscard]] ElemSet closure(ElemSet x) const;
  [[nodiscard]] bool has_basis(ElemSet b) const;
  [[nodiscard]] ElemSet ground() const { return ElemSet::full(n); }

  friend bool operator==(const BasisMatroid&, const BasisMatroid&) = default;
};

/// Validates and builds a matroid from an explicit basis list.
/// Throws UNEQUAL_CARDINALITY or EXCHANGE_VIOLATION (with a witnessing pair
/// in the message), and OUT_OF_RANGE for bad n or out-of-ground sets.
BasisMatroid from_bases(int n, std::vector<ElemSet> bases);

/// Re-runs the from_bases validation on an existing matroid.
void validate(const BasisMatroid& m);

/// Per-subset rank and independence of the whole power set, filled by one
/// O(2^n * n) downward/upward sweep from the basis family. Used by the
/// structure algorithms; agrees with BasisMatroid::rank pointwise.
struct SubsetTables {
  int n = 0;
  std::vector<std::uint8_t> rank;    // size 1 << n
  std::vector<bool> independent;     // size 1 << n

  [[nodiscard]] int rank_of(ElemSet x) const { return rank[x.bits]; }
  [[nodiscard]] bool is_independent(ElemSet x) const { return independent[x.bits]; }
  [[nodiscard]] ElemSet closure(ElemSet x) const;
  [[nodiscard]] bool is_flat(ElemSet x) const;
};

SubsetTables subset_tables(const BasisMatroid& m);

// ---------------------------------------------------------------------------
// Constructions. Minors relabel the surviving elements order-preservingly to
// {0,...,n'-1}; `compress_map` exposes the map so certificates can compose.
// ---------------------------------------------------------------------------

struct Relabeling {
  int old_n = 0;
  int new_n = 0;
  ElemSet kept;
  std::array<std::int8_t, kMaxGround> old_to_new{};  // -1 for removed elements

  [[nodiscard]] ElemSet apply(ElemSet x) const;
  [[nodiscard]] ElemSet preimage(ElemSet y) const;
};

Relabeling compress_map(int n, ElemSet kept);

/// Bases of the dual are the complements of the bases.
BasisMatroid dual(const BasisMatroid& m);
/// M \ z, relabeled onto {0,...,n-|z|-1}.
BasisMatroid deletion(const BasisMatroid& m, ElemSet z);
/// M / z = (M* \ z)*, relabeled.
BasisMatroid contraction(const BasisMatroid& m, ElemSet z);
/// Independent sets of size <= k; requires 0 <= k <= r.
BasisMatroid truncation(const BasisMatroid& m, int k);
/// Ground sets concatenated: elements of b are shifted up by a.n.
BasisMatroid direct_sum(const BasisMatroid& a, const BasisMatroid& b);
/// M restricted to `keep` = deletion of the complement.
BasisMatroid restriction(const BasisMatroid& m, ElemSet keep);
/// Contract `con`, then delete `del` (disjoint), relabeled onto the kept set.
BasisMatroid minor(const BasisMatroid& m, ElemSet con, ElemSet del);

/// The uniform matroid U_{r,n}.
BasisMatroid uniform(int r, int n);

/// Reinterprets a basis vector as the raw mask array the kernels consume.
std::span<const std::uint16_t> as_masks(std::span<const ElemSet> sets);

}  // namespace splitkit
