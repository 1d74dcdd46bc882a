#pragma once

#include <optional>
#include <vector>

#include "splitkit/basis_matroid.hpp"

namespace splitkit {

/// Ground-set bijection a -> b mapping bases of A onto bases of B, if one
/// exists. Backtracking over permutations, pruned by per-element invariants
/// (basis degree, circuit-size profile) and pairwise-rank consistency.
std::optional<std::vector<int>> is_isomorphic(const BasisMatroid& a, const BasisMatroid& b);

/// Relabels every basis through perm (perm[old] = new) and re-sorts.
std::vector<ElemSet> relabel_bases(std::span<const ElemSet> bases,
                                   std::span<const int> perm);

/// Lexicographically minimal sorted basis list over all relabelings; doubles
/// as the isomorphism-class key for deduplication. Exhaustive over n!
/// permutations, so restricted to n <= 8.
BasisMatroid canonical_form(const BasisMatroid& m);

}  // namespace splitkit
