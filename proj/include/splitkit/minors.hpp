#pragma once

#include <optional>
#include <vector>

#include "splitkit/basis_matroid.hpp"

namespace splitkit {

/// Certificate of a minor containment: contracting `contract` and deleting
/// `remove` from the host (both in the host's labels), then applying `iso`
/// to the order-compressed survivors, yields exactly the target's bases.
struct MinorWitness {
  ElemSet contract;
  ElemSet remove;
  std::vector<int> iso;
};

/// Replays a witness through the core constructions.
bool replay_witness(const BasisMatroid& m, const BasisMatroid& target,
                    const MinorWitness& w);

/// Searches for target as a minor of m. Normal form: contract sets are
/// independent with |contract| = r(m) - r(target), delete sets are
/// coindependent; candidates are checked by explicit construction plus
/// isomorphism. The lexicographically first witness (by contract mask, then
/// delete mask) is returned.
std::optional<MinorWitness> has_minor(const BasisMatroid& m, const BasisMatroid& target);

/// U_{k,l} containment. When m itself is uniform the arithmetic criterion
/// (k' <= k and l - l' >= k - k') decides and must agree with the search.
std::optional<MinorWitness> has_uniform_minor(const BasisMatroid& m, int k, int l);

/// Tutte: binary iff no U_{2,4} minor; the witness certifies non-binarity.
struct BinaryCheck {
  bool binary = false;
  std::optional<MinorWitness> u24_witness;
};

BinaryCheck is_binary(const BasisMatroid& m);

/// Exhaustive search over ALL disjoint (contract, delete) pairs, without the
/// normal-form restriction. Test oracle for has_minor; n(m) <= 7.
bool has_minor_naive(const BasisMatroid& m, const BasisMatroid& target);

}  // namespace splitkit
