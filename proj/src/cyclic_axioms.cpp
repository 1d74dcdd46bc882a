#include "splitkit/cyclic_axioms.hpp"

#include <algorithm>

namespace splitkit {

namespace {

CyclicAxiomsResult fail(int axiom, std::string detail) {
  CyclicAxiomsResult res;
  res.ok = false;
  res.failed_axiom = axiom;
  res.violation = "(Z" + std::to_string(axiom) + ") " + std::move(detail);
  return res;
}

}  // namespace

CyclicAxiomsResult verify_cyclic_axioms(const RankedFamily& fam, int n) {
  if (n < 0 || n > kMaxGround) throw error(errc::out_of_range, "ground-set size");
  const auto& zs = fam.entries;
  ElemSet ground = ElemSet::full(n);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!zs[i].set.subset_of(ground))
      throw error(errc::out_of_range, "set " + zs[i].set.to_string() + " not within ground set");
    if (zs[i].rank < 0) throw error(errc::out_of_range, "negative rank");
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (zs[i].set == zs[j].set)
        throw error(errc::semantic, "duplicate set " + zs[i].set.to_string());
    }
  }

  std::size_t q = zs.size();
  if (q == 0) return fail(0, "empty family is not a lattice");

  // (Z0): every pair has a least upper bound and a greatest lower bound
  // inside the family.
  std::vector<std::size_t> join(q * q), meet(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      ElemSet uni = zs[i].set | zs[j].set;
      ElemSet inter = zs[i].set & zs[j].set;
      std::size_t best_up = q, best_down = q;
      for (std::size_t k = 0; k < q; ++k) {
        if (uni.subset_of(zs[k].set) &&
            (best_up == q || zs[k].set.size() < zs[best_up].set.size()))
          best_up = k;
        if (zs[k].set.subset_of(inter) &&
            (best_down == q || zs[k].set.size() > zs[best_down].set.size()))
          best_down = k;
      }
      auto pair_str = [&] { return zs[i].set.to_string() + ", " + zs[j].set.to_string(); };
      if (best_up == q) return fail(0, "no upper bound for " + pair_str());
      if (best_down == q) return fail(0, "no lower bound for " + pair_str());
      // Least/greatest must compare against every other bound.
      for (std::size_t k = 0; k < q; ++k) {
        if (uni.subset_of(zs[k].set) && !zs[best_up].set.subset_of(zs[k].set))
          return fail(0, "no least upper bound for " + pair_str());
        if (zs[k].set.subset_of(inter) && !zs[k].set.subset_of(zs[best_down].set))
          return fail(0, "no greatest lower bound for " + pair_str());
      }
      join[i * q + j] = best_up;
      meet[i * q + j] = best_down;
    }
  }

  // (Z1): the lattice zero has rank 0.
  std::size_t bottom = 0;
  for (std::size_t k = 1; k < q; ++k) bottom = meet[bottom * q + k];
  if (zs[bottom].rank != 0)
    return fail(1, "zero element " + zs[bottom].set.to_string() + " has rank " +
                       std::to_string(zs[bottom].rank));

  // (Z2): 0 < r(Y) - r(X) < |Y - X| for nested pairs.
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i == j || !zs[i].set.subset_of(zs[j].set)) continue;
      int dr = zs[j].rank - zs[i].rank;
      int de = (zs[j].set - zs[i].set).size();
      if (dr <= 0 || dr >= de)
        return fail(2, zs[i].set.to_string() + " within " + zs[j].set.to_string() +
                           " has rank step " + std::to_string(dr) + " vs " +
                           std::to_string(de) + " new elements");
    }
  }

  // (Z3): r(X) + r(Y) >= r(X v Y) + r(X ^ Y) + |(X & Y) - (X ^ Y)|.
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      int lhs = zs[i].rank + zs[j].rank;
      int rhs = zs[join[i * q + j]].rank + zs[meet[i * q + j]].rank +
                ((zs[i].set & zs[j].set) - zs[meet[i * q + j]].set).size();
      if (lhs < rhs)
        return fail(3, zs[i].set.to_string() + " and " + zs[j].set.to_string() +
                           ": " + std::to_string(lhs) + " < " + std::to_string(rhs));
    }
  }

  // Induced matroid: I = {X : |X & Z| <= r(Z) for all Z}.
  std::vector<ElemSet> best;
  int best_size = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElemSet x(static_cast<std::uint16_t>(mask));
    bool ok = true;
    for (const auto& z : zs) {
      if ((x & z.set).size() > z.rank) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (x.size() > best_size) {
      best_size = x.size();
      best.clear();
    }
    if (x.size() == best_size) best.push_back(x);
  }

  CyclicAxiomsResult res;
  res.ok = true;
  res.induced = from_bases(n, std::move(best));
  return res;
}

}  // namespace splitkit
