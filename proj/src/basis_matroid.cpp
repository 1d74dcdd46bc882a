#include "splitkit/basis_matroid.hpp"

#include <algorithm>
#include <array>

#include "splitkit/kernels.hpp"

namespace splitkit {

std::string ElemSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::span<const std::uint16_t> as_masks(std::span<const ElemSet> sets) {
  static_assert(sizeof(ElemSet) == sizeof(std::uint16_t));
  return {reinterpret_cast<const std::uint16_t*>(sets.data()), sets.size()};
}

int BasisMatroid::rank(ElemSet x) const {
  return kernels::max_intersection_size(as_masks(bases), x.bits);
}

ElemSet BasisMatroid::closure(ElemSet x) const {
  int rx = rank(x);
  ElemSet out = x;
  for (int e : x.complement_in(n)) {
    if (rank(x.with(e)) == rx) out = out.with(e);
  }
  return out;
}

bool BasisMatroid::has_basis(ElemSet b) const {
  return std::binary_search(bases.begin(), bases.end(), b);
}

BasisMatroid from_bases(int n, std::vector<ElemSet> bases) {
  if (n < 0 || n > kMaxGround)
    throw error(errc::out_of_range, "ground-set size " + std::to_string(n));
  if (bases.empty()) throw error(errc::out_of_range, "empty basis family");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  ElemSet ground = ElemSet::full(n);
  int r = bases.front().size();
  for (ElemSet b : bases) {
    if (!b.subset_of(ground))
      throw error(errc::out_of_range, "basis " + b.to_string() + " not within ground set");
    if (b.size() != r)
      throw error(errc::unequal_cardinality, bases.front().to_string() + " vs " + b.to_string());
  }

  std::vector<bool> present(std::size_t{1} << n, false);
  for (ElemSet b : bases) present[b.bits] = true;

  // Basis exchange over all ordered pairs.
  for (ElemSet b1 : bases) {
    for (ElemSet b2 : bases) {
      if (b1 == b2) continue;
      for (int x : b1 - b2) {
        bool ok = false;
        for (int y : b2 - b1) {
          if (present[b1.without(x).with(y).bits]) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          throw error(errc::exchange_violation,
                      "no exchange for x=" + std::to_string(x) + " in " + b1.to_string() +
                          " against " + b2.to_string());
        }
      }
    }
  }

  return BasisMatroid{n, r, std::move(bases)};
}

void validate(const BasisMatroid& m) {
  BasisMatroid check = from_bases(m.n, m.bases);
  if (check.bases != m.bases || check.r != m.r)
    throw error(errc::semantic, "basis list not in canonical order");
}

SubsetTables subset_tables(const BasisMatroid& m) {
  std::size_t size = std::size_t{1} << m.n;
  SubsetTables t;
  t.n = m.n;
  t.rank.assign(size, 0);
  t.independent.assign(size, false);
  for (ElemSet b : m.bases) t.independent[b.bits] = true;
  // Downward closure: subsets of an independent set are independent.
  for (std::size_t mask = size; mask-- > 0;) {
    if (!t.independent[mask]) continue;
    std::uint16_t rest = static_cast<std::uint16_t>(mask);
    while (rest != 0) {
      std::uint16_t low = static_cast<std::uint16_t>(rest & (0u - rest));
      t.independent[mask ^ low] = true;
      rest = static_cast<std::uint16_t>(rest & (rest - 1));
    }
  }
  // rank(X) = |X| if independent, else max over e of rank(X - e).
  for (std::size_t mask = 1; mask < size; ++mask) {
    if (t.independent[mask]) {
      t.rank[mask] = static_cast<std::uint8_t>(std::popcount(mask));
      continue;
    }
    std::uint8_t best = 0;
    std::uint16_t rest = static_cast<std::uint16_t>(mask);
    while (rest != 0) {
      std::uint16_t low = static_cast<std::uint16_t>(rest & (0u - rest));
      best = std::max(best, t.rank[mask ^ low]);
      rest = static_cast<std::uint16_t>(rest & (rest - 1));
    }
    t.rank[mask] = best;
  }
  return t;
}

ElemSet SubsetTables::closure(ElemSet x) const {
  ElemSet out = x;
  std::uint8_t rx = rank[x.bits];
  for (int e : x.complement_in(n)) {
    if (rank[x.with(e).bits] == rx) out = out.with(e);
  }
  return out;
}

bool SubsetTables::is_flat(ElemSet x) const {
  std::uint8_t rx = rank[x.bits];
  for (int e : x.complement_in(n)) {
    if (rank[x.with(e).bits] == rx) return false;
  }
  return true;
}

Relabeling compress_map(int n, ElemSet kept) {
  Relabeling rel;
  rel.old_n = n;
  rel.new_n = kept.size();
  rel.kept = kept;
  rel.old_to_new.fill(-1);
  int next = 0;
  for (int e : kept) rel.old_to_new[e] = static_cast<std::int8_t>(next++);
  return rel;
}

ElemSet Relabeling::apply(ElemSet x) const {
  ElemSet out;
  for (int e : x & kept) out = out.with(old_to_new[e]);
  return out;
}

ElemSet Relabeling::preimage(ElemSet y) const {
  ElemSet out;
  for (int e : kept) {
    if (y.contains(old_to_new[e])) out = out.with(e);
  }
  return out;
}

BasisMatroid dual(const BasisMatroid& m) {
  std::vector<ElemSet> co(m.bases.size());
  for (std::size_t i = 0; i < m.bases.size(); ++i) {
    // Complementation reverses mask order.
    co[m.bases.size() - 1 - i] = m.bases[i].complement_in(m.n);
  }
  return BasisMatroid{m.n, m.n - m.r, std::move(co)};
}

BasisMatroid deletion(const BasisMatroid& m, ElemSet z) {
  if (!z.subset_of(m.ground()))
    throw error(errc::out_of_range, "delete set " + z.to_string());
  ElemSet kept = m.ground() - z;
  Relabeling rel = compress_map(m.n, kept);
  int rr = m.rank(kept);
  std::vector<ElemSet> bases;
  for_each_subset_of_size(kept, rr, [&](ElemSet x) {
    if (m.rank(x) == rr) bases.push_back(rel.apply(x));
  });
  return BasisMatroid{rel.new_n, rr, std::move(bases)};
}

BasisMatroid contraction(const BasisMatroid& m, ElemSet z) {
  if (!z.subset_of(m.ground()))
    throw error(errc::out_of_range, "contract set " + z.to_string());
  return dual(deletion(dual(m), z));
}

BasisMatroid truncation(const BasisMatroid& m, int k) {
  if (k < 0 || k > m.r) throw error(errc::out_of_range, "truncation rank " + std::to_string(k));
  std::vector<ElemSet> bases;
  for_each_subset_of_size(m.ground(), k, [&](ElemSet x) {
    if (m.rank(x) == k) bases.push_back(x);
  });
  return BasisMatroid{m.n, k, std::move(bases)};
}

BasisMatroid direct_sum(const BasisMatroid& a, const BasisMatroid& b) {
  if (a.n + b.n > kMaxGround)
    throw error(errc::too_large, "direct sum on " + std::to_string(a.n + b.n) + " elements");
  std::vector<ElemSet> bases;
  bases.reserve(a.bases.size() * b.bases.size());
  for (ElemSet bb : b.bases) {
    ElemSet shifted(static_cast<std::uint16_t>(bb.bits << a.n));
    for (ElemSet ba : a.bases) bases.push_back(ba | shifted);
  }
  std::sort(bases.begin(), bases.end());
  return BasisMatroid{a.n + b.n, a.r + b.r, std::move(bases)};
}

BasisMatroid restriction(const BasisMatroid& m, ElemSet keep) {
  return deletion(m, m.ground() - keep);
}

BasisMatroid minor(const BasisMatroid& m, ElemSet con, ElemSet del) {
  if (!(con & del).empty())
    throw error(errc::out_of_range, "contract and delete sets overlap");
  BasisMatroid contracted = contraction(m, con);
  Relabeling rel = compress_map(m.n, m.ground() - con);
  return deletion(contracted, rel.apply(del));
}

BasisMatroid uniform(int r, int n) {
  if (n < 0 || n > kMaxGround || r < 0 || r > n)
    throw error(errc::out_of_range, "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")");
  std::vector<ElemSet> bases;
  bases.reserve(binomial(n, r));
  for_each_subset_of_size(ElemSet::full(n), r, [&](ElemSet x) { bases.push_back(x); });
  return BasisMatroid{n, r, std::move(bases)};
}

}  // namespace splitkit
