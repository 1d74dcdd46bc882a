#include "splitkit/minors.hpp"

#include <algorithm>

#include "splitkit/isomorphism.hpp"

namespace splitkit {

bool replay_witness(const BasisMatroid& m, const BasisMatroid& target,
                    const MinorWitness& w) {
  if (!(w.contract & w.remove).empty()) return false;
  BasisMatroid got = minor(m, w.contract, w.remove);
  if (got.n != target.n || static_cast<int>(w.iso.size()) != target.n) return false;
  return relabel_bases(got.bases, w.iso) == target.bases;
}

namespace {

// Bases of m/C restricted to kept, straight off the rank table. C independent,
// kept disjoint from C, target rank rt = |basis| in the minor.
std::vector<ElemSet> minor_bases(const SubsetTables& t, ElemSet con, ElemSet kept, int rt) {
  std::vector<ElemSet> out;
  int base = con.size();
  for_each_subset_of_size(kept, rt, [&](ElemSet x) {
    if (t.rank[(x | con).bits] == base + x.size()) out.push_back(x);
  });
  return out;
}

}  // namespace

std::optional<MinorWitness> has_minor(const BasisMatroid& m, const BasisMatroid& target) {
  int c = m.r - target.r;
  int d = (m.n - target.n) - c;
  if (c < 0 || d < 0) return std::nullopt;

  SubsetTables t = subset_tables(m);

  // D coindependent <=> rank(S - D) = r(M); independent of the contract set.
  std::vector<ElemSet> deletes;
  std::uint16_t full = m.ground().bits;
  for_each_subset_of_size(m.ground(), d, [&](ElemSet del) {
    if (t.rank[full ^ del.bits] == m.r) deletes.push_back(del);
  });

  std::size_t target_count = target.bases.size();
  std::optional<MinorWitness> found;
  for_each_subset_of_size(m.ground(), c, [&](ElemSet con) {
    if (found || !t.independent[con.bits]) return;
    for (ElemSet del : deletes) {
      if (!(del & con).empty()) continue;
      ElemSet kept = m.ground() - con - del;
      std::vector<ElemSet> bases = minor_bases(t, con, kept, target.r);
      if (bases.size() != target_count) continue;
      Relabeling rel = compress_map(m.n, kept);
      for (ElemSet& b : bases) b = rel.apply(b);
      std::sort(bases.begin(), bases.end());
      BasisMatroid candidate{target.n, target.r, std::move(bases)};
      if (auto perm = is_isomorphic(candidate, target)) {
        found = MinorWitness{con, del, std::move(*perm)};
        return;
      }
    }
  });
  return found;
}

std::optional<MinorWitness> has_uniform_minor(const BasisMatroid& m, int k, int l) {
  if (k < 0 || l < k) throw error(errc::out_of_range, "uniform parameters");
  if (l > m.n) return std::nullopt;
  bool m_uniform = m.bases.size() == binomial(m.n, m.r);
  if (m_uniform) {
    // U_{k',l'} is a minor of U_{k,l} iff k' <= k and l - l' >= k - k'.
    bool yes = k <= m.r && (m.n - l) >= (m.r - k);
    if (!yes) return std::nullopt;
    // Contract the first r-k elements, delete the next n-l-(r-k).
    MinorWitness w;
    int c = m.r - k;
    int d = m.n - l - c;
    for (int e = 0; e < c; ++e) w.contract = w.contract.with(e);
    for (int e = c; e < c + d; ++e) w.remove = w.remove.with(e);
    w.iso.resize(l);
    for (int i = 0; i < l; ++i) w.iso[i] = i;
    return w;
  }
  return has_minor(m, uniform(k, l));
}

BinaryCheck is_binary(const BasisMatroid& m) {
  BinaryCheck check;
  check.u24_witness = has_minor(m, uniform(2, 4));
  check.binary = !check.u24_witness.has_value();
  return check;
}

bool has_minor_naive(const BasisMatroid& m, const BasisMatroid& target) {
  if (m.n > 7) throw error(errc::too_large, "naive minor search beyond 7 elements");
  if (target.n > m.n) return false;
  SubsetTables t = subset_tables(m);
  int drop = m.n - target.n;
  bool found = false;
  for_each_subset_of_size(m.ground(), drop, [&](ElemSet removed) {
    if (found) return;
    // Split `removed` into contract/delete in every way.
    for_each_subset(removed, [&](ElemSet con) {
      if (found) return;
      ElemSet kept = m.ground() - removed;
      int rc = t.rank[con.bits];
      int rt = t.rank[(kept | con).bits] - rc;
      if (rt != target.r) return;
      std::vector<ElemSet> bases;
      for_each_subset_of_size(kept, rt, [&](ElemSet x) {
        if (t.rank[(x | con).bits] - rc == x.size()) bases.push_back(x);
      });
      if (bases.size() != target.bases.size()) return;
      Relabeling rel = compress_map(m.n, kept);
      for (ElemSet& b : bases) b = rel.apply(b);
      std::sort(bases.begin(), bases.end());
      BasisMatroid candidate{target.n, target.r, std::move(bases)};
      if (is_isomorphic(candidate, target)) found = true;
    });
  });
  return found;
}

}  // namespace splitkit
