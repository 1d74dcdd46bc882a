#include "splitkit/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "splitkit/structure.hpp"

namespace splitkit {

std::vector<ElemSet> relabel_bases(std::span<const ElemSet> bases,
                                   std::span<const int> perm) {
  std::vector<ElemSet> out;
  out.reserve(bases.size());
  for (ElemSet b : bases) {
    ElemSet nb;
    for (int e : b) nb = nb.with(perm[e]);
    out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Iso-invariant key per element: basis degree plus the multiset of circuit
// sizes through the element.
using ElementKey = std::array<int, kMaxGround + 2>;

std::vector<ElementKey> element_keys(const BasisMatroid& m,
                                     const std::vector<ElemSet>& circuits) {
  std::vector<ElementKey> keys(m.n);
  for (auto& k : keys) k.fill(0);
  for (ElemSet b : m.bases) {
    for (int e : b) keys[e][0]++;
  }
  for (ElemSet c : circuits) {
    for (int e : c) keys[e][1 + c.size()]++;
  }
  return keys;
}

struct IsoSearch {
  const BasisMatroid& a;
  const BasisMatroid& b;
  const SubsetTables& ta;
  const SubsetTables& tb;
  const std::vector<ElementKey>& ka;
  const std::vector<ElementKey>& kb;
  std::vector<int> map;      // a-element -> b-element, -1 unassigned
  std::uint16_t used_b = 0;
  std::vector<int> order;    // a-elements in assignment order

  bool extend(std::size_t depth) {
    if (depth == order.size()) {
      return relabel_bases(a.bases, map) == b.bases;
    }
    int ae = order[depth];
    for (int be = 0; be < b.n; ++be) {
      if ((used_b >> be) & 1u) continue;
      if (ka[ae] != kb[be]) continue;
      // Pairwise rank consistency with what is already assigned.
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        int ae2 = order[d];
        ElemSet pa = ElemSet::single(ae).with(ae2);
        ElemSet pb = ElemSet::single(be).with(map[ae2]);
        if (ta.rank[pa.bits] != tb.rank[pb.bits]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[ae] = be;
      used_b = static_cast<std::uint16_t>(used_b | (1u << be));
      if (extend(depth + 1)) return true;
      used_b = static_cast<std::uint16_t>(used_b & ~(1u << be));
      map[ae] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const BasisMatroid& a, const BasisMatroid& b) {
  if (a.n != b.n || a.r != b.r || a.bases.size() != b.bases.size()) return std::nullopt;
  if (a.bases == b.bases) {
    std::vector<int> id(a.n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  SubsetTables ta = subset_tables(a);
  SubsetTables tb = subset_tables(b);
  std::vector<ElemSet> ca = structure(a, ta).circuits;
  std::vector<ElemSet> cb = structure(b, tb).circuits;
  if (ca.size() != cb.size()) return std::nullopt;
  {
    auto sizes = [](const std::vector<ElemSet>& cs) {
      std::vector<int> v;
      v.reserve(cs.size());
      for (ElemSet c : cs) v.push_back(c.size());
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sizes(ca) != sizes(cb)) return std::nullopt;
  }

  std::vector<ElementKey> ka = element_keys(a, ca);
  std::vector<ElementKey> kb = element_keys(b, cb);
  {
    auto sa = ka;
    auto sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  IsoSearch search{a, b, ta, tb, ka, kb, std::vector<int>(a.n, -1), 0, {}};
  // Assign the rarest invariant classes first.
  search.order.resize(a.n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    auto freq = [&](int e) {
      int f = 0;
      for (const auto& k : ka) f += (k == ka[e]);
      return f;
    };
    int fx = freq(x), fy = freq(y);
    if (fx != fy) return fx < fy;
    return x < y;
  });
  if (search.extend(0)) return search.map;
  return std::nullopt;
}

BasisMatroid canonical_form(const BasisMatroid& m) {
  if (m.n > 8) throw error(errc::too_large, "canonical form beyond 8 elements");
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElemSet> best = m.bases;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<ElemSet> cand = relabel_bases(m.bases, perm);
    if (cand < best) best = cand;
  }
  return BasisMatroid{m.n, m.r, std::move(best)};
}

}  // namespace splitkit
