#include "splitkit/structure.hpp"

#include <algorithm>
#include <numeric>

namespace splitkit {

namespace {

bool family_order(ElemSet a, ElemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

StructureReport structure(const BasisMatroid& m) {
  return structure(m, subset_tables(m));
}

StructureReport structure(const BasisMatroid& m, const SubsetTables& t) {
  StructureReport rep;

  std::uint16_t in_all = m.n == 0 ? 0 : static_cast<std::uint16_t>(ElemSet::full(m.n).bits);
  std::uint16_t in_some = 0;
  for (ElemSet b : m.bases) {
    in_all &= b.bits;
    in_some |= b.bits;
  }
  rep.loops = ElemSet(static_cast<std::uint16_t>(~in_some)) & m.ground();
  rep.coloops = ElemSet(in_all);

  // Circuits: dependent sets all of whose single-element removals are
  // independent. The table sweep already pruned everything below.
  std::size_t size = std::size_t{1} << m.n;
  for (std::size_t mask = 1; mask < size; ++mask) {
    if (t.independent[mask]) continue;
    ElemSet c(static_cast<std::uint16_t>(mask));
    bool minimal = true;
    for (int e : c) {
      if (!t.independent[c.without(e).bits]) {
        minimal = false;
        break;
      }
    }
    if (minimal) rep.circuits.push_back(c);
  }
  std::sort(rep.circuits.begin(), rep.circuits.end(), family_order);

  // Parallel classes: group non-loop elements by their rank-1 closure.
  ElemSet seen;
  for (int e = 0; e < m.n; ++e) {
    if (rep.loops.contains(e) || seen.contains(e)) continue;
    ElemSet cls = t.closure(ElemSet::single(e)) - rep.loops;
    rep.parallel_classes.push_back(cls);
    seen = seen | cls;
  }

  // Components: union of circuit supports, singletons elsewhere.
  std::array<int, kMaxGround> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (ElemSet c : rep.circuits) {
    int head = c.lowest();
    for (int e : c) parent[find(e)] = find(head);
  }
  std::array<ElemSet, kMaxGround> comp{};
  for (int e = 0; e < m.n; ++e) comp[find(e)] = comp[find(e)].with(e);
  for (int e = 0; e < m.n; ++e) {
    if (find(e) == e) rep.components.push_back(comp[e]);
  }
  return rep;
}

std::vector<ElemSet> flats(const BasisMatroid& m) { return flats(m, subset_tables(m)); }

std::vector<ElemSet> flats(const BasisMatroid& m, const SubsetTables& t) {
  std::vector<ElemSet> out;
  std::size_t size = std::size_t{1} << m.n;
  for (std::size_t mask = 0; mask < size; ++mask) {
    ElemSet x(static_cast<std::uint16_t>(mask));
    if (t.is_flat(x)) out.push_back(x);
  }
  return out;
}

RankedFamily cyclic_flats(const BasisMatroid& m) {
  return cyclic_flats(m, subset_tables(m));
}

RankedFamily cyclic_flats(const BasisMatroid& m, const SubsetTables& t) {
  RankedFamily fam;
  std::size_t size = std::size_t{1} << m.n;
  for (std::size_t mask = 0; mask < size; ++mask) {
    ElemSet x(static_cast<std::uint16_t>(mask));
    if (!t.is_flat(x)) continue;
    // Cyclic: the restriction to x has no coloop.
    bool cyclic = true;
    for (int e : x) {
      if (t.rank[x.without(e).bits] < t.rank[x.bits]) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) fam.entries.push_back({x, t.rank[x.bits]});
  }
  std::sort(fam.entries.begin(), fam.entries.end(),
            [](const RankedFamily::Entry& a, const RankedFamily::Entry& b) {
              return family_order(a.set, b.set);
            });
  return fam;
}

bool is_connected(const BasisMatroid& m) { return is_connected(m, subset_tables(m)); }

bool is_connected(const BasisMatroid& m, const SubsetTables& t) {
  return structure(m, t).components.size() <= 1;
}

bool is_connected_by_rank(const BasisMatroid& m) {
  return is_connected_by_rank(m, subset_tables(m));
}

bool is_connected_by_rank(const BasisMatroid& m, const SubsetTables& t) {
  std::size_t size = std::size_t{1} << m.n;
  std::uint16_t full = ElemSet::full(m.n).bits;
  for (std::size_t mask = 1; mask + 1 < size; ++mask) {
    if (t.rank[mask] + t.rank[full ^ mask] <= t.rank[full]) return false;
  }
  return true;
}

std::vector<ElemSet> circuits_naive(const BasisMatroid& m) {
  std::vector<ElemSet> out;
  std::size_t size = std::size_t{1} << m.n;
  for (std::size_t mask = 1; mask < size; ++mask) {
    ElemSet c(static_cast<std::uint16_t>(mask));
    if (m.rank(c) >= c.size()) continue;
    bool minimal = true;
    for (int e : c) {
      ElemSet d = c.without(e);
      if (m.rank(d) < d.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), family_order);
  return out;
}

}  // namespace splitkit
