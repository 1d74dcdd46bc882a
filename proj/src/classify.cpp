#include "splitkit/classify.hpp"

#include <algorithm>

#include "splitkit/catalog.hpp"
#include "splitkit/isomorphism.hpp"

namespace splitkit {

namespace {

bool is_uniform(const BasisMatroid& m) {
  return m.bases.size() == binomial(m.n, m.r);
}

/// Proper cyclic flats: nonzero rank, not the ground set.
std::vector<RankedFamily::Entry> proper_cyclic_flats(const RankedFamily& fam,
                                                     const BasisMatroid& m) {
  std::vector<RankedFamily::Entry> out;
  for (const auto& e : fam.entries) {
    if (e.rank > 0 && e.set != m.ground()) out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<ElemSet> flacets(const BasisMatroid& m) {
  SubsetTables t = subset_tables(m);
  if (!is_connected(m, t)) throw error(errc::not_connected, "flacets need a connected matroid");
  std::vector<ElemSet> out;
  for (ElemSet f : flats(m, t)) {
    if (t.rank[f.bits] == 0 || f == m.ground()) continue;  // proper flats only
    if (!is_connected(restriction(m, f))) continue;
    if (!is_connected(contraction(m, f))) continue;
    out.push_back(f);
  }
  return out;
}

std::vector<ElemSet> split_flacets(const BasisMatroid& m) {
  SubsetTables t = subset_tables(m);
  std::vector<ElemSet> out;
  for (ElemSet f : flacets(m)) {
    bool by_size = f.size() >= 2;
    // Cyclicity route: the restriction to f has no coloop.
    bool by_cyclic = true;
    for (int e : f) {
      if (t.rank[f.without(e).bits] < t.rank[f.bits]) {
        by_cyclic = false;
        break;
      }
    }
    if (by_size != by_cyclic)
      throw error(errc::route_disagreement,
                  "split-flacet size and cyclicity routes differ on " + f.to_string());
    if (by_size) out.push_back(f);
  }
  return out;
}

bool compatible(const BasisMatroid& m, ElemSet f, ElemSet g) {
  return (f & g).size() + m.rank(m.ground()) <= m.rank(f) + m.rank(g);
}

// ---------------------------------------------------------------------------
// Elementary split routes.
// ---------------------------------------------------------------------------

namespace {

/// Decomposes a matroid all of whose components are uniform into the fewest
/// uniform direct summands: loops merge into one rank-0 block, coloops into
/// one free block, every other component stands alone. Returns nullopt if
/// some component is not uniform; otherwise the (ground set, rank) blocks.
std::optional<std::vector<std::pair<ElemSet, int>>> uniform_blocks(
    const BasisMatroid& m, const StructureReport& st, const SubsetTables& t) {
  std::vector<std::pair<ElemSet, int>> blocks;
  ElemSet coloops;
  for (ElemSet comp : st.components) {
    if (comp.size() == 1 && t.rank[comp.bits] == 1) {
      coloops = coloops | comp;
      continue;
    }
    if (comp.size() == 1 && t.rank[comp.bits] == 0) continue;  // gathered below
    if (!is_uniform(restriction(m, comp))) return std::nullopt;
    blocks.push_back({comp, t.rank[comp.bits]});
  }
  if (!st.loops.empty()) blocks.push_back({st.loops, 0});
  if (!coloops.empty()) blocks.push_back({coloops, coloops.size()});
  return blocks;
}

EsResult es_by_forbidden_minor(const BasisMatroid& m) {
  EsResult res;
  res.witness = has_minor(m, named("u01+u12+u11"));
  res.value = !res.witness.has_value();
  return res;
}

EsResult es_by_clutter(const BasisMatroid& m, const StructureReport& st,
                       const SubsetTables& t) {
  EsResult res;
  if (st.loops.empty() && st.coloops.empty()) {
    auto proper = proper_cyclic_flats(cyclic_flats(m, t), m);
    for (std::size_t i = 0; i < proper.size(); ++i) {
      for (std::size_t j = 0; j < proper.size(); ++j) {
        if (i != j && proper[i].set.subset_of(proper[j].set)) {
          res.value = false;
          res.nested_pair = {proper[i].set, proper[j].set};
          return res;
        }
      }
    }
    res.value = true;
    return res;
  }
  // Uniform plus a rank-0 or a free matroid.
  res.value = is_uniform(deletion(m, st.loops)) || is_uniform(deletion(m, st.coloops));
  return res;
}

EsResult es_by_decomposition(const BasisMatroid& m, const StructureReport& st,
                             const SubsetTables& t) {
  EsResult res;
  if (is_connected(m, t)) {
    res.value = is_split(m, SplitRoute::flacet).value;
    return res;
  }
  auto blocks = uniform_blocks(m, st, t);
  res.value = blocks.has_value() && blocks->size() <= 2;
  return res;
}

EsResult es_by_representation(const BasisMatroid& m, const StructureReport& st,
                              const SubsetTables& t) {
  EsResult res;
  std::vector<SplitRep::Hyperedge> edges;
  if (is_connected(m, t)) {
    // Split flacets with their ranks, as in the positive direction of the
    // equivalence theorem.
    for (ElemSet f : split_flacets(m)) edges.push_back({f, t.rank[f.bits]});
  } else {
    auto blocks = uniform_blocks(m, st, t);
    if (!blocks || blocks->size() > 2) {
      res.value = false;
      return res;
    }
    if (blocks->size() == 2) {
      for (const auto& [set, rank] : *blocks) edges.push_back({set, rank});
    }
    // One block: the matroid is uniform, q = 0 suffices.
  }
  // (H1) must hold for the candidate; otherwise there is no representation
  // along this construction and the matroid is not elementary split.
  SplitRep candidate{m.n, m.r, std::move(edges)};
  if (!validate(candidate).h1) {
    res.value = false;
    return res;
  }
  if (to_basis_matroid(candidate) == m) {
    res.value = true;
    res.rep = std::move(candidate);
  } else {
    res.value = false;
  }
  return res;
}

}  // namespace

EsResult is_elementary_split(const BasisMatroid& m, EsRoute route) {
  if (route == EsRoute::forbidden_minor) return es_by_forbidden_minor(m);
  SubsetTables t = subset_tables(m);
  StructureReport st = structure(m, t);
  switch (route) {
    case EsRoute::clutter: return es_by_clutter(m, st, t);
    case EsRoute::decomposition: return es_by_decomposition(m, st, t);
    case EsRoute::representation: return es_by_representation(m, st, t);
    default: return es_by_forbidden_minor(m);
  }
}

bool is_elementary_split(const BasisMatroid& m) {
  bool ii = is_elementary_split(m, EsRoute::forbidden_minor).value;
  bool iii = is_elementary_split(m, EsRoute::clutter).value;
  bool iv = is_elementary_split(m, EsRoute::decomposition).value;
  bool i = is_elementary_split(m, EsRoute::representation).value;
  if (ii != iii || ii != iv || ii != i)
    throw error(errc::route_disagreement,
                "elementary-split routes differ: minor=" + std::to_string(ii) +
                    " clutter=" + std::to_string(iii) + " decomposition=" +
                    std::to_string(iv) + " representation=" + std::to_string(i));
  return ii;
}

// ---------------------------------------------------------------------------
// Split routes.
// ---------------------------------------------------------------------------

namespace {

SplitCheckResult split_by_flacet(const BasisMatroid& m, const StructureReport& st,
                                 const SubsetTables& t) {
  SplitCheckResult res;
  if (is_connected(m, t)) {
    std::vector<ElemSet> fl = split_flacets(m);
    for (std::size_t i = 0; i < fl.size(); ++i) {
      for (std::size_t j = i + 1; j < fl.size(); ++j) {
        if (!compatible(m, fl[i], fl[j])) {
          res.value = false;
          res.incompatible = {fl[i], fl[j]};
          return res;
        }
      }
    }
    res.value = true;
    return res;
  }
  // Disconnected: split iff the direct sum of a connected split matroid and
  // uniform matroids.
  int non_uniform = 0;
  for (ElemSet comp : st.components) {
    BasisMatroid part = restriction(m, comp);
    if (is_uniform(part)) continue;
    ++non_uniform;
    if (non_uniform > 1) {
      res.value = false;
      return res;
    }
    SplitCheckResult inner = split_by_flacet(part, structure(part), subset_tables(part));
    if (!inner.value) {
      res.value = false;
      res.incompatible = inner.incompatible;
      return res;
    }
  }
  res.value = true;
  return res;
}

SplitCheckResult split_by_excluded_minor(const BasisMatroid& m) {
  SplitCheckResult res;
  for (const char* name : {"s1", "s2", "s3", "s4", "mw2+mw2"}) {
    if (auto w = has_minor(m, named(name))) {
      res.value = false;
      res.excluded = {std::string(name), std::move(*w)};
      return res;
    }
  }
  res.value = true;
  return res;
}

SplitCheckResult split_by_decomposition(const BasisMatroid& m, const StructureReport& st) {
  // At most one non-uniform component, and that component (a connected
  // matroid) must be elementary split.
  SplitCheckResult res;
  int non_uniform = 0;
  for (ElemSet comp : st.components) {
    BasisMatroid part = restriction(m, comp);
    if (is_uniform(part)) continue;
    ++non_uniform;
    if (non_uniform > 1) {
      res.value = false;
      return res;
    }
    if (!is_elementary_split(part, EsRoute::representation).value) {
      res.value = false;
      return res;
    }
  }
  res.value = true;
  return res;
}

}  // namespace

SplitCheckResult is_split(const BasisMatroid& m, SplitRoute route) {
  if (route == SplitRoute::excluded_minor) return split_by_excluded_minor(m);
  SubsetTables t = subset_tables(m);
  StructureReport st = structure(m, t);
  if (route == SplitRoute::flacet) return split_by_flacet(m, st, t);
  return split_by_decomposition(m, st);
}

bool is_split(const BasisMatroid& m) {
  bool fl = is_split(m, SplitRoute::flacet).value;
  bool ex = is_split(m, SplitRoute::excluded_minor).value;
  bool de = is_split(m, SplitRoute::decomposition).value;
  if (fl != ex || fl != de)
    throw error(errc::route_disagreement,
                "split routes differ: flacet=" + std::to_string(fl) + " excluded_minor=" +
                    std::to_string(ex) + " decomposition=" + std::to_string(de));
  return fl;
}

bool is_nearly(const BasisMatroid& m,
               const std::function<bool(const BasisMatroid&)>& predicate) {
  for (int e = 0; e < m.n; ++e) {
    ElemSet z = ElemSet::single(e);
    if (!predicate(contraction(m, z)) && !predicate(deletion(m, z))) return false;
  }
  return true;
}

CatalogMatch match_binary_split_catalog(const BasisMatroid& m) {
  SubsetTables t = subset_tables(m);
  if (m.n < 2 || !is_connected(m, t))
    throw error(errc::not_connected, "catalog covers connected matroids on >= 2 elements");

  CatalogMatch match;
  // (a) Parallel copies added to one element of U_{r-1,r}: the matroid equals
  // the rank-rho truncation of U_{1,n-rho} + U_{rho,rho}.
  if (m.r >= 1 && m.n >= m.r + 1) {
    BasisMatroid candidate =
        truncation(direct_sum(uniform(1, m.n - m.r), uniform(m.r, m.r)), m.r);
    if (is_isomorphic(m, candidate)) {
      match.pattern = CatalogPattern::a;
      match.r = m.r;
      match.copies = m.n - m.r - 1;
      return match;
    }
  }
  // (b) Loopless rank-2 matroids with exactly three parallel classes, and
  // their duals.
  auto matches_b = [](const BasisMatroid& mm) {
    if (mm.r != 2) return false;
    StructureReport st = structure(mm);
    return st.loops.empty() && st.parallel_classes.size() == 3;
  };
  if (matches_b(m)) {
    match.pattern = CatalogPattern::b;
    return match;
  }
  if (matches_b(dual(m))) {
    match.pattern = CatalogPattern::b;
    match.dual_side = true;
    return match;
  }
  // (c) The four sporadic (sparse) paving matroids.
  for (const char* name : {"mk4", "f7", "f7star", "ag32"}) {
    BasisMatroid fixed = named(name);
    if (m.n == fixed.n && m.r == fixed.r && is_isomorphic(m, fixed)) {
      match.pattern = CatalogPattern::c;
      match.name = name;
      return match;
    }
  }
  match.pattern = CatalogPattern::none;
  return match;
}

ClassificationReport classify(const BasisMatroid& m) {
  SubsetTables t = subset_tables(m);
  StructureReport st = structure(m, t);

  ClassificationReport rep;
  rep.n = m.n;
  rep.rank = m.r;
  rep.basis_count = m.bases.size();
  rep.uniform = is_uniform(m);
  rep.free = m.r == m.n;
  rep.rank0 = m.r == 0;
  rep.components = st.components;

  int min_circuit = kMaxGround + 1;
  for (ElemSet c : st.circuits) min_circuit = std::min(min_circuit, c.size());
  rep.paving = st.circuits.empty() || min_circuit >= m.r;
  rep.sparse_paving = rep.paving && [&] {
    StructureReport dst = structure(dual(m));
    int dmin = kMaxGround + 1;
    for (ElemSet c : dst.circuits) dmin = std::min(dmin, c.size());
    return dst.circuits.empty() || dmin >= m.n - m.r;
  }();

  rep.connected = is_connected(m, t);
  if (rep.connected != is_connected_by_rank(m, t))
    throw error(errc::route_disagreement, "connectivity routes differ");
  if (rep.connected) rep.flacet_list = split_flacets(m);

  BinaryCheck bin = is_binary(m);
  rep.binary = bin.binary;
  rep.u24_witness = std::move(bin.u24_witness);

  EsResult ii = es_by_forbidden_minor(m);
  EsResult iii = es_by_clutter(m, st, t);
  EsResult iv = es_by_decomposition(m, st, t);
  EsResult i = es_by_representation(m, st, t);
  if (ii.value != iii.value || ii.value != iv.value || ii.value != i.value)
    throw error(errc::route_disagreement, "elementary-split routes differ");
  rep.elementary_split = ii.value;
  rep.forbidden_witness = std::move(ii.witness);
  rep.representation = std::move(i.rep);

  SplitCheckResult sfl = split_by_flacet(m, st, t);
  SplitCheckResult sex = split_by_excluded_minor(m);
  SplitCheckResult sde = split_by_decomposition(m, st);
  if (sfl.value != sex.value || sfl.value != sde.value)
    throw error(errc::route_disagreement, "split routes differ");
  rep.split = sfl.value;
  rep.split_excluded = std::move(sex.excluded);

  rep.nearly_split = is_nearly(m, [](const BasisMatroid& mm) {
    return is_split(mm, SplitRoute::excluded_minor).value;
  });

  if (rep.connected && m.n >= 2) rep.catalog_match = match_binary_split_catalog(m);

  // Class hierarchy; violations are theorem violations.
  bool hierarchy = (!rep.uniform || rep.paving) && (!rep.sparse_paving || rep.paving) &&
                   (!rep.paving || rep.elementary_split) &&
                   (!rep.elementary_split || rep.split);
  if (!hierarchy) throw error(errc::route_disagreement, "class hierarchy violated");

  return rep;
}

}  // namespace splitkit
