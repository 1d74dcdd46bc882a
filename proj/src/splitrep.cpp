#include "splitkit/splitrep.hpp"

#include <algorithm>

#include "splitkit/kernels.hpp"

namespace splitkit {

RepFlags validate(const SplitRep& rep) {
  RepFlags flags;
  int q = rep.q();
  for (int i = 0; i < q && flags.h1; ++i) {
    for (int j = i + 1; j < q; ++j) {
      const auto& hi = rep.edges[i];
      const auto& hj = rep.edges[j];
      if ((hi.set & hj.set).size() > hi.rank + hj.rank - rep.r) {
        flags.h1 = false;
        flags.detail = "(H1) |H" + std::to_string(i + 1) + " & H" + std::to_string(j + 1) +
                       "| = " + std::to_string((hi.set & hj.set).size()) + " > " +
                       std::to_string(hi.rank + hj.rank - rep.r);
        break;
      }
    }
  }
  for (int i = 0; i < q; ++i) {
    const auto& h = rep.edges[i];
    if (flags.h2 && rep.n - h.set.size() + h.rank < rep.r) {
      flags.h2 = false;
      if (flags.detail.empty())
        flags.detail = "(H2) fails at H" + std::to_string(i + 1);
    }
    if (flags.h3 && h.rank > rep.r - 1) {
      flags.h3 = false;
      if (flags.detail.empty())
        flags.detail = "(H3) fails at H" + std::to_string(i + 1);
    }
    if (flags.h4 && h.set.size() < h.rank + 1) {
      flags.h4 = false;
      if (flags.detail.empty())
        flags.detail = "(H4) fails at H" + std::to_string(i + 1);
    }
  }
  return flags;
}

SplitRep make_rep(int n, int r, std::vector<SplitRep::Hyperedge> edges) {
  if (n < 0 || n > kMaxGround) throw error(errc::out_of_range, "ground-set size");
  if (r < 0 || r > n) throw error(errc::out_of_range, "rank " + std::to_string(r));
  if (static_cast<int>(edges.size()) > kMaxHyperedges)
    throw error(errc::too_large, "more than 64 hyperedges");
  ElemSet ground = ElemSet::full(n);
  for (const auto& h : edges) {
    if (!h.set.subset_of(ground))
      throw error(errc::out_of_range, "hyperedge " + h.set.to_string());
    if (h.rank < 0) throw error(errc::out_of_range, "negative hyperedge rank");
  }
  SplitRep rep{n, r, std::move(edges)};
  RepFlags flags = validate(rep);
  if (!flags.h1) throw error(errc::h1_violation, flags.detail);
  return rep;
}

int rank_of(const SplitRep& rep, ElemSet z) {
  int best = std::min(rep.r, z.size());
  for (const auto& h : rep.edges) {
    best = std::min(best, (z - h.set).size() + h.rank);
  }
  return best;
}

BasisMatroid to_basis_matroid(const SplitRep& rep) {
  int rank = rank_of(rep, rep.ground());
  std::vector<std::uint16_t> candidates;
  candidates.reserve(binomial(rep.n, rank));
  for_each_subset_of_size(rep.ground(), rank,
                          [&](ElemSet x) { candidates.push_back(x.bits); });
  for (const auto& h : rep.edges) {
    std::size_t kept = kernels::filter_intersection_at_most(
        candidates, h.set.bits, h.rank, candidates.data());
    candidates.resize(kept);
  }
  std::vector<ElemSet> bases;
  bases.reserve(candidates.size());
  for (std::uint16_t c : candidates) bases.push_back(ElemSet(c));
  return BasisMatroid{rep.n, rank, std::move(bases)};
}

SplitRep normalize(const SplitRep& rep) {
  SplitRep out = rep;
  for (const auto& h : out.edges) {
    out.r = std::min(out.r, out.n - h.set.size() + h.rank);
  }
  std::erase_if(out.edges, [&](const SplitRep::Hyperedge& h) {
    return h.rank > out.r - 1 || h.set.size() < h.rank + 1;
  });
  return out;
}

SplitRep dualize(const SplitRep& rep) {
  RepFlags flags = validate(rep);
  if (!flags.h2) throw error(errc::precondition_h2, flags.detail + "; normalize first");
  SplitRep out;
  out.n = rep.n;
  out.r = rep.n - rep.r;
  out.edges.reserve(rep.edges.size());
  for (const auto& h : rep.edges) {
    ElemSet co = h.set.complement_in(rep.n);
    out.edges.push_back({co, co.size() - rep.r + h.rank});
  }
  return out;
}

SplitRep delete_from_rep(const SplitRep& rep, ElemSet z) {
  if (!z.subset_of(rep.ground()))
    throw error(errc::out_of_range, "delete set " + z.to_string());
  Relabeling rel = compress_map(rep.n, rep.ground() - z);
  SplitRep out;
  out.n = rel.new_n;
  out.r = std::min(rep.r, out.n);
  out.edges.reserve(rep.edges.size());
  for (const auto& h : rep.edges) out.edges.push_back({rel.apply(h.set), h.rank});
  return out;
}

SplitRep contract_in_rep(const SplitRep& rep, ElemSet z) {
  if (!z.subset_of(rep.ground()))
    throw error(errc::out_of_range, "contract set " + z.to_string());
  SplitRep flipped = dualize(normalize(rep));
  SplitRep deleted = delete_from_rep(flipped, z);
  return dualize(normalize(deleted));
}

SplitRep minor_of_rep(const SplitRep& rep, ElemSet del, ElemSet con) {
  if (!(del & con).empty()) throw error(errc::out_of_range, "delete and contract overlap");
  SplitRep contracted = contract_in_rep(rep, con);
  Relabeling rel = compress_map(rep.n, rep.ground() - con);
  return delete_from_rep(contracted, rel.apply(del));
}

SplitRep truncate_rep(const SplitRep& rep, int k) {
  if (k < 0 || k >= rep.r) throw error(errc::out_of_range, "truncation rank " + std::to_string(k));
  SplitRep out = rep;
  out.r = k;
  return out;
}

std::vector<UniformPartCheck> uniform_parts(const SplitRep& rep) {
  if (!validate(rep).non_redundant())
    throw error(errc::precondition, "representation is redundant");
  BasisMatroid m = to_basis_matroid(rep);
  std::vector<UniformPartCheck> out;
  out.reserve(rep.edges.size());
  for (int i = 0; i < rep.q(); ++i) {
    const auto& h = rep.edges[i];
    BasisMatroid rest = restriction(m, h.set);
    BasisMatroid contr = contraction(m, h.set);
    UniformPartCheck check;
    check.index = i;
    check.restriction_ok = rest == uniform(h.rank, h.set.size());
    check.contraction_ok = contr == uniform(rep.r - h.rank, rep.n - h.set.size());
    out.push_back(check);
  }
  return out;
}

RankedFamily cyclic_flats_of_rep(const SplitRep& rep) {
  RepFlags flags = validate(rep);
  if (!flags.non_redundant())
    throw error(errc::precondition, "representation is redundant: " + flags.detail);
  if (rep.q() < 1) throw error(errc::precondition, "no hyperedges");
  for (const auto& h : rep.edges) {
    if (h.rank <= 0) throw error(errc::precondition, "hyperedge of rank 0");
    if (rep.n - h.set.size() + h.rank <= rep.r)
      throw error(errc::precondition, "(H2) not strict at " + h.set.to_string());
  }
  RankedFamily fam;
  fam.entries.push_back({ElemSet{}, 0});
  for (const auto& h : rep.edges) fam.entries.push_back({h.set, h.rank});
  fam.entries.push_back({rep.ground(), rep.r});
  std::sort(fam.entries.begin(), fam.entries.end(),
            [](const RankedFamily::Entry& a, const RankedFamily::Entry& b) {
              if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
              return a.set < b.set;
            });
  return fam;
}

}  // namespace splitkit
