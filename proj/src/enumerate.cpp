#include "splitkit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "splitkit/catalog.hpp"
#include "splitkit/classify.hpp"
#include "splitkit/cyclic_axioms.hpp"
#include "splitkit/isomorphism.hpp"
#include "splitkit/parallel.hpp"

namespace splitkit {

namespace {

// Exchange requirements between two candidate bases, as bitmasks over the
// candidate index space: requirement k is satisfied once the family contains
// any candidate whose index bit is set.
struct PairRequirements {
  std::vector<std::uint32_t> masks;
};

/// DFS over basis families of fixed rank in lexicographic order. A pending
/// requirement with no candidate index above the extension point can never be
/// satisfied later, which kills the branch.
class FamilySearch {
 public:
  FamilySearch(int n, int r, const std::function<void(const BasisMatroid&)>& sink)
      : n_(n), r_(r), sink_(sink) {
    for_each_subset_of_size(ElemSet::full(n), r,
                            [&](ElemSet x) { candidates_.push_back(x); });
    std::size_t k = candidates_.size();
    index_of_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < k; ++i) index_of_[candidates_[i].bits] = static_cast<int>(i);
    reqs_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        auto& pr = reqs_[i * k + j];
        for (int x : candidates_[i] - candidates_[j]) {
          std::uint32_t mask = 0;
          for (int y : candidates_[j] - candidates_[i]) {
            int idx = index_of_[candidates_[i].without(x).with(y).bits];
            mask |= 1u << idx;
          }
          pr.masks.push_back(mask);
        }
      }
    }
  }

  void run() {
    std::vector<std::uint32_t> pending;
    for (std::size_t first = 0; first < candidates_.size(); ++first) {
      family_.assign(1, static_cast<int>(first));
      family_mask_ = 1u << first;
      emit();
      extend(pending);
    }
  }

 private:
  void emit() {
    std::vector<ElemSet> bases;
    bases.reserve(family_.size());
    for (int i : family_) bases.push_back(candidates_[i]);
    sink_(BasisMatroid{n_, r_, std::move(bases)});
  }

  void extend(const std::vector<std::uint32_t>& pending) {
    std::size_t k = candidates_.size();
    int last = family_.back();
    for (std::size_t next = last + 1; next < k; ++next) {
      std::uint32_t bit = 1u << next;
      std::uint32_t new_mask = family_mask_ | bit;
      std::vector<std::uint32_t> carried;
      bool dead = false;
      for (std::uint32_t req : pending) {
        if (req & bit) continue;  // satisfied by the new basis
        if ((req >> (next + 1)) == 0) {
          dead = true;
          break;
        }
        carried.push_back(req);
      }
      if (dead) continue;
      for (int member : family_) {
        for (const auto* pr : {&reqs_[member * k + next], &reqs_[next * k + member]}) {
          for (std::uint32_t req : pr->masks) {
            if (req & new_mask) continue;
            if ((req >> (next + 1)) == 0) {
              dead = true;
              break;
            }
            carried.push_back(req);
          }
          if (dead) break;
        }
        if (dead) break;
      }
      if (dead) continue;
      family_.push_back(static_cast<int>(next));
      family_mask_ = new_mask;
      if (carried.empty()) emit();
      extend(carried);
      family_.pop_back();
      family_mask_ &= ~bit;
    }
  }

  int n_;
  int r_;
  const std::function<void(const BasisMatroid&)>& sink_;
  std::vector<ElemSet> candidates_;
  std::vector<int> index_of_;
  std::vector<PairRequirements> reqs_;
  std::vector<int> family_;
  std::uint32_t family_mask_ = 0;
};

}  // namespace

void enumerate_all(int n, const std::function<void(const BasisMatroid&)>& sink) {
  if (n < 0) throw error(errc::out_of_range, "negative ground-set size");
  if (n > 6) throw error(errc::too_large, "exhaustive enumeration beyond 6 elements");
  for (int r = 0; r <= n; ++r) FamilySearch(n, r, sink).run();
}

std::vector<BasisMatroid> enumerate_all(int n) {
  std::vector<BasisMatroid> out;
  enumerate_all(n, [&](const BasisMatroid& m) { out.push_back(m); });
  return out;
}

std::vector<BasisMatroid> dedupe_iso(const std::vector<BasisMatroid>& stream) {
  std::set<std::vector<ElemSet>> seen;
  std::vector<BasisMatroid> out;
  for (const auto& m : stream) {
    BasisMatroid canon = canonical_form(m);
    if (seen.insert(canon.bases).second) out.push_back(std::move(canon));
  }
  return out;
}

namespace {

// splitmix64: deterministic across platforms, unlike the standard
// distributions.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int bound) {
    return bound <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }
};

}  // namespace

SplitRepSample random_splitrep(int n, int r, int q, std::uint64_t seed) {
  if (n < 0 || n > 10 || r < 0 || r > n)
    throw error(errc::out_of_range, "sampler needs 0 <= r <= n <= 10");
  if (q < 0 || q > 8) throw error(errc::out_of_range, "sampler needs q <= 8");

  Rng rng{seed};
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<SplitRep::Hyperedge> edges;
    edges.reserve(q);
    for (int i = 0; i < q; ++i) {
      // Ranks up to r: values of exactly r yield (H3)-redundant pairs, which
      // keeps every (r,q) combination (H1)-feasible.
      int ri = rng.below(r + 1);
      // Size window straddles the (H2)/(H4) boundaries so redundant pairs
      // occur with small probability.
      int lo = std::max(1, ri);
      int hi = std::min(n, n - r + ri + 1);
      if (hi < lo) hi = lo = std::min(std::max(1, ri + 1), n);
      int size = lo + rng.below(hi - lo + 1);
      std::array<int, kMaxGround> perm{};
      for (int e = 0; e < n; ++e) perm[e] = e;
      ElemSet h;
      for (int pick = 0; pick < size; ++pick) {
        int sel = pick + rng.below(n - pick);
        std::swap(perm[pick], perm[sel]);
        h = h.with(perm[pick]);
      }
      edges.push_back({h, ri});
    }
    SplitRep rep{n, r, std::move(edges)};
    RepFlags flags = validate(rep);
    if (!flags.h1) continue;
    return SplitRepSample{std::move(rep), flags};
  }
  throw error(errc::give_up, "no (H1)-feasible sample for n=" + std::to_string(n) +
                                 " r=" + std::to_string(r) + " q=" + std::to_string(q));
}

namespace {

struct CheckCounters {
  std::map<std::string, std::uint64_t> failures;
  std::vector<std::string> disagreements;
  std::map<std::string, std::uint64_t> class_counts;

  void check(const std::string& name, bool ok, const BasisMatroid& m) {
    if (ok) return;
    failures[name]++;
    if (disagreements.size() < 32) {
      std::string bases;
      for (ElemSet b : m.bases) bases += b.to_string();
      disagreements.push_back(name + " on n=" + std::to_string(m.n) + " " + bases);
    }
  }
};

void verify_one(const BasisMatroid& m, CheckCounters& c) {
  SubsetTables t = subset_tables(m);
  StructureReport st = structure(m, t);

  // Four-way equivalence.
  bool ii = is_elementary_split(m, EsRoute::forbidden_minor).value;
  bool iii = is_elementary_split(m, EsRoute::clutter).value;
  bool iv = is_elementary_split(m, EsRoute::decomposition).value;
  bool i = is_elementary_split(m, EsRoute::representation).value;
  c.check("thm41_equivalence", ii == iii && ii == iv && ii == i, m);

  bool fl = is_split(m, SplitRoute::flacet).value;
  bool ex = is_split(m, SplitRoute::excluded_minor).value;
  bool de = is_split(m, SplitRoute::decomposition).value;
  c.check("split_routes", fl == ex && fl == de, m);

  bool connected = is_connected(m, t);
  c.check("connectivity_routes", connected == is_connected_by_rank(m, t), m);
  if (connected) c.check("connected_es_eq_split", ii == fl, m);

  bool unif = m.bases.size() == binomial(m.n, m.r);
  int min_circuit = kMaxGround + 1;
  for (ElemSet circ : st.circuits) min_circuit = std::min(min_circuit, circ.size());
  bool paving = st.circuits.empty() || min_circuit >= m.r;
  c.check("hierarchy", (!unif || paving) && (!paving || ii) && (!ii || fl), m);

  // Cyclic-flat axiom round trip.
  CyclicAxiomsResult axioms = verify_cyclic_axioms(cyclic_flats(m, t), m.n);
  c.check("cyclic_roundtrip", axioms.ok && axioms.induced == m, m);

  c.check("dual_involution", dual(dual(m)) == m, m);

  if (connected && m.n >= 2) {
    bool prop22 = true;
    for (int e = 0; e < m.n && prop22; ++e) {
      ElemSet z = ElemSet::single(e);
      prop22 = is_connected(contraction(m, z)) || is_connected(deletion(m, z));
    }
    c.check("prop22_connected_minor", prop22, m);
  }
  if (connected && !unif) {
    c.check("prop24_w2_minor", has_minor(m, named("mw2")).has_value(), m);
  }

  bool binary = is_binary(m).binary;
  if (connected && m.n >= 2) {
    bool matched = match_binary_split_catalog(m).pattern != CatalogPattern::none;
    c.check("binary_catalog", (binary && fl) == matched, m);
  }

  if (!fl) {
    bool covered = false;
    for (const char* name : {"s1", "s2", "s3", "s4", "mw2+mw2"}) {
      if (has_minor(m, named(name))) {
        covered = true;
        break;
      }
    }
    c.check("excluded_minor_cover", covered, m);
  }

  c.class_counts["total"]++;
  if (unif) c.class_counts["uniform"]++;
  if (paving) c.class_counts["paving"]++;
  if (connected) c.class_counts["connected"]++;
  if (binary) c.class_counts["binary"]++;
  if (ii) c.class_counts["elementary_split"]++;
  if (fl) c.class_counts["split"]++;
}

}  // namespace

EnumerationReport verify_theorems(int n_max) {
  EnumerationReport report;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BasisMatroid> stream = enumerate_all(n);
    for (const auto& m : stream) {
      report.count_by_n_rank[{n, m.r}]++;
      report.count_by_n[n]++;
    }
    std::vector<CheckCounters> per_worker(worker_count());
    parallel_chunks(stream.size(), [&](std::size_t w, std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) verify_one(stream[idx], per_worker[w]);
    });
    for (const auto& c : per_worker) {
      for (const auto& [k, v] : c.failures) report.failures[k] += v;
      for (const auto& [k, v] : c.class_counts) report.class_counts[k] += v;
      for (const auto& d : c.disagreements) {
        if (report.disagreements.size() < 32) report.disagreements.push_back(d);
      }
    }
  }
  return report;
}

}  // namespace splitkit
