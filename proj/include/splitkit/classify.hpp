#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/minors.hpp"
#include "splitkit/splitrep.hpp"
#include "splitkit/structure.hpp"

namespace splitkit {

// ---------------------------------------------------------------------------
// Flacets (connected matroids only).
// ---------------------------------------------------------------------------

/// Proper flats Z with both M|Z and M/Z connected. Throws NOT_CONNECTED.
std::vector<ElemSet> flacets(const BasisMatroid& m);

/// Flacets of size >= 2; the size and cyclicity routes are both evaluated and
/// must agree.
std::vector<ElemSet> split_flacets(const BasisMatroid& m);

/// Compatibility inequality |F & G| + r(S) <= r(F) + r(G).
bool compatible(const BasisMatroid& m, ElemSet f, ElemSet g);

// ---------------------------------------------------------------------------
// Elementary split matroids: the four equivalent routes.
// ---------------------------------------------------------------------------

enum class EsRoute { forbidden_minor, clutter, decomposition, representation };

struct EsResult {
  bool value = false;
  /// Route forbidden_minor, negative verdict: the forbidden-minor witness.
  std::optional<MinorWitness> witness;
  /// Route clutter, negative verdict: an offending nested pair of proper
  /// cyclic flats (when that is what failed).
  std::optional<std::pair<ElemSet, ElemSet>> nested_pair;
  /// Route representation, positive verdict: a representation of the matroid.
  std::optional<SplitRep> rep;
};

EsResult is_elementary_split(const BasisMatroid& m, EsRoute route);

/// Runs all four routes; throws ROUTE_DISAGREEMENT if they differ (a theorem
/// violation, i.e. an implementation bug).
bool is_elementary_split(const BasisMatroid& m);

// ---------------------------------------------------------------------------
// Split matroids.
// ---------------------------------------------------------------------------

enum class SplitRoute { flacet, excluded_minor, decomposition };

struct SplitCheckResult {
  bool value = false;
  /// Flacet route, negative: an incompatible split-flacet pair (in the labels
  /// of the offending component's restriction when m is disconnected).
  std::optional<std::pair<ElemSet, ElemSet>> incompatible;
  /// Excluded-minor route, negative: name and witness of the found minor.
  std::optional<std::pair<std::string, MinorWitness>> excluded;
};

SplitCheckResult is_split(const BasisMatroid& m, SplitRoute route);

/// Runs all three routes; throws ROUTE_DISAGREEMENT if they differ.
bool is_split(const BasisMatroid& m);

// ---------------------------------------------------------------------------
// Nearly-membership, binary split catalog, full report.
// ---------------------------------------------------------------------------

/// True iff for every element e, M/e or M\e satisfies the predicate.
bool is_nearly(const BasisMatroid& m,
               const std::function<bool(const BasisMatroid&)>& predicate);

enum class CatalogPattern { a, b, c, none };

struct CatalogMatch {
  CatalogPattern pattern = CatalogPattern::none;
  // Pattern (a): `copies` parallel copies added to one element of the
  // rank-r circuit U_{r,r+1}.
  int r = 0;
  int copies = 0;
  // Pattern (b): true when matched on the dual side.
  bool dual_side = false;
  // Pattern (c): which named matroid.
  std::string name;
};

/// Matches a connected matroid on >= 2 elements against the complete list of
/// connected binary split matroids. Throws NOT_CONNECTED.
CatalogMatch match_binary_split_catalog(const BasisMatroid& m);

struct ClassificationReport {
  int n = 0;
  int rank = 0;
  std::size_t basis_count = 0;
  bool uniform = false;
  bool free = false;
  bool rank0 = false;
  bool paving = false;
  bool sparse_paving = false;
  bool connected = false;
  bool binary = false;
  bool elementary_split = false;
  bool split = false;
  bool nearly_split = false;
  std::vector<ElemSet> components;
  std::vector<ElemSet> flacet_list;       // split flacets, connected case only
  std::optional<MinorWitness> u24_witness;
  std::optional<MinorWitness> forbidden_witness;  // U01+U12+U11
  std::optional<SplitRep> representation;
  std::optional<std::pair<std::string, MinorWitness>> split_excluded;
  CatalogMatch catalog_match;  // populated when connected, n >= 2
};

/// Full predicate vector. All multi-route predicates run every route and
/// assert agreement; the class-hierarchy implications are asserted too.
ClassificationReport classify(const BasisMatroid& m);

}  // namespace splitkit
