#pragma once

#include <optional>
#include <string>

#include "splitkit/structure.hpp"

namespace splitkit {

/// Outcome of checking the cyclic-flat axiom scheme (Z0)-(Z3) on a ranked
/// family. On success `induced` holds the matroid whose independent sets are
/// {I : |I & Z| <= rank(Z) for every member Z}; that matroid has exactly the
/// given family as its cyclic flats.
struct CyclicAxiomsResult {
  bool ok = false;
  int failed_axiom = -1;       // 0..3 when !ok
  std::string violation;       // human-readable witness
  std::optional<BasisMatroid> induced;
};

CyclicAxiomsResult verify_cyclic_axioms(const RankedFamily& fam, int n);

}  // namespace splitkit
