#pragma once

#include <optional>
#include <string>

#include "splitkit/basis_matroid.hpp"
#include "splitkit/splitrep.hpp"

namespace splitkit {

/// A parsed matroid file: one of the basis-list, split-representation,
/// graph, GF(2)-matrix or catalog-reference stanzas, always resolved to an
/// explicit matroid. Parse-print-parse is the identity on the canonical
/// (basis / splitrep) forms.
struct MatroidFile {
  enum class Kind { basis, splitrep, graph, gf2, catalog };
  Kind kind = Kind::basis;
  BasisMatroid matroid;
  std::optional<SplitRep> rep;  // kind == splitrep only
};

/// Accepts both the line-oriented text grammar and its JSON mirror
/// (detected by a leading '{'). Throws SYNTAX with line/column context, or
/// SEMANTIC-class errors surfaced from validation.
MatroidFile parse_matroid_file(const std::string& text);

std::string print_matroid(const BasisMatroid& m);
std::string print_rep(const SplitRep& rep);
/// Canonical form: splitrep stanza for splitrep files, basis stanza otherwise.
std::string print_canonical(const MatroidFile& file);

std::string to_json(const BasisMatroid& m);
std::string to_json(const SplitRep& rep);

}  // namespace splitkit
