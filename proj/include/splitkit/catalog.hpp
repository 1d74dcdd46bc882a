#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splitkit/basis_matroid.hpp"

namespace splitkit {

/// Builds a named matroid. Accepted names (case-insensitive):
///   u(r,n), mw2, s1, s2, s3, s4, f7, f7star (alias f7*), ag32,
///   mk4, mk4e, mk23, u01+u12+u11, mw2+mw2
/// Throws UNKNOWN_NAME otherwise.
BasisMatroid named(const std::string& name);

/// All fixed catalog names, in canonical order (u(r,n) excluded).
std::vector<std::string> catalog_names();

/// Graphic matroid on the edge list: independent sets are the forests.
BasisMatroid from_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges);

/// Column matroid of a 0/1 matrix over GF(2); rows.size() <= 16 rows, the
/// columns (<= 16) become the ground set.
BasisMatroid from_gf2(const std::vector<std::vector<int>>& rows);

}  // namespace splitkit
