#include "splitkit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace splitkit {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Rank-3 point configuration on 6 elements: a triple is dependent when it
// lies inside a declared line or contains a parallel pair. The S1-S4
// encodings below transcribe the parallel-pair / line data of the
// excluded-minor case analysis; their defining properties (connected, not
// split, all single-element minors split) are enforced by the acceptance
// suite rather than trusted from the drawing.
BasisMatroid rank3_from_lines(const std::vector<ElemSet>& pairs,
                              const std::vector<ElemSet>& lines) {
  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(6), 3, [&](ElemSet x) {
    for (ElemSet f : lines) {
      if (x.subset_of(f)) return;
    }
    for (ElemSet p : pairs) {
      if (p.subset_of(x)) return;
    }
    bases.push_back(x);
  });
  return from_bases(6, std::move(bases));
}

BasisMatroid mw2() {
  // U_{2,3} on {0,2,3} plus element 1 parallel to 0: every pair except {0,1}.
  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(4), 2, [&](ElemSet x) {
    if (x != ElemSet::of({0, 1})) bases.push_back(x);
  });
  return from_bases(4, std::move(bases));
}

BasisMatroid f7() {
  // All nonzero columns of GF(2)^3.
  std::vector<std::vector<int>> rows(3, std::vector<int>(7));
  for (int col = 1; col <= 7; ++col) {
    for (int row = 0; row < 3; ++row) rows[row][col - 1] = (col >> row) & 1;
  }
  return from_gf2(rows);
}

BasisMatroid ag32() {
  // Affine points of AG(3,2) with a homogenizing row: columns (1, x, y, z).
  std::vector<std::vector<int>> rows(4, std::vector<int>(8));
  for (int p = 0; p < 8; ++p) {
    rows[0][p] = 1;
    for (int row = 0; row < 3; ++row) rows[row + 1][p] = (p >> row) & 1;
  }
  return from_gf2(rows);
}

std::vector<std::pair<int, int>> k4_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

}  // namespace

BasisMatroid named(const std::string& name) {
  std::string key = lower(name);
  if (key.size() > 2 && key.front() == 'u' && key[1] == '(' && key.back() == ')') {
    std::size_t comma = key.find(',');
    if (comma != std::string::npos) {
      try {
        int r = std::stoi(key.substr(2, comma - 2));
        int n = std::stoi(key.substr(comma + 1, key.size() - comma - 2));
        return uniform(r, n);
      } catch (const std::logic_error&) {
        throw error(errc::unknown_name, name);
      }
    }
  }
  if (key == "mw2") return mw2();
  // Elements a..f = 0..5; {0,1} is always a parallel pair and {4,5} ends up
  // a cocircuit.
  if (key == "s1") {
    return rank3_from_lines({ElemSet::of({0, 1}), ElemSet::of({2, 3})},
                            {ElemSet::of({0, 1, 2, 3})});
  }
  if (key == "s2") {
    return rank3_from_lines({ElemSet::of({0, 1})},
                            {ElemSet::of({0, 1, 2, 3}), ElemSet::of({0, 1, 4, 5})});
  }
  if (key == "s3") {
    return rank3_from_lines({ElemSet::of({0, 1})},
                            {ElemSet::of({0, 1, 2, 3}), ElemSet::of({2, 4, 5})});
  }
  if (key == "s4") {
    return rank3_from_lines({ElemSet::of({0, 1})}, {ElemSet::of({0, 1, 2, 3})});
  }
  if (key == "f7") return f7();
  if (key == "f7star" || key == "f7*") return dual(f7());
  if (key == "ag32") return ag32();
  if (key == "mk4") return from_graph(4, k4_edges());
  if (key == "mk4e") {
    auto edges = k4_edges();
    edges.pop_back();
    return from_graph(4, edges);
  }
  if (key == "mk23") {
    return from_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  }
  if (key == "u01+u12+u11") {
    return direct_sum(direct_sum(uniform(0, 1), uniform(1, 2)), uniform(1, 1));
  }
  if (key == "mw2+mw2") return direct_sum(mw2(), mw2());
  throw error(errc::unknown_name, name);
}

std::vector<std::string> catalog_names() {
  return {"mw2", "s1", "s2", "s3", "s4", "f7", "f7star", "ag32",
          "mk4", "mk4e", "mk23", "u01+u12+u11", "mw2+mw2"};
}

BasisMatroid from_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() > kMaxGround) throw error(errc::too_large, "more than 16 edges");
  if (n_vertices < 0) throw error(errc::out_of_range, "vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw error(errc::out_of_range, "edge endpoint out of range");
  }
  int m = static_cast<int>(edges.size());

  std::vector<int> parent(n_vertices);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto forest_size = [&](ElemSet subset) {
    std::iota(parent.begin(), parent.end(), 0);
    int joined = 0;
    for (int e : subset) {
      int ru = find(edges[e].first), rv = find(edges[e].second);
      if (ru == rv) return -1;  // cycle
      parent[ru] = rv;
      ++joined;
    }
    return joined;
  };

  // Rank = n_vertices - number of connected components of the graph.
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  int comps = 0;
  for (int v = 0; v < n_vertices; ++v) comps += (find(v) == v);
  int rank = n_vertices - comps;

  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(m), rank,
                          [&](ElemSet x) {
                            if (forest_size(x) == rank) bases.push_back(x);
                          });
  return from_bases(m, std::move(bases));
}

BasisMatroid from_gf2(const std::vector<std::vector<int>>& rows) {
  if (rows.size() > kMaxGround) throw error(errc::too_large, "more than 16 rows");
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  if (cols > kMaxGround) throw error(errc::too_large, "more than 16 columns");
  for (const auto& row : rows) {
    if (row.size() != cols) throw error(errc::out_of_range, "ragged matrix");
    for (int v : row) {
      if (v != 0 && v != 1) throw error(errc::out_of_range, "matrix entry not 0/1");
    }
  }

  // Column c as the bitmask of rows with a 1.
  std::vector<std::uint16_t> column(cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c]) column[c] = static_cast<std::uint16_t>(column[c] | (1u << r));
    }
  }

  // XOR basis indexed by leading bit.
  auto gf2_rank = [&](ElemSet subset) {
    std::array<std::uint16_t, kMaxGround> pivot{};
    int rank = 0;
    for (int c : subset) {
      std::uint16_t v = column[c];
      while (v != 0) {
        int lead = 15 - std::countl_zero(v);
        if (pivot[lead] == 0) {
          pivot[lead] = v;
          ++rank;
          break;
        }
        v = static_cast<std::uint16_t>(v ^ pivot[lead]);
      }
    }
    return rank;
  };

  int n = static_cast<int>(cols);
  int rank = gf2_rank(ElemSet::full(n));
  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(n), rank, [&](ElemSet x) {
    if (gf2_rank(x) == rank) bases.push_back(x);
  });
  return from_bases(n, std::move(bases));
}

}  // namespace splitkit
