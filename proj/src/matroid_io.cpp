#include "splitkit/matroid_io.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

#include "splitkit/catalog.hpp"

namespace splitkit {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(int line, int col, const std::string& msg) {
  throw error(errc::syntax, "line " + std::to_string(line) + ", col " +
                                std::to_string(col) + ": " + msg);
}

struct LineScanner {
  std::string text;
  int line_no;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_spaces();
    return pos >= text.size();
  }
  std::string word() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    return text.substr(start, pos - start);
  }
  int integer(const std::string& what) {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) syntax_error(line_no, static_cast<int>(start + 1), "expected " + what);
    return std::stoi(text.substr(start, pos - start));
  }
  ElemSet set() {
    skip_spaces();
    if (pos >= text.size() || text[pos] != '{')
      syntax_error(line_no, static_cast<int>(pos + 1), "expected '{'");
    ++pos;
    ElemSet out;
    skip_spaces();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return out;
    }
    while (true) {
      int e = integer("element index");
      if (e >= kMaxGround)
        throw error(errc::semantic, "element index " + std::to_string(e) + " too large");
      out = out.with(e);
      skip_spaces();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return out;
      }
      syntax_error(line_no, static_cast<int>(pos + 1), "expected ',' or '}'");
    }
  }
};

std::vector<LineScanner> logical_lines(const std::string& text) {
  std::vector<LineScanner> lines;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    LineScanner sc{raw, line_no};
    if (!sc.done()) {
      sc.pos = 0;
      lines.push_back(std::move(sc));
    }
  }
  return lines;
}

void require_within(int e, int n, int line) {
  if (e >= n)
    throw error(errc::semantic, "line " + std::to_string(line) + ": element " +
                                    std::to_string(e) + " >= n=" + std::to_string(n));
}

MatroidFile parse_text(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw error(errc::syntax, "line 1, col 1: empty input");
  std::size_t at = 0;
  auto& first = lines[at];
  if (first.word() != "type") syntax_error(first.line_no, 1, "expected 'type' line");
  std::string kind = first.word();
  ++at;

  MatroidFile file;
  if (kind == "basis") {
    file.kind = MatroidFile::Kind::basis;
    int n = -1;
    std::vector<ElemSet> bases;
    for (; at < lines.size(); ++at) {
      auto& sc = lines[at];
      std::string key = sc.word();
      if (key == "n") {
        n = sc.integer("ground-set size");
      } else if (key == "bases") {
        while (!sc.done()) bases.push_back(sc.set());
      } else {
        syntax_error(sc.line_no, 1, "unknown key '" + key + "'");
      }
    }
    if (n < 0) throw error(errc::syntax, "missing 'n' line");
    for (ElemSet b : bases) {
      for (int e : b) require_within(e, n, 0);
    }
    file.matroid = from_bases(n, std::move(bases));
    return file;
  }
  if (kind == "splitrep") {
    file.kind = MatroidFile::Kind::splitrep;
    int n = -1, rank = -1;
    std::vector<SplitRep::Hyperedge> edges;
    for (; at < lines.size(); ++at) {
      auto& sc = lines[at];
      std::string key = sc.word();
      if (key == "n") {
        n = sc.integer("ground-set size");
      } else if (key == "rank") {
        rank = sc.integer("rank");
      } else if (key == "hyperedge") {
        int r = sc.integer("hyperedge rank");
        edges.push_back({sc.set(), r});
      } else {
        syntax_error(sc.line_no, 1, "unknown key '" + key + "'");
      }
    }
    if (n < 0 || rank < 0) throw error(errc::syntax, "missing 'n' or 'rank' line");
    file.rep = make_rep(n, rank, std::move(edges));
    file.matroid = to_basis_matroid(*file.rep);
    return file;
  }
  if (kind == "graph") {
    file.kind = MatroidFile::Kind::graph;
    int vertices = -1;
    std::vector<std::pair<int, int>> edges;
    for (; at < lines.size(); ++at) {
      auto& sc = lines[at];
      std::string key = sc.word();
      if (key == "vertices") {
        vertices = sc.integer("vertex count");
      } else if (key == "edges") {
        while (!sc.done()) {
          ElemSet e = sc.set();
          if (e.size() == 1) {
            edges.push_back({e.lowest(), e.lowest()});  // self-loop
          } else if (e.size() == 2) {
            int u = e.lowest();
            edges.push_back({u, (e.without(u)).lowest()});
          } else {
            throw error(errc::semantic,
                        "line " + std::to_string(sc.line_no) + ": edge " + e.to_string());
          }
        }
      } else {
        syntax_error(sc.line_no, 1, "unknown key '" + key + "'");
      }
    }
    if (vertices < 0) throw error(errc::syntax, "missing 'vertices' line");
    file.matroid = from_graph(vertices, edges);
    return file;
  }
  if (kind == "gf2") {
    file.kind = MatroidFile::Kind::gf2;
    std::vector<std::vector<int>> rows;
    for (; at < lines.size(); ++at) {
      auto& sc = lines[at];
      std::string key = sc.word();
      if (key != "row") syntax_error(sc.line_no, 1, "unknown key '" + key + "'");
      std::string bits = sc.word();
      std::vector<int> row;
      for (char ch : bits) {
        if (ch != '0' && ch != '1')
          syntax_error(sc.line_no, 1, "row must be a 0/1 string");
        row.push_back(ch - '0');
      }
      if (!rows.empty() && rows.front().size() != row.size())
        throw error(errc::semantic,
                    "line " + std::to_string(sc.line_no) + ": ragged matrix");
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw error(errc::syntax, "missing 'row' lines");
    file.matroid = from_gf2(rows);
    return file;
  }
  if (kind == "catalog") {
    file.kind = MatroidFile::Kind::catalog;
    if (at >= lines.size()) throw error(errc::syntax, "missing 'name' line");
    auto& sc = lines[at];
    if (sc.word() != "name") syntax_error(sc.line_no, 1, "expected 'name'");
    file.matroid = named(sc.word());
    return file;
  }
  syntax_error(first.line_no, 6, "unknown type '" + kind + "'");
}

std::vector<int> set_to_list(ElemSet s) {
  std::vector<int> v;
  for (int e : s) v.push_back(e);
  return v;
}

ElemSet set_from_json(const ordered_json& arr, int n) {
  ElemSet out;
  for (const auto& v : arr) {
    int e = v.get<int>();
    if (e < 0 || e >= kMaxGround)
      throw error(errc::semantic, "element index " + std::to_string(e));
    require_within(e, n, 0);
    out = out.with(e);
  }
  return out;
}

MatroidFile parse_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::syntax, e.what());
  }
  try {
    std::string type = j.at("type").get<std::string>();
    MatroidFile file;
    if (type == "basis") {
      file.kind = MatroidFile::Kind::basis;
      int n = j.at("n").get<int>();
      std::vector<ElemSet> bases;
      for (const auto& b : j.at("bases")) bases.push_back(set_from_json(b, n));
      file.matroid = from_bases(n, std::move(bases));
      return file;
    }
    if (type == "splitrep") {
      file.kind = MatroidFile::Kind::splitrep;
      int n = j.at("n").get<int>();
      int rank = j.at("rank").get<int>();
      std::vector<SplitRep::Hyperedge> edges;
      for (const auto& h : j.at("hyperedges")) {
        edges.push_back({set_from_json(h.at("set"), n), h.at("r").get<int>()});
      }
      file.rep = make_rep(n, rank, std::move(edges));
      file.matroid = to_basis_matroid(*file.rep);
      return file;
    }
    throw error(errc::semantic, "unknown JSON type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::syntax, e.what());
  }
}

}  // namespace

MatroidFile parse_matroid_file(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_json_text(text);
    break;
  }
  return parse_text(text);
}

std::string print_matroid(const BasisMatroid& m) {
  std::string out = "type basis\nn " + std::to_string(m.n) + "\nbases";
  for (ElemSet b : m.bases) out += " " + b.to_string();
  out += "\n";
  return out;
}

std::string print_rep(const SplitRep& rep) {
  std::string out = "type splitrep\nn " + std::to_string(rep.n) + "\nrank " +
                    std::to_string(rep.r) + "\n";
  for (const auto& h : rep.edges) {
    out += "hyperedge " + std::to_string(h.rank) + " " + h.set.to_string() + "\n";
  }
  return out;
}

std::string print_canonical(const MatroidFile& file) {
  if (file.kind == MatroidFile::Kind::splitrep && file.rep) return print_rep(*file.rep);
  return print_matroid(file.matroid);
}

std::string to_json(const BasisMatroid& m) {
  ordered_json j;
  j["type"] = "basis";
  j["n"] = m.n;
  j["bases"] = ordered_json::array();
  for (ElemSet b : m.bases) j["bases"].push_back(set_to_list(b));
  return j.dump();
}

std::string to_json(const SplitRep& rep) {
  ordered_json j;
  j["type"] = "splitrep";
  j["n"] = rep.n;
  j["rank"] = rep.r;
  j["hyperedges"] = ordered_json::array();
  for (const auto& h : rep.edges) {
    ordered_json edge;
    edge["r"] = h.rank;
    edge["set"] = set_to_list(h.set);
    j["hyperedges"].push_back(std::move(edge));
  }
  return j.dump();
}

}  // namespace splitkit
