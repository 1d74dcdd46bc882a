#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "splitkit/catalog.hpp"
#include "splitkit/classify.hpp"
#include "splitkit/enumerate.hpp"
#include "splitkit/isomorphism.hpp"
#include "splitkit/matroid_io.hpp"

namespace {

using namespace splitkit;
using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::syntax, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string witness_text(const MinorWitness& w) {
  std::string iso = "(";
  for (std::size_t i = 0; i < w.iso.size(); ++i) {
    if (i) iso += ",";
    iso += std::to_string(w.iso[i]);
  }
  iso += ")";
  return "contract " + w.contract.to_string() + " delete " + w.remove.to_string() +
         " iso " + iso;
}

ordered_json witness_json(const MinorWitness& w) {
  ordered_json j;
  j["contract"] = [&] {
    std::vector<int> v;
    for (int e : w.contract) v.push_back(e);
    return v;
  }();
  j["delete"] = [&] {
    std::vector<int> v;
    for (int e : w.remove) v.push_back(e);
    return v;
  }();
  j["iso"] = w.iso;
  return j;
}

std::string set_list_text(const std::vector<ElemSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += " ";
    out += sets[i].to_string();
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& path, const std::string& route, bool json) {
  MatroidFile file = parse_matroid_file(slurp(path));
  const BasisMatroid& m = file.matroid;

  if (route != "all") {
    EsRoute r;
    if (route == "forbidden_minor") r = EsRoute::forbidden_minor;
    else if (route == "clutter") r = EsRoute::clutter;
    else if (route == "decomposition") r = EsRoute::decomposition;
    else if (route == "representation") r = EsRoute::representation;
    else throw CLI::ValidationError("--route", "unknown route " + route);
    EsResult es = is_elementary_split(m, r);
    SplitCheckResult sp = is_split(m, r == EsRoute::forbidden_minor
                                          ? SplitRoute::excluded_minor
                                          : SplitRoute::flacet);
    if (json) {
      ordered_json j;
      j["route"] = route;
      j["elementary_split"] = es.value;
      j["split"] = sp.value;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "route " << route << "\n"
                << "elementary_split " << yesno(es.value) << "\n"
                << "split " << yesno(sp.value) << "\n";
    }
    return 0;
  }

  ClassificationReport rep = classify(m);
  if (json) {
    ordered_json j;
    j["n"] = rep.n;
    j["rank"] = rep.rank;
    j["bases"] = rep.basis_count;
    j["uniform"] = rep.uniform;
    j["free"] = rep.free;
    j["rank0"] = rep.rank0;
    j["paving"] = rep.paving;
    j["sparse_paving"] = rep.sparse_paving;
    j["connected"] = rep.connected;
    j["binary"] = rep.binary;
    j["elementary_split"] = rep.elementary_split;
    j["split"] = rep.split;
    j["nearly_split"] = rep.nearly_split;
    j["components"] = [&] {
      std::vector<std::vector<int>> v;
      for (ElemSet c : rep.components) {
        std::vector<int> one;
        for (int e : c) one.push_back(e);
        v.push_back(std::move(one));
      }
      return v;
    }();
    if (rep.connected) {
      j["split_flacets"] = [&] {
        std::vector<std::vector<int>> v;
        for (ElemSet c : rep.flacet_list) {
          std::vector<int> one;
          for (int e : c) one.push_back(e);
          v.push_back(std::move(one));
        }
        return v;
      }();
    }
    if (rep.u24_witness) j["u24_witness"] = witness_json(*rep.u24_witness);
    if (rep.forbidden_witness) j["forbidden_minor_witness"] = witness_json(*rep.forbidden_witness);
    if (rep.split_excluded) {
      j["split_excluded_minor"] = rep.split_excluded->first;
      j["split_excluded_witness"] = witness_json(rep.split_excluded->second);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n " << rep.n << "\n"
              << "rank " << rep.rank << "\n"
              << "bases " << rep.basis_count << "\n"
              << "uniform " << yesno(rep.uniform) << "\n"
              << "paving " << yesno(rep.paving) << "\n"
              << "sparse_paving " << yesno(rep.sparse_paving) << "\n"
              << "connected " << yesno(rep.connected) << "\n"
              << "binary " << yesno(rep.binary) << "\n"
              << "elementary_split " << yesno(rep.elementary_split) << "\n"
              << "split " << yesno(rep.split) << "\n"
              << "nearly_split " << yesno(rep.nearly_split) << "\n"
              << "components " << set_list_text(rep.components) << "\n";
    if (rep.connected) std::cout << "split_flacets " << set_list_text(rep.flacet_list) << "\n";
    if (rep.u24_witness) std::cout << "u24_witness " << witness_text(*rep.u24_witness) << "\n";
    if (rep.forbidden_witness)
      std::cout << "forbidden_minor_witness " << witness_text(*rep.forbidden_witness) << "\n";
    if (rep.split_excluded)
      std::cout << "split_excluded_minor " << rep.split_excluded->first << " "
                << witness_text(rep.split_excluded->second) << "\n";
  }
  return 0;
}

int cmd_dual(const std::string& path, bool json) {
  MatroidFile file = parse_matroid_file(slurp(path));
  if (file.kind == MatroidFile::Kind::splitrep) {
    SplitRep d = dualize(normalize(*file.rep));
    std::cout << (json ? to_json(d) + "\n" : print_rep(d));
  } else {
    BasisMatroid d = dual(file.matroid);
    std::cout << (json ? to_json(d) + "\n" : print_matroid(d));
  }
  return 0;
}

int cmd_minor(const std::string& path, const std::string& target, bool json) {
  MatroidFile file = parse_matroid_file(slurp(path));
  BasisMatroid t = named(target);
  auto witness = has_minor(file.matroid, t);
  if (json) {
    ordered_json j;
    j["target"] = target;
    j["found"] = witness.has_value();
    if (witness) j["witness"] = witness_json(*witness);
    std::cout << j.dump() << "\n";
  } else if (witness) {
    std::cout << "minor " << target << " " << witness_text(*witness) << "\n";
  } else {
    std::cout << "no " << target << " minor\n";
  }
  return witness ? 0 : 1;
}

int cmd_truncate(const std::string& path, int k, bool json) {
  MatroidFile file = parse_matroid_file(slurp(path));
  if (file.kind == MatroidFile::Kind::splitrep && k < file.rep->r) {
    SplitRep t = truncate_rep(*file.rep, k);
    std::cout << (json ? to_json(t) + "\n" : print_rep(t));
  } else {
    BasisMatroid t = truncation(file.matroid, k);
    std::cout << (json ? to_json(t) + "\n" : print_matroid(t));
  }
  return 0;
}

int cmd_catalog(const std::string& name, bool json) {
  BasisMatroid m = named(name);
  std::cout << (json ? to_json(m) + "\n" : print_matroid(m));
  return 0;
}

int cmd_enumerate(int n, bool json) {
  std::vector<BasisMatroid> all = enumerate_all(n);
  std::map<int, std::uint64_t> by_rank;
  for (const auto& m : all) by_rank[m.r]++;
  std::size_t classes = dedupe_iso(all).size();
  if (json) {
    ordered_json j;
    j["n"] = n;
    j["labeled"] = all.size();
    ordered_json ranks;
    for (auto [r, c] : by_rank) ranks[std::to_string(r)] = c;
    j["by_rank"] = std::move(ranks);
    j["iso_classes"] = classes;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n " << n << "\n"
              << "labeled " << all.size() << "\n";
    for (auto [r, c] : by_rank) std::cout << "rank " << r << " " << c << "\n";
    std::cout << "iso_classes " << classes << "\n";
  }
  return 0;
}

int cmd_verify(int n, std::uint64_t seed, bool json) {
  EnumerationReport report = verify_theorems(n);

  // Seeded closed-form vs oracle rank spot check on random representations.
  std::uint64_t rep_failures = 0;
  int reps = 50;
  for (int i = 0; i < reps; ++i) {
    std::uint64_t s = seed * 1000003ull + static_cast<std::uint64_t>(i);
    int nn = 4 + static_cast<int>(s % 5);
    int r = 1 + static_cast<int>((s / 7) % nn);
    int q = static_cast<int>((s / 11) % 4);
    SplitRepSample sample = random_splitrep(nn, r, q, s);
    BasisMatroid m = to_basis_matroid(sample.rep);
    for (std::uint32_t mask = 0; mask < (1u << nn); ++mask) {
      ElemSet z(static_cast<std::uint16_t>(mask));
      if (rank_of(sample.rep, z) != m.rank(z)) {
        ++rep_failures;
        break;
      }
    }
  }

  std::uint64_t disagreements = rep_failures;
  for (const auto& [k, v] : report.failures) disagreements += v;

  if (json) {
    ordered_json j;
    j["n_max"] = n;
    ordered_json counts;
    for (auto [nn, c] : report.count_by_n) counts[std::to_string(nn)] = c;
    j["matroids_by_n"] = std::move(counts);
    ordered_json classes;
    for (const auto& [k, v] : report.class_counts) classes[k] = v;
    j["class_counts"] = std::move(classes);
    j["random_reps"] = reps;
    j["disagreements"] = disagreements;
    std::cout << j.dump() << "\n";
  } else {
    for (auto [nn, c] : report.count_by_n)
      std::cout << "matroids n=" << nn << " " << c << "\n";
    for (const auto& [k, v] : report.class_counts)
      std::cout << "class " << k << " " << v << "\n";
    std::cout << "random_reps " << reps << "\n";
    for (const auto& d : report.disagreements) std::cout << "disagreement " << d << "\n";
    std::cout << disagreements << " disagreements\n";
  }
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitkit: split-matroid computation kernel"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string file, route = "all", target, name;
  int n = 0;
  std::uint64_t seed = 1;

  auto* classify_cmd = app.add_subcommand("classify", "full predicate vector for a matroid");
  classify_cmd->fallthrough();
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--route", route,
                           "forbidden_minor|clutter|decomposition|representation|all");

  auto* dual_cmd = app.add_subcommand("dual", "dual matroid (or dual representation)");
  dual_cmd->fallthrough();
  dual_cmd->add_option("file", file)->required();

  auto* minor_cmd = app.add_subcommand("minor", "search for a catalog minor");
  minor_cmd->fallthrough();
  minor_cmd->add_option("file", file)->required();
  minor_cmd->add_option("--target", target, "catalog name, e.g. u01+u12+u11")->required();

  auto* trunc_cmd = app.add_subcommand("truncate", "k-truncation (k passed via --n)");
  trunc_cmd->fallthrough();
  trunc_cmd->add_option("file", file)->required();
  trunc_cmd->add_option("--n", n, "truncation rank k")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "print a named matroid");
  catalog_cmd->fallthrough();
  catalog_cmd->add_option("name", name)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive counts for small ground sets");
  enum_cmd->fallthrough();
  enum_cmd->add_option("--n", n, "ground-set size")->required();

  auto* verify_cmd = app.add_subcommand("verify", "desk-scale theorem verification");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--n", n, "max ground-set size")->default_val(6);
  verify_cmd->add_option("--seed", seed, "seed for the random-representation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(file, route, json);
    if (dual_cmd->parsed()) return cmd_dual(file, json);
    if (minor_cmd->parsed()) return cmd_minor(file, target, json);
    if (trunc_cmd->parsed()) return cmd_truncate(file, n, json);
    if (catalog_cmd->parsed()) return cmd_catalog(name, json);
    if (enum_cmd->parsed()) return cmd_enumerate(n, json);
    if (verify_cmd->parsed()) return cmd_verify(n, seed, json);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::syntax:
      case errc::semantic:
      case errc::exchange_violation:
      case errc::unequal_cardinality:
      case errc::unknown_name:
      case errc::out_of_range:
      case errc::h1_violation:
      case errc::too_large:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
