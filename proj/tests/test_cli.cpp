#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "splitkit/matroid_io.hpp"

using namespace splitkit;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPLITKIT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_fixture(const std::string& name, const std::string& content) {
  std::string path = "/tmp/splitkit_fixture_" + name;
  std::ofstream(path) << content;
  return path;
}

const std::string kU24 =
    "# the four-point line\n"
    "type basis\n"
    "n 4\n"
    "bases {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}\n";

const std::string kTwoTriples =
    "type splitrep\n"
    "n 6\n"
    "rank 2\n"
    "hyperedge 1 {0,1,2}\n"
    "hyperedge 1 {3,4,5}\n";

}  // namespace

TEST_CASE("classify golden output") {
  std::string path = write_fixture("u24.txt", kU24);
  RunResult res = run_cli("classify " + path);
  CHECK(res.exit_code == 0);
  std::string expected =
      "n 4\n"
      "rank 2\n"
      "bases 6\n"
      "uniform yes\n"
      "paving yes\n"
      "sparse_paving yes\n"
      "connected yes\n"
      "binary no\n"
      "elementary_split yes\n"
      "split yes\n"
      "nearly_split yes\n"
      "components {0,1,2,3}\n"
      "split_flacets \n"
      "u24_witness contract {} delete {} iso (0,1,2,3)\n";
  CHECK(res.out == expected);

  // Byte-identical across runs.
  CHECK(run_cli("classify " + path).out == expected);
}

TEST_CASE("classify a split representation file") {
  std::string path = write_fixture("rep.txt", kTwoTriples);
  RunResult res = run_cli("classify " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("elementary_split yes") != std::string::npos);
  CHECK(res.out.find("components {0,1,2} {3,4,5}") != std::string::npos);
}

TEST_CASE("route selection") {
  std::string path = write_fixture("u24b.txt", kU24);
  RunResult res = run_cli("classify " + path + " --route forbidden_minor");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "route forbidden_minor\n"
        "elementary_split yes\n"
        "split yes\n");
}

TEST_CASE("parse errors exit 2") {
  std::string bad = write_fixture("bad.txt", "type basis\nn 2\nbases {0,1} {0}\n");
  RunResult res = run_cli("classify " + bad);
  CHECK(res.exit_code == 2);
  CHECK(res.out.find("UNEQUAL_CARDINALITY") != std::string::npos);

  std::string syn = write_fixture("syn.txt", "type basis\nn 2\nbases {0,\n");
  RunResult res2 = run_cli("classify " + syn);
  CHECK(res2.exit_code == 2);
  CHECK(res2.out.find("SYNTAX") != std::string::npos);

  RunResult res3 = run_cli("classify /tmp/definitely_missing_file_splitkit");
  CHECK(res3.exit_code == 2);

  RunResult usage = run_cli("frobnicate");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("minor search against the truncation counterexample") {
  // Four parallel pairs; the direct sum itself is not elementary split (four
  // uniform blocks), so it enters as an explicit basis stanza.
  BasisMatroid pairs4 = direct_sum(direct_sum(uniform(1, 2), uniform(1, 2)),
                                   direct_sum(uniform(1, 2), uniform(1, 2)));
  std::string path = write_fixture("trunc4.txt", print_matroid(pairs4));
  RunResult trunc = run_cli("truncate " + path + " --n 3");
  CHECK(trunc.exit_code == 0);
  std::string tpath = write_fixture("trunc4_rank3.txt", trunc.out);
  RunResult res = run_cli("minor " + tpath + " --target u01+u12+u11");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("minor u01+u12+u11 contract") != std::string::npos);

  RunResult none = run_cli("minor " + write_fixture("u24c.txt", kU24) +
                           " --target u01+u12+u11");
  CHECK(none.exit_code == 1);
  CHECK(none.out == "no u01+u12+u11 minor\n");
}

TEST_CASE("dual of a representation uses the dual formulas") {
  std::string path = write_fixture("rep2.txt", kTwoTriples);
  RunResult res = run_cli("dual " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "type splitrep\n"
        "n 6\n"
        "rank 4\n"
        "hyperedge 2 {3,4,5}\n"
        "hyperedge 2 {0,1,2}\n");
}

TEST_CASE("catalog and enumerate") {
  RunResult w2 = run_cli("catalog mw2");
  CHECK(w2.exit_code == 0);
  CHECK(w2.out == "type basis\nn 4\nbases {0,2} {1,2} {0,3} {1,3} {2,3}\n");

  RunResult unknown = run_cli("catalog nosuch");
  CHECK(unknown.exit_code == 2);

  RunResult en = run_cli("enumerate --n 3");
  CHECK(en.exit_code == 0);
  CHECK(en.out ==
        "n 3\n"
        "labeled 16\n"
        "rank 0 1\n"
        "rank 1 7\n"
        "rank 2 7\n"
        "rank 3 1\n"
        "iso_classes 8\n");
}

TEST_CASE("verify runs clean") {
  RunResult res = run_cli("verify --n 4 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("0 disagreements") != std::string::npos);
}

TEST_CASE("json output round-trips through parse") {
  std::string path = write_fixture("u24json.txt", kU24);
  RunResult res = run_cli("dual " + path + " --json");
  CHECK(res.exit_code == 0);
  MatroidFile parsed = parse_matroid_file(res.out);
  CHECK(parsed.matroid == dual(parse_matroid_file(kU24).matroid));

  RunResult rep = run_cli("dual " + write_fixture("rep3.txt", kTwoTriples) + " --json");
  MatroidFile rparsed = parse_matroid_file(rep.out);
  REQUIRE(rparsed.rep.has_value());
  CHECK(rparsed.rep->r == 4);

  RunResult cj = run_cli("classify " + path + " --json");
  CHECK(cj.exit_code == 0);
  CHECK(cj.out.find("\"uniform\":true") != std::string::npos);
}

TEST_CASE("canonical text form round-trips") {
  for (const std::string& text : {kU24, kTwoTriples}) {
    MatroidFile f1 = parse_matroid_file(text);
    std::string printed = print_canonical(f1);
    MatroidFile f2 = parse_matroid_file(printed);
    CHECK(f1.matroid == f2.matroid);
    CHECK(print_canonical(f2) == printed);
  }
}

TEST_CASE("graph and gf2 stanzas parse") {
  MatroidFile g = parse_matroid_file("type graph\nvertices 3\nedges {0,1} {1,2} {0,2}\n");
  CHECK(g.matroid == uniform(2, 3));
  MatroidFile f = parse_matroid_file("type gf2\nrow 100\nrow 010\nrow 001\n");
  CHECK(f.matroid == uniform(3, 3));
  MatroidFile c = parse_matroid_file("type catalog\nname F7\n");
  CHECK(c.matroid.bases.size() == 28);
}
