#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace derange;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string data = DERANGE_DATA_DIR;
const std::string golden = DERANGE_DATA_DIR "/../tests/golden/";

}  // namespace

TEST_CASE("cli output matches the golden files") {
  const std::pair<std::string, std::vector<std::string>> cases[] = {
      {"analyze_m11_stab12.txt", {"analyze", "M11", "stab12"}},
      {"analyze_s6_part3x2.txt", {"analyze", "S:6", "part:3x2"}},
      {"analyze_l2_17_borel.txt", {"analyze", "L2:17", "file:17-8.gens"}},
      {"classify_l2_13_p1.txt", {"classify", "--family", "l2", "--q", "13", "--type", "p1"}},
      {"zsig_2_6.txt", {"numtheory", "zsig", "2", "6"}},
      {"ppd6_7.txt", {"numtheory", "ppd6", "7"}},
      {"ingest_m11.txt", {"ingest", "m11.gens"}},
      {"scan_ksets_9.txt", {"scan-ksets", "--nmax", "9", "--engine-nmax", "9"}},
      {"btv_100.txt", {"numtheory", "btv", "--bounds", "100,100,10,10"}},
  };
  auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(data);  // the goldens were recorded with relative file names
  for (const auto& [file, args] : cases) {
    INFO(file);
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == slurp(golden + file));
    CHECK(a.out == b.out);
  }
  std::filesystem::current_path(cwd);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"analyze", "M11", "stab12"}).code == 0);
  CHECK(run({"analyze", "L2:17", "file:" + data + "/17-4.gens"}).out.find("AlmostElusive") != std::string::npos);
  CHECK(run({"--seed", "3", "analyze", "A:12", "kset:5", "--backend", "randomized"}).code == 2);
  CHECK(run({"analyze", "A:12", "kset:5", "--backend", "randomized", "--require-complete"}).code == 1);
  CHECK(run({"analyze", "S:8", "P1"}).code == 1);
  CHECK(run({"analyze", "S:8"}).code == 1);
  CHECK(run({"analyze", "Q:8", "stab"}).code == 1);
  CHECK(run({"analyze", "L2:17", "file:" + data + "/m11.gens"}).code == 1);
  CHECK(run({"analyze", "S:10", "kset:2", "--cap-index", "10"}).code == 1);
  CHECK(run({"analyze", "S:8", "kset:3", "--backend", "bogus"}).code == 1);
  CHECK(run({"nosuch"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"ingest", "/nonexistent.gens"}).code == 1);
  CHECK(run({"numtheory", "ppd6", "6"}).code == 1);
  CHECK(run({"pi-filter", "7920", "7"}).code == 1);
  auto pf = run({"pi-filter", "2^4*3^2*5*11", "660"});
  CHECK(pf.code == 0);
  CHECK(pf.out == "passes: yes\nexcess: none\n");
}

TEST_CASE("cli ingest errors name the line") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = (dir / "derange_bad.gens").string();
  {
    std::ofstream f(path);
    f << "# x\ndegree 4\n2 3 4 1\n1 1 3 4\n";
  }
  auto r = run({"ingest", path});
  CHECK(r.code == 1);
  CHECK(r.err.find(":4:") != std::string::npos);
  {
    std::ofstream f(path);
    f << "degree 4\n";
  }
  r = run({"ingest", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("no generators") != std::string::npos);
  auto emitted = (dir / "derange_emit.gens").string();
  r = run({"ingest", data + "/m11.gens", "--emit", emitted});
  CHECK(r.code == 0);
  CHECK(run({"ingest", emitted}).out == r.out);
  std::filesystem::remove(path);
  std::filesystem::remove(emitted);
}

TEST_CASE("verify-table2 flags a corrupted row by name") {
  auto good = run({"verify-table2", "--qmax", "17", "--no-u3", "--rows", data + "/table2_rows.tsv"});
  CHECK(good.code == 0);
  auto bad = run({"verify-table2", "--qmax", "17", "--no-u3", "--rows", data + "/../tests/fixtures/table2_corrupt.tsv"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("row L2 q=17 torus- pgl x=2") != std::string::npos);
}

TEST_CASE("verify-table1 small range passes") {
  auto r = run({"verify-table1", "--nmax", "7"});
  CHECK(r.code == 0);
  CHECK(r.err.find("PASS") != std::string::npos);
}

TEST_CASE("classify with crosscheck") {
  auto r = run({"classify", "--family", "l2", "--q", "8", "--type", "torus-", "--ext", "phi", "--crosscheck"});
  CHECK(r.code == 0);
  CHECK(r.out.find("AE x=7") != std::string::npos);
  CHECK(r.out.find("agrees") != std::string::npos);
  CHECK(run({"classify", "--family", "ree", "--q", "27", "--type", "borel"}).code == 0);
  CHECK(run({"classify", "--family", "l2", "--q", "12", "--type", "p1"}).code == 1);
}
