#include <doctest.h>

#include <fstream>
#include <sstream>

#include "derange/tables.hpp"

using namespace derange;

TEST_CASE("table 1 rows agree with the engine up to n = 9") {
  auto checks = verify_table1(9);
  CHECK(checks.size() == scan_table1_all(9).size());
  for (const auto& c : checks) {
    INFO(to_tsv(c));
    CHECK(c.agrees());
    CHECK(c.completeness == Completeness::Proved);
  }
}

TEST_CASE("table 1 action degrees") {
  CHECK(table1_action({7, "S", "kset:3", false, ""}).point_count() == 35);
  CHECK(table1_action({8, "A", "part:2x4", false, ""}).point_count() == 105);
  CHECK(table1_action({6, "M10", "torus-", true, "3"}).point_count() == 36);
  CHECK(table1_action({5, "A", "D10", true, "[3,1^2]"}).point_count() == 6);
}

TEST_CASE("fixes_kset false means the engine counts no fixed k-sets") {
  for (std::uint32_t n = 5; n <= 9; ++n)
    for (std::uint32_t k = 2; 2 * k < n; ++k) {
      auto a = table1_action({n, "S", "kset:" + std::to_string(k), false, ""});
      for (const auto& s : prime_shapes(n)) {
        INFO(n, " ", k, " ", s.cycle_type().str());
        CHECK(fixes_kset(s, k) == (a.fixed_points(s.representative()) > 0));
      }
    }
}

TEST_CASE("table 2 up to q = 17 agrees with the engine") {
  Table2Options t;
  t.l2_qmax = 17;
  t.engine_qmax = 17;
  t.u3 = false;
  auto rows = verify_table2(t);
  CHECK(rows.size() > 20);
  for (const auto& r : rows) {
    INFO(to_tsv(r));
    CHECK(r.crosschecked);
    CHECK(r.agree);
  }
  std::ifstream good(DERANGE_DATA_DIR "/table2_rows.tsv");
  CHECK(table2_discrepancies(rows, parse_table2_rows(good)).empty());
  std::ifstream bad(DERANGE_DATA_DIR "/../tests/fixtures/table2_corrupt.tsv");
  auto d = table2_discrepancies(rows, parse_table2_rows(bad));
  REQUIRE(d.size() == 1);
  CHECK(d[0].find("L2 q=17 torus- pgl x=2") != std::string::npos);
}

TEST_CASE("table 2 row files") {
  std::istringstream in("# c\nL2\t7\tp1\tG0\t2\n\nU3\t3\tp1\tG0.2\t7\n");
  auto rows = parse_table2_rows(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].line == 4);
  std::istringstream bad("L2\t7\tp1\n");
  CHECK_THROWS_WITH_AS(parse_table2_rows(bad, "f"), doctest::Contains("f:1"), Error);
  std::istringstream bad_type("L2\t7\tborel2\tG0\t2\n");
  CHECK_THROWS_AS(parse_table2_rows(bad_type), Error);
  // an AE case missing from the rows is reported
  Table2Check c;
  c.lie_case = {LieFamily::L2, 7, LieType::P1, 0, "G0"};
  c.verdict.ae = true;
  c.verdict.descriptor = "t1'";
  CHECK(table2_discrepancies({c}, {}).size() == 1);
  CHECK(table2_discrepancies({c}, {rows[0]}).empty());
}
