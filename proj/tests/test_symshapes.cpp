#include "doctest.h"

#include "derange/classes.hpp"
#include "derange/groups.hpp"
#include "derange/symshapes.hpp"
#include "oracles.hpp"

#include <map>

using namespace derange;

TEST_CASE("k-set and partition predicates") {
  CHECK(!fixes_kset({6, 5, 1}, 3));
  CHECK(fixes_kset({6, 2, 1}, 2));
  CHECK(!fixes_kset({10, 5, 2}, 3));
  CHECK(!fixes_partition({6, 5, 1}, 3, 2));
  CHECK(fixes_partition({6, 2, 3}, 3, 2));
  CHECK(fixes_partition({6, 3, 2}, 3, 2));
}

TEST_CASE("predicates agree with brute force for n <= 10") {
  for (std::uint32_t n = 2; n <= 10; ++n)
    for (const auto& s : prime_shapes(n)) {
      auto x = s.representative();
      for (std::uint32_t k = 1; 2 * k < n; ++k) CHECK(fixes_kset(s, k) == oracle::fixes_some_kset(x, k));
      for (std::uint32_t a = 2; a < n; ++a)
        if (n % a == 0) CHECK(fixes_partition(s, a, n / a) == oracle::fixes_some_partition(x, a, n / a));
    }
}

TEST_CASE("A_n class splitting agrees with the engine for n <= 8") {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    std::map<std::string, int> count;
    for (const auto& c : prime_order_classes(alternating_group(n)).classes) ++count[c.rep.cycle_type().str()];
    for (const auto& s : prime_shapes(n)) {
      auto expect = alt_class_splits(s);
      int got = count[s.cycle_type().str()];
      CHECK((got == 0 ? AltSplit::NotInAlt : got == 1 ? AltSplit::OneClass : AltSplit::TwoClasses) == expect);
    }
  }
  CHECK(alt_class_splits({7, 7, 1}) == AltSplit::TwoClasses);
  CHECK(alt_class_splits({9, 2, 1}) == AltSplit::NotInAlt);
  CHECK(alt_class_splits({9, 3, 3}) == AltSplit::OneClass);
}

TEST_CASE("symbolic classifiers") {
  CHECK(classify_natural(8, NatGroup::Sym).ae);
  CHECK(classify_natural(8, NatGroup::Sym).shape == "[2^4]");
  CHECK(classify_natural(14, NatGroup::Alt).shape == "[7^2]");
  CHECK(!classify_natural(15, NatGroup::Sym).ae);
  CHECK(classify_ksets(17, 2, NatGroup::Sym).ae);
  CHECK(classify_ksets(10, 3, NatGroup::Alt).ae);
  CHECK(!classify_ksets(12, 4, NatGroup::Sym).ae);
  CHECK(!classify_imprimitive(12, 3, 4, NatGroup::Sym).ae);
  CHECK(classify_imprimitive(6, 3, 2, NatGroup::Sym).shape == "[5,1]");
  CHECK(!classify_imprimitive(6, 2, 3, NatGroup::Sym).ae);
  CHECK_THROWS_AS(classify_ksets(10, 5, NatGroup::Sym), Error);
}

TEST_CASE("scan") {
  auto rows = scan_table1(32);
  auto has = [&](std::uint32_t n, const std::string& g, const std::string& act) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const Table1Row& r) { return r.n == n && r.group == g && r.action == act; });
  };
  CHECK(has(32, "S", "natural"));
  CHECK(has(32, "S", "kset:2"));
  CHECK(has(32, "A", "natural"));
  CHECK(has(13, "S", "natural"));
  CHECK(!has(13, "S", "kset:2"));
  CHECK(!has(13, "A", "natural"));
  auto five = scan_table1(5);
  CHECK(five.size() == 3);  // S5 natural, S5 on 2-sets, A5/D10
  CHECK(to_tsv(five[0]) == "5\tS\tnatural\tAE\t[5]");
}
