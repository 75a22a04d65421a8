#include <doctest.h>

#include "derange/lieclass.hpp"

using namespace derange;

namespace {

LieCase l2(std::uint32_t q, LieType t, const std::string& ext, std::uint32_t q0 = 0) {
  return {LieFamily::L2, q, t, q0, ext};
}

std::vector<LieType> l2_types() {
  return {LieType::P1, LieType::TorusSplit, LieType::TorusNonsplit, LieType::Extraspecial, LieType::A5};
}

}  // namespace

TEST_CASE("classify_l2 examples") {
  auto v = classify_l2(l2(31, LieType::P1, "pgl"));
  CHECK(v.ae);
  CHECK(v.descriptor == "t1'");
  v = classify_l2(l2(17, LieType::P1, "G0"));
  CHECK(v.ae);
  CHECK(v.descriptor == "3");
  v = classify_l2(l2(13, LieType::P1, "G0"));
  CHECK_FALSE(v.ae);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].prime == 7);
  CHECK(v.witnesses[0].classes == 3);
  v = classify_l2(l2(17, LieType::TorusNonsplit, "pgl"));
  CHECK(v.ae);
  CHECK(v.descriptor == "17");
  CHECK(classify_l2(l2(8, LieType::TorusNonsplit, "phi")).descriptor == "7");
  CHECK_FALSE(classify_l2(l2(8, LieType::TorusNonsplit, "G0")).ae);
  CHECK(classify_l2(l2(8, LieType::TorusSplit, "G0")).descriptor == "3");
  CHECK_THROWS_AS(classify_l2(l2(9, LieType::P1, "G0")), Error);
  CHECK_THROWS_AS(classify_l2(l2(7, LieType::TorusSplit, "G0")), Error);
  CHECK_THROWS_AS(classify_l2(l2(25, LieType::Subfield, "delta", 5)), Error);
  CHECK_THROWS_AS(classify_l2(l2(16, LieType::P1, "delta")), Error);
}

TEST_CASE("classify_l2 is total and self-consistent over q < 2000") {
  std::size_t cases = 0, ae = 0;
  for (std::uint32_t q = 7; q < 2000; ++q) {
    auto [p, f] = prime_power(q);
    if (p == 0 || q == 9) continue;
    for (const auto& ext : l2_extensions(q)) {
      std::vector<LieCase> cs;
      for (auto t : l2_types()) cs.push_back(l2(q, t, ext.str()));
      for (std::uint32_t f0 = 1; f0 < f; ++f0)
        if (f % f0 == 0 && is_prime_u32(f / f0)) cs.push_back(l2(q, LieType::Subfield, ext.str(), static_cast<std::uint32_t>(ipow(p, f0))));
      for (const auto& c : cs) {
        LieVerdict v;
        try {
          v = classify_l2(c);
        } catch (const Error&) {
          continue;  // inadmissible
        }
        ++cases;
        INFO(c.str());
        if (v.ae) {
          ++ae;
          CHECK(v.witnesses.empty());
          CHECK(c.type != LieType::Subfield);
          CHECK(c.type != LieType::A5);
          CHECK(c.type != LieType::Extraspecial);
        } else {
          CHECK(v.certified() >= 2);
          for (const auto& w : v.witnesses) {
            CHECK(v.order_g0 % w.prime == 0);
            if (w.avoids_h0) CHECK(v.order_h0 % w.prime != 0);
          }
        }
      }
    }
  }
  CHECK(cases > 1000);
  MESSAGE("cases ", cases, " ae ", ae);
}

TEST_CASE("Table 2 P1 rows 2 and 3 at small q") {
  for (std::uint32_t p : {17u, 53u}) CHECK(classify_l2(l2(p, LieType::P1, "G0")).ae);
  // q = 7^2: q + 1 = 50 = 2.5^2, r = 5 = 2^2 + 1, f = 2
  CHECK(classify_l2(l2(49, LieType::P1, "phi")).descriptor == "5");
  CHECK(classify_l2(l2(49, LieType::P1, "deltaphi")).descriptor == "5");
  CHECK_FALSE(classify_l2(l2(49, LieType::P1, "G0")).ae);
  CHECK_FALSE(classify_l2(l2(49, LieType::P1, "full")).ae);
  // 3^2 = 9 is excluded; 3^2 + 1 = 10 = 2.5 but q = 9 is not in the family
  CHECK_FALSE(classify_l2(l2(5 * 5, LieType::P1, "phi")).ae);
}

TEST_CASE("involution types in L2(q)") {
  CHECK(l2_g0_involution_type(31) == "t1'");
  CHECK(l2_g0_involution_type(13) == "t1");
  CHECK_THROWS_AS(l2_g0_involution_type(8), Error);
}

TEST_CASE("l2_extensions enumerates subgroups of C_d x C_f") {
  CHECK(l2_extensions(7).size() == 2);
  CHECK(l2_extensions(8).size() == 2);
  CHECK(l2_extensions(25).size() == 5);   // C2 x C2
  CHECK(l2_extensions(81).size() == 8);   // C2 x C4
  CHECK(l2_extensions(64).size() == 4);   // C6
}

TEST_CASE("classify_u3 table rows") {
  auto u3 = [](std::uint32_t q, LieType t, const std::string& ext) { return LieCase{LieFamily::U3, q, t, 0, ext}; };
  CHECK(classify_u3(u3(3, LieType::P1, "G0.2")).descriptor == "7");
  CHECK_FALSE(classify_u3(u3(3, LieType::P1, "G0")).ae);
  CHECK(classify_u3(u3(3, LieType::L27, "G0")).descriptor == "[J2,J1]");
  CHECK(classify_u3(u3(4, LieType::GU2xGU1, "G0.4")).descriptor == "13");
  CHECK(classify_u3(u3(8, LieType::GU2xGU1, "G0.6")).descriptor == "19");
  CHECK(classify_u3(u3(4, LieType::GU1wrS3, "G0.4")).descriptor == "13");
  auto v = classify_u3(u3(23, LieType::P1, "G0"));
  CHECK_FALSE(v.ae);
  CHECK(v.certified() >= 2);
  CHECK_THROWS_AS(classify_u3(u3(3, LieType::P1, "G0.4")), Error);
  CHECK_THROWS_AS(classify_u3(u3(4, LieType::SO3, "G0")), Error);
}

TEST_CASE("classify_u3 certifies every case with 23 <= q < 600") {
  const LieType types[] = {LieType::P1, LieType::GU2xGU1, LieType::GU1wrS3, LieType::GU1q3, LieType::SO3,
                           LieType::Ext3, LieType::L27, LieType::A6};
  for (std::uint32_t q = 23; q < 600; ++q) {
    auto [p, f] = prime_power(q);
    if (p == 0) continue;
    for (auto t : types) {
      LieCase c{LieFamily::U3, q, t, 0, "G0"};
      LieVerdict v;
      try {
        v = classify_u3(c);
      } catch (const Error&) {
        continue;
      }
      INFO(c.str());
      CHECK_FALSE(v.ae);
      CHECK(v.certified() >= 2);
    }
  }
}

TEST_CASE("Ree and Suzuki witnesses") {
  auto v = classify_ree_suzuki({LieFamily::Ree, 27, LieType::Borel, 0, ""});
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].prime == 7);
  CHECK(v.witnesses[1].prime == 19);
  v = classify_ree_suzuki({LieFamily::Suzuki, 8, LieType::Borel, 0, ""});
  CHECK(v.witnesses[0].prime == 13);
  CHECK(v.witnesses[1].prime == 5);
  v = classify_ree_suzuki({LieFamily::Suzuki, 8, LieType::Dihedral, 0, ""});
  CHECK_FALSE(v.ae);
  CHECK(v.witnesses.size() == 2);
  CHECK_THROWS_AS(classify_ree_suzuki({LieFamily::Ree, 9, LieType::Borel, 0, ""}), Error);
  CHECK_THROWS_AS(classify_ree_suzuki({LieFamily::Suzuki, 8, LieType::TwoByL2, 0, ""}), Error);
}

TEST_CASE("crosscheck agrees with the engine on small cases") {
  for (const auto& c : {l2(17, LieType::P1, "G0"), l2(8, LieType::P1, "phi"), l2(8, LieType::TorusSplit, "phi"),
                        l2(8, LieType::TorusNonsplit, "phi"), l2(13, LieType::P1, "G0"), l2(16, LieType::Subfield, "phi", 4),
                        LieCase{LieFamily::U3, 3, LieType::P1, 0, "G0.2"}, LieCase{LieFamily::U3, 3, LieType::GU2xGU1, 0, "G0"}}) {
    auto r = crosscheck(c);
    INFO(c.str(), " ", r.detail);
    CHECK(r.constructible);
    CHECK(r.agree);
  }
  auto r = crosscheck(l2(13, LieType::A5, "G0"));
  CHECK_FALSE(r.constructible);
}

TEST_CASE("a corrupted verdict is caught by the comparison") {
  LieCase c = l2(13, LieType::P1, "G0");
  auto v = classify_l2(c);
  auto e = classify(lie_action(c));
  CHECK(compare_with_engine(c, v, e).agree);
  v.ae = true;
  v.descriptor = "7";
  v.witnesses.clear();
  CHECK_FALSE(compare_with_engine(c, v, e).agree);
}

TEST_CASE("t1 / t1' matches fixed points on the projective line") {
  for (std::uint32_t q = 7; q <= 81; q += 2) {
    auto [p, f] = prime_power(q);
    if (p == 0) continue;
    ProjectiveGroup g(q, Extension::parse("G0"));
    auto cl = prime_order_classes(g.group());
    for (const auto& c : cl.classes)
      if (c.order == 2) {
        INFO(q);
        CHECK(c.rep.fixed_point_count() == (l2_g0_involution_type(q) == "t1" ? 2u : 0u));
      }
  }
}
