#include <doctest.h>

#include "derange/elusive.hpp"
#include "derange/su3.hpp"

using namespace derange;

TEST_CASE("unitary groups: orders and point counts") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    UnitaryGroup u(q);
    CAPTURE(q);
    CHECK(u.point_count() == q * q * q * q + q * q + 1);
    CHECK(u.isotropic_count() == q * q * q + 1);
    CHECK(u.isotropic(u.isotropic_point()));
    CHECK_FALSE(u.isotropic(u.nonisotropic_point()));
  }
  CHECK(UnitaryGroup(3).socle().order() == 6048);
  CHECK(UnitaryGroup(3, 2).group().order() == 12096);
  CHECK(UnitaryGroup(4, 4).group().order() == BigInt(62400) * 4);
  CHECK(UnitaryGroup(5, 6).group().order() == BigInt(126000) * 6);
  CHECK_THROWS_AS(UnitaryGroup(7), Error);
  CHECK_THROWS_AS(UnitaryGroup(3, 3), Error);
}

TEST_CASE("unitary actions") {
  CHECK(su3_action(3, Su3Variant::Isotropic).point_count() == 28);
  CHECK(su3_action(4, Su3Variant::Isotropic).point_count() == 65);
  CHECK(su3_action(3, Su3Variant::Nonisotropic).point_count() == 63);
  CHECK(su3_action(5, Su3Variant::Nonisotropic, 3).point_count() == 525);
}

TEST_CASE("U3(3).2 on 28 points is almost elusive with derangements of order 7") {
  auto v = classify(su3_action(3, Su3Variant::Isotropic, 2));
  CHECK(v.status == Status::AlmostElusive);
  CHECK(v.derangement_classes.front().prime == 7);
  CHECK(classify(su3_action(3, Su3Variant::Isotropic, 1)).status == Status::NotAlmostElusive);
}
