#include "doctest.h"

#include "derange/elusive.hpp"
#include "derange/groups.hpp"

#include <random>

using namespace derange;

namespace {

PermGroup relabel(const PermGroup& g, const Permutation& s) {
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.conjugate_by(s));
  return PermGroup(g.degree(), gens);
}

std::vector<TransitiveAction> sample_actions() {
  std::vector<TransitiveAction> out;
  for (std::uint32_t n = 5; n <= 7; ++n)
    for (bool alt : {false, true}) {
      auto g = alt ? alternating_group(n) : symmetric_group(n);
      out.push_back(natural_action(g));
      out.push_back(coset_action(g, kset_stabilizer(n, 2, alt)));
    }
  out.push_back(coset_action(symmetric_group(6), partition_stabilizer(6, 3, 2, false)));
  out.push_back(coset_action(symmetric_group(6), partition_stabilizer(6, 2, 3, false)));
  ProjectiveGroup l7(7, {});
  out.push_back(natural_action(l7.group()));
  out.push_back(coset_action(l7.group(), l2_subgroup(l7, L2Type::TorusSplit)));
  out.push_back(natural_action(m11().degree12));
  out.push_back(coset_action(symmetric_group(5), PermGroup(5, {Permutation::from_cycles(5, {{1, 2, 3}})})));
  return out;
}

}  // namespace

TEST_CASE("M11 on 12 points is elusive") {
  auto a = natural_action(m11().degree12);
  auto v = classify(a);
  CHECK(v.status == Status::Elusive);
  CHECK(v.derangement_classes.empty());
  std::vector<std::uint32_t> primes;
  for (const auto& c : v.all_classes) primes.push_back(c.prime);
  CHECK(primes == std::vector<std::uint32_t>{2, 3, 5, 11, 11});
  CHECK(is_r_elusive(a, 2));
  // an element of order 11 fixes one of the 12 points
  CHECK(is_r_elusive(a, 11));
  CHECK(v.completeness == Completeness::Proved);
}

TEST_CASE("L2(17) on cosets of 17:8 and 17:4") {
  ProjectiveGroup g(17, {});
  auto m = l2_subgroup(g, L2Type::P1);
  CHECK(m.order() == 136);
  const auto& F = g.field();
  PermGroup h(18, {g.mobius(1, 0, 1, 1), g.mobius(F.pow(F.primitive(), 4), 0, 0, 1)});
  CHECK(h.order() == 68);
  auto am = coset_action(g.group(), m), ah = coset_action(g.group(), h);
  CHECK(am.point_count() == 18);
  CHECK(ah.point_count() == 36);
  auto vm = classify(am), vh = classify(ah);
  CHECK(vm.status == Status::AlmostElusive);
  CHECK(vh.status == Status::AlmostElusive);
  CHECK(vm.derangement_classes[0].prime == 3);
}

TEST_CASE("S8 natural action") {
  auto v = classify(natural_action(symmetric_group(8)));
  REQUIRE(v.status == Status::AlmostElusive);
  CHECK(v.derangement_classes[0].cycle_type.str() == "[2^4]");
  CHECK(v.descriptor() == "prime 2, size 105, [2^4]");
}

TEST_CASE("degenerate action") {
  auto g = symmetric_group(4);
  auto v = classify(coset_action(g, g));
  CHECK(v.degenerate);
  CHECK(v.status == Status::Elusive);
}

TEST_CASE("pi filter") {
  auto f = pi_filter(FactoredInteger::parse("2^4*3^2*5*11"), FactoredInteger::parse("2^2*3*5*11"));
  CHECK(f.passes);
  CHECK(f.excess.empty());
  auto g = pi_filter(FactoredInteger::of(420), FactoredInteger::of(4));
  CHECK(!g.passes);
  CHECK(g.excess == std::set<BigInt>{3, 5, 7});
  auto h = pi_filter(FactoredInteger::of(2448), FactoredInteger::of(136));
  CHECK(h.passes);
  CHECK(h.excess == std::set<BigInt>{3});
  CHECK_THROWS_AS(pi_filter(FactoredInteger::of(10), FactoredInteger::of(3)), Error);
}

TEST_CASE("unique derangement class census") {
  PermGroup d10(5, {Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}), Permutation::from_cycles(5, {{2, 5}, {3, 4}})});
  CHECK(all_orders_derangement_census(coset_action(alternating_group(5), d10)) == 1);
  ProjectiveGroup l8(8, Extension::parse("phi"));
  auto h = l2_subgroup(l8, L2Type::TorusNonsplit);
  CHECK(h.order() == 54);
  CHECK(all_orders_derangement_census(coset_action(l8.group(), h)) == 1);
  CHECK(all_orders_derangement_census(natural_action(symmetric_group(3))) == 1);
}

TEST_CASE("verdict properties on sample actions") {
  std::mt19937_64 rng(5);
  for (const auto& a : sample_actions()) {
    auto v = classify(a);
    CAPTURE(a.point_count());
    // Jordan: some derangement always exists
    CHECK(all_orders_derangement_census(a) >= 1);
    // relabelling points leaves the verdict unchanged
    auto s = symmetric_group(a.group().degree()).random_element(rng);
    auto b = coset_action(relabel(a.group(), s), relabel(a.stabilizer(), s));
    auto w = classify(b);
    CHECK(w.status == v.status);
    CHECK(w.derangement_classes.size() == v.derangement_classes.size());
    // pi filter failure excludes elusive and almost elusive
    auto pf = pi_filter(FactoredInteger::of(a.group().order()), FactoredInteger::of(a.stabilizer().order()));
    if (!pf.passes) CHECK(v.status == Status::NotAlmostElusive);
    if (v.status == Status::AlmostElusive) {
      std::uint32_t not_elusive = 0;
      for (const auto& [r, e] : factor(a.point_count())) not_elusive += !is_r_elusive(a, static_cast<std::uint32_t>(r));
      CHECK(not_elusive == 1);
    }
    // every class: direct fixed points equal the intersection formula
    for (const auto& c : v.all_classes) CHECK(BigInt(c.fixes) == fixes_by_intersection(a, c.rep));
  }
}

TEST_CASE("verdict serialization") {
  auto v = classify(natural_action(symmetric_group(3)));
  CHECK(v.serialize() ==
        "status: AlmostElusive\ncompleteness: proved\ndegenerate: false\ndegree: 3\ngroup_order: 6\n"
        "derangement_classes: 1\nclasses:\n"
        "  - {prime: 2, size: 3, cycle_type: [2,1], fixes: 1}\n"
        "  - {prime: 3, size: 2, cycle_type: [3], fixes: 0}\n");
}
