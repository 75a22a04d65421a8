#include "doctest.h"

#include "derange/classes.hpp"

#include <map>

using namespace derange;

namespace {

PermGroup sym(std::uint32_t n) {
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(cyc), Permutation::from_cycles(n, {{1, 2}})});
}

std::map<std::pair<std::uint64_t, std::string>, BigInt> by_shape(const ClassList& cl) {
  std::map<std::pair<std::uint64_t, std::string>, BigInt> m;
  for (const auto& c : cl.classes) m[{c.order, c.rep.cycle_type().str()}] += c.size;
  return m;
}

}  // namespace

TEST_CASE("S3 on 3 points") {
  auto a = natural_action(sym(3));
  auto ac = prime_order_classes(a);
  REQUIRE(ac.classes.size() == 2);
  CHECK(ac.classes[0].prime == 2);
  CHECK(ac.classes[0].fixes == 1);
  CHECK(ac.classes[1].prime == 3);
  CHECK(ac.classes[1].fixes == 0);
  CHECK(ac.completeness == Completeness::Proved);
}

TEST_CASE("class sizes sum to the prime-order element count") {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    for (bool alt : {false, true}) {
      auto g = alt ? even_part(sym(n)) : sym(n);
      std::size_t prime_elems = 0;
      g.for_each_element([&](const Permutation& x) { prime_elems += x.prime_order() != 0; });
      BigInt total = 0;
      for (const auto& c : prime_order_classes(g).classes) total += c.size;
      CHECK(total == prime_elems);
      BigInt all = 0;
      for (const auto& c : all_classes(g).classes) all += c.size;
      CHECK(all == g.order() - 1);
    }
  }
}

TEST_CASE("symmetric-cosets backend agrees with exhaustive") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    for (bool alt : {false, true}) {
      auto g = alt ? even_part(sym(n)) : sym(n);
      ClassOptions ex, sc;
      ex.backend = Backend::Exhaustive;
      sc.backend = Backend::SymmetricCosets;
      auto a = prime_order_classes(g, ex);
      auto b = prime_order_classes(g, sc);
      CHECK(a.classes.size() == b.classes.size());
      CHECK(by_shape(a) == by_shape(b));
    }
  }
  // a non-normal subgroup: S3 x S3 inside S6
  PermGroup h(6, {Permutation::from_cycles(6, {{1, 2, 3}}), Permutation::from_cycles(6, {{1, 2}}),
                  Permutation::from_cycles(6, {{4, 5, 6}}), Permutation::from_cycles(6, {{4, 5}})});
  ClassOptions ex, sc;
  ex.backend = Backend::Exhaustive;
  sc.backend = Backend::SymmetricCosets;
  auto a = prime_order_classes(h, ex);
  auto b = prime_order_classes(h, sc);
  CHECK(a.classes.size() == b.classes.size());
  CHECK(by_shape(a) == by_shape(b));
}

TEST_CASE("randomized backend finds all classes of a small group and flags itself") {
  ClassOptions opts;
  opts.backend = Backend::Randomized;
  opts.fruitless_samples = 500;
  auto r = prime_order_classes(sym(6), opts);
  CHECK(r.completeness == Completeness::Probabilistic);
  CHECK(by_shape(r) == by_shape(prime_order_classes(sym(6))));
  opts.require_complete = true;
  CHECK_THROWS_AS(prime_order_classes(sym(6), opts), Error);
}

TEST_CASE("centralizer and class sizes satisfy orbit-stabilizer") {
  auto g = sym(6);
  for (const auto& c : all_classes(g).classes) {
    auto cen = centralizer(g, c.rep);
    CHECK(cen.order() * c.size == g.order());
    for (const auto& z : cen.generators()) CHECK(c.rep.conjugate_by(z) == c.rep);
  }
  auto x = Permutation::from_cycles(6, {{1, 2, 3, 4, 5}});
  CHECK(cyclic_normalizer(g, x).order() == 20);
}

TEST_CASE("direct fixed points equal the intersection formula") {
  auto s5 = sym(5);
  for (auto h : {setwise_stabilizer(s5, {0, 1}), setwise_stabilizer(s5, {0, 1, 2}), point_stabilizer(s5, 2),
                 PermGroup(5, {Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})})}) {
    auto a = coset_action(s5, h);
    for (const auto& c : prime_order_classes(a).classes) CHECK(BigInt(c.fixes) == fixes_by_intersection(a, c.rep));
  }
}

TEST_CASE("class representative is the least element") {
  auto cl = prime_order_classes(sym(4));
  for (const auto& c : cl.classes) {
    auto mc = conjugacy_class(sym(4), c.rep);
    CHECK(mc.least == c.rep);
  }
  CHECK(cl.classes[0].rep == Permutation::from_cycles(4, {{3, 4}}));
}
