#include "doctest.h"

#include "derange/coset_action.hpp"
#include "derange/perm_group.hpp"

#include <set>

using namespace derange;

namespace {

std::vector<Point> vec(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

PermGroup sym(std::uint32_t n) {
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(cyc), Permutation::from_cycles(n, {{1, 2}})});
}

// Brute-force closure; only for tiny groups.
std::set<std::vector<Point>> closure(const std::vector<Permutation>& gens, std::uint32_t n) {
  std::set<std::vector<Point>> seen{vec(Permutation::identity(n))};
  std::vector<Permutation> todo{Permutation::identity(n)};
  while (!todo.empty()) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (seen.insert(vec(y)).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto a = Permutation::from_cycles(5, {{1, 2, 3}});
  auto b = Permutation::from_cycles(5, {{3, 4}});
  CHECK((a * b)[0] == 1);
  CHECK((a * b)[2] == 0);
  CHECK(a.order() == 3);
  CHECK(a.prime_order() == 3);
  CHECK(Permutation::from_cycles(6, {{1, 2}, {3, 4, 5}}).prime_order() == 0);
  CHECK(a.cycle_type().str() == "[3,1^2]");
  CHECK(a.inverse() * a == Permutation::identity(5));
  auto c = a.conjugate_by(b);
  CHECK(c == b.inverse() * a * b);
  CHECK(!b.is_even());
  CHECK(a.pow(-1) == a.inverse());
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), Error);
}

TEST_CASE("stabilizer chain orders agree with closure") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    auto g = sym(n);
    CHECK(g.order() == BigInt(closure(g.generators(), n).size()));
  }
  auto s5 = sym(5);
  CHECK(s5.order() == 120);
  auto a5 = even_part(s5);
  CHECK(a5.order() == 60);
  CHECK(a5.contains(Permutation::from_cycles(5, {{1, 2, 3}})));
  CHECK(!a5.contains(Permutation::from_cycles(5, {{1, 2}})));
  CHECK(point_stabilizer(s5, 3).order() == 24);
  CHECK(setwise_stabilizer(sym(4), {0, 1}).order() == 4);
  CHECK(setwise_stabilizer(s5, {0, 1, 2}).order() == 12);
  CHECK(setwise_stabilizer(a5, {0, 1}).order() == 6);
}

TEST_CASE("element enumeration visits each element once") {
  auto g = even_part(sym(5));
  std::set<std::vector<Point>> seen;
  g.for_each_element([&](const Permutation& x) { seen.insert(vec(x)); });
  CHECK(seen.size() == 60);
  CHECK(seen == closure(g.generators(), 5));
}

TEST_CASE("coset action of S5 on 2-sets") {
  auto s5 = sym(5);
  auto h = setwise_stabilizer(s5, {0, 1});
  auto act = coset_action(s5, h);
  CHECK(act.point_count() == 10);
  auto img = build_group(act.image_generators());
  CHECK(img.order() == 120);
  CHECK(img.is_transitive());
  // a 5-cycle fixes no 2-set, a transposition fixes 4 of them
  CHECK(act.fixed_points(Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})) == 0);
  CHECK(act.fixed_points(Permutation::from_cycles(5, {{1, 2}})) == 4);
  // action is a homomorphism
  auto x = Permutation::from_cycles(5, {{1, 3, 5}});
  auto y = Permutation::from_cycles(5, {{2, 4}});
  CHECK(act.act(x * y) == act.act(x) * act.act(y));
}
