#include "derange/su3.hpp"

#include <numeric>

#include "derange/perm_group.hpp"

namespace derange {

namespace {

FiniteField square_field(std::uint32_t q) {
  auto [p, f] = prime_power(q);
  if (q < 3 || q > 5) throw Error("U3(q) is constructed for q in {3, 4, 5} only");
  return FiniteField(p, 2 * f);
}

}  // namespace

UnitaryGroup::Vec UnitaryGroup::normalize(Vec v) const {
  for (std::uint32_t i = 0; i < 3; ++i)
    if (v[i]) {
      std::uint32_t s = field_.inv(v[i]);
      for (auto& x : v) x = field_.mul(x, s);
      return v;
    }
  throw Error("zero vector");
}

Point UnitaryGroup::index_of(const Vec& v) const {
  const std::uint32_t Q = field_.q();
  Vec n = normalize(v);
  return code_to_point_[(n[0] * Q + n[1]) * Q + n[2]];
}

std::uint32_t UnitaryGroup::form(const Vec& u, const Vec& v) const {
  const auto& F = field_;
  const std::uint32_t k = F.f() / 2;  // x -> x^q
  std::uint32_t s = F.mul(u[0], F.frobenius(v[2], k));
  s = F.add(s, F.mul(u[1], F.frobenius(v[1], k)));
  return F.add(s, F.mul(u[2], F.frobenius(v[0], k)));
}

bool UnitaryGroup::preserves_form(const Mat& m) const {
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) {
      Vec ei{}, ej{};
      ei[i] = 1;
      ej[j] = 1;
      if (form(m[i], m[j]) != form(ei, ej)) return false;
    }
  return true;
}

Permutation UnitaryGroup::linear(const Mat& m) const {
  const auto& F = field_;
  std::vector<Point> img(points_.size());
  for (std::size_t x = 0; x < points_.size(); ++x) {
    const Vec& v = points_[x];
    Vec w{};
    for (std::uint32_t j = 0; j < 3; ++j)
      for (std::uint32_t i = 0; i < 3; ++i) w[j] = F.add(w[j], F.mul(v[i], m[i][j]));
    img[x] = index_of(w);
  }
  return Permutation(std::move(img));
}

Permutation UnitaryGroup::frobenius(std::uint32_t k) const {
  std::vector<Point> img(points_.size());
  for (std::size_t x = 0; x < points_.size(); ++x) {
    Vec w = points_[x];
    for (auto& c : w) c = field_.frobenius(c, k);
    img[x] = index_of(w);
  }
  return Permutation(std::move(img));
}

UnitaryGroup::UnitaryGroup(std::uint32_t q, std::uint32_t index) : q_(q), index_(index), field_(square_field(q)) {
  const auto& F = field_;
  const std::uint32_t Q = F.q(), p = F.p(), f = F.f() / 2;
  const std::uint32_t d = std::gcd<std::uint32_t>(3, q + 1);
  if ((d * 2 * f) % index) throw Error("index " + std::to_string(index) + " does not divide |Out(U3(q))|");

  code_to_point_.assign(Q * Q * Q, 0);
  for (std::uint32_t a = 0; a < Q; ++a)
    for (std::uint32_t b = 0; b < Q; ++b)
      for (std::uint32_t c = 0; c < Q; ++c) {
        Vec v{a, b, c};
        if (!a && !b && !c) continue;
        if (normalize(v) != v) continue;
        code_to_point_[(a * Q + b) * Q + c] = static_cast<Point>(points_.size());
        points_.push_back(v);
      }

  std::vector<Permutation> gens;
  auto add_linear = [&](const Mat& m) {
    if (!preserves_form(m)) throw Error("internal: matrix does not preserve the form");
    gens.push_back(linear(m));
  };
  // root elements [[1,a,b],[0,1,c],[0,0,1]], one for each a in a GF(p)-basis, and a central one
  std::vector<std::uint32_t> alphas{0, 1};
  for (std::uint32_t i = 1, x = p; i < 2 * f; ++i, x *= p) alphas.push_back(x);
  for (std::uint32_t a : alphas) {
    bool found = false;
    for (std::uint32_t b = 1; b < Q && !found; ++b)
      for (std::uint32_t c = 0; c < Q && !found; ++c) {
        Mat m{{{1, a, b}, {0, 1, c}, {0, 0, 1}}};
        if (a == 0 && c != 0) continue;
        if (preserves_form(m)) {
          add_linear(m);
          found = true;
        }
      }
    if (!found) throw Error("internal: no root element");
  }
  const std::uint32_t lam = F.primitive();
  add_linear({{{lam, 0, 0}, {0, F.pow(lam, q - 1), 0}, {0, 0, F.inv(F.pow(lam, q))}}});
  add_linear({{{0, 0, 1}, {0, F.neg(1), 0}, {1, 0, 0}}});
  g0_ = PermGroup(point_count(), gens);
  BigInt expect = BigInt(q) * q * q * (q * q - 1) * (BigInt(q) * q * q + 1) / d;
  if (g0_.order() != expect) throw Error("internal: U3(" + std::to_string(q) + ") has order " + to_string(g0_.order()));

  // outer automorphisms: diag(1, mu, 1) with mu of order q+1, and the field map x -> x^p
  const Permutation delta = linear({{{1, 0, 0}, {0, F.pow(lam, q - 1), 0}, {0, 0, 1}}});
  const std::uint32_t phi_order = 2 * f;
  if (d == 1) {
    if (index > 1) gens.push_back(frobenius(phi_order / index));
  } else {
    if (index % 3 == 0) gens.push_back(delta);
    if (index % 2 == 0) gens.push_back(frobenius(1));
  }
  group_ = PermGroup(point_count(), std::move(gens));
  if (group_.order() != expect * index) throw Error("internal: extension of U3(" + std::to_string(q) + ") has wrong order");
}

bool UnitaryGroup::isotropic(Point x) const { return form(points_[x], points_[x]) == 0; }

Point UnitaryGroup::isotropic_point() const { return index_of({1, 0, 0}); }
Point UnitaryGroup::nonisotropic_point() const { return index_of({0, 1, 0}); }

std::uint32_t UnitaryGroup::isotropic_count() const {
  std::uint32_t n = 0;
  for (Point x = 0; x < point_count(); ++x) n += isotropic(x);
  return n;
}

TransitiveAction su3_action(std::uint32_t q, Su3Variant v, std::uint32_t index, std::size_t index_cap) {
  UnitaryGroup u(q, index);
  Point x = v == Su3Variant::Isotropic ? u.isotropic_point() : u.nonisotropic_point();
  return coset_action(u.group(), point_stabilizer(u.group(), x), index_cap);
}

}  // namespace derange
