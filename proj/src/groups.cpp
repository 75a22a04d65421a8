#include "derange/groups.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "derange/classes.hpp"

namespace derange {

namespace {

Permutation cycle_on(std::uint32_t n, std::uint32_t first, std::uint32_t len) {
  std::vector<Point> c;
  for (std::uint32_t i = 0; i < len; ++i) c.push_back(first + i);
  return Permutation::from_cycles(n, {c});
}

// Generators of Sym on the consecutive 1-indexed points first..first+len-1.
void add_sym_gens(std::vector<Permutation>& gens, std::uint32_t n, std::uint32_t first, std::uint32_t len) {
  if (len < 2) return;
  gens.push_back(cycle_on(n, first, len));
  if (len > 2) gens.push_back(Permutation::from_cycles(n, {{first, first + 1}}));
}

}  // namespace

PermGroup symmetric_group(std::uint32_t n) {
  if (n == 0) throw Error("degree 0");
  std::vector<Permutation> gens;
  add_sym_gens(gens, n, 1, n);
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::uint32_t n) { return even_part(symmetric_group(n)); }

PermGroup kset_stabilizer(std::uint32_t n, std::uint32_t k, bool alternating) {
  if (k == 0 || k >= n) throw Error("k-set size must satisfy 1 <= k < n");
  std::vector<Permutation> gens;
  add_sym_gens(gens, n, 1, k);
  add_sym_gens(gens, n, k + 1, n - k);
  PermGroup h(n, std::move(gens));
  return alternating ? even_part(h) : h;
}

PermGroup partition_stabilizer(std::uint32_t n, std::uint32_t a, std::uint32_t b, bool alternating) {
  if (a < 2 || b < 2 || a * b != n) throw Error("partition requires a, b >= 2 and ab = n");
  std::vector<Permutation> gens;
  add_sym_gens(gens, n, 1, a);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = (i + a) % n;
  gens.emplace_back(img);
  if (b > 2) {
    std::vector<std::vector<Point>> sw;
    for (std::uint32_t i = 1; i <= a; ++i) sw.push_back({i, i + a});
    gens.push_back(Permutation::from_cycles(n, sw));
  }
  PermGroup h(n, std::move(gens));
  return alternating ? even_part(h) : h;
}

Extension Extension::parse(const std::string& text) {
  Extension e;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.empty() || tok == "G0" || tok == "g0") continue;
    if (tok == "pgl" || tok == "PGL") {
      e.gens.push_back({1, 0});
      continue;
    }
    if (tok == "full") {
      e.gens.push_back({1, 0});
      e.gens.push_back({0, 1});
      continue;
    }
    OutElement o;
    std::string rest = tok;
    if (rest.rfind("delta", 0) == 0) {
      o.delta = 1;
      rest = rest.substr(5);
    }
    if (rest.rfind("phi", 0) == 0) {
      rest = rest.substr(3);
      o.phi = 1;
      if (!rest.empty()) {
        for (char c : rest)
          if (c < '0' || c > '9') throw Error("bad extension token '" + tok + "'");
        o.phi = static_cast<std::uint32_t>(std::stoul(rest));
        if (o.phi == 0) throw Error("bad extension token '" + tok + "'");
      }
      rest.clear();
    }
    if (!rest.empty() || (o.delta == 0 && o.phi == 0)) throw Error("bad extension token '" + tok + "'");
    e.gens.push_back(o);
  }
  return e;
}

std::string Extension::str() const {
  if (gens.empty()) return "G0";
  std::string s;
  for (const auto& g : gens) {
    if (!s.empty()) s += '.';
    if (g.delta) s += "delta";
    if (g.phi) s += "phi" + (g.phi > 1 ? std::to_string(g.phi) : std::string());
  }
  return s;
}

std::vector<OutElement> out_closure(const Extension& ext, std::uint32_t q) {
  auto [p, f] = prime_power(q);
  if (p == 0) throw Error(std::to_string(q) + " is not a prime power");
  const std::uint32_t d = q % 2 ? 2 : 1;
  for (const auto& g : ext.gens) {
    if (g.delta && d == 1) throw Error("delta is inner when q is even");
    if (g.phi >= f && g.phi != 0) throw Error("field automorphism exponent must be below f = " + std::to_string(f));
  }
  std::vector<OutElement> out{{0, 0}};
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen{{0, 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : ext.gens) {
      OutElement e{(out[i].delta + g.delta) % d, (out[i].phi + g.phi) % f};
      if (seen.insert({e.delta, e.phi}).second) out.push_back(e);
    }
  return out;
}

ProjectiveGroup::ProjectiveGroup(std::uint32_t q, const Extension& ext)
    : field_([q] {
        auto [p, f] = prime_power(q);
        if (p == 0) throw Error(std::to_string(q) + " is not a prime power");
        if (q < 4) throw Error("projective groups need q >= 4");
        return FiniteField(p, f);
      }()),
      d_(q % 2 ? 2 : 1),
      ext_(ext) {
  const std::uint32_t p = field_.p(), f = field_.f();
  rank_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto c = field_.coeffs(a);
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < f; ++i) r = r * p + c[i];
    rank_[a] = r;
  }
  out_elements_ = out_closure(ext_, q);

  const std::uint32_t mu = field_.primitive();
  const std::uint32_t mu2 = field_.mul(mu, mu);
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < f; ++i) gens.push_back(mobius(1, 0, field_.pow(mu2, i), 1));
  gens.push_back(mobius(mu2, 0, 0, 1));
  gens.push_back(mobius(0, 1, field_.neg(1), 0));
  g0_ = PermGroup(q + 1, gens);
  BigInt expect = BigInt(q) * (BigInt(q) * q - 1) / d_;
  if (g0_.order() != expect) throw Error("internal: L2(" + std::to_string(q) + ") has wrong order");
  for (const auto& g : ext_.gens) gens.push_back(outer(g));
  group_ = PermGroup(q + 1, std::move(gens));
  if (group_.order() != expect * out_order()) throw Error("internal: extension has wrong order");
}

std::string ProjectiveGroup::name() const {
  return "L2(" + std::to_string(q()) + ")" + (ext_.gens.empty() ? "" : "." + ext_.str());
}

Permutation ProjectiveGroup::mobius(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t dd,
                                   std::uint32_t k) const {
  const FiniteField& F = field_;
  if (F.sub(F.mul(a, dd), F.mul(b, c)) == 0) throw Error("singular matrix");
  std::vector<Point> img(q() + 1);
  img[0] = b == 0 ? 0 : point_of(F.mul(a, F.inv(b)));
  for (std::uint32_t x = 0; x < q(); ++x) {
    std::uint32_t s = F.frobenius(x, k);
    std::uint32_t num = F.add(F.mul(a, s), c), den = F.add(F.mul(b, s), dd);
    img[point_of(x)] = den == 0 ? 0 : point_of(F.mul(num, F.inv(den)));
  }
  return Permutation(std::move(img));
}

Permutation ProjectiveGroup::outer(const OutElement& e) const {
  return mobius(field_.pow(field_.primitive(), e.delta), 0, 0, 1, e.phi);
}

const char* to_string(L2Type t) {
  switch (t) {
    case L2Type::P1: return "P1";
    case L2Type::TorusSplit: return "torus+";
    case L2Type::TorusNonsplit: return "torus-";
    case L2Type::Subfield: return "subfield";
  }
  return "?";
}

PermGroup l2_subgroup(const ProjectiveGroup& g, L2Type type, std::uint32_t q0) {
  const PermGroup& G = g.group();
  switch (type) {
    case L2Type::P1: return point_stabilizer(G, 0);
    case L2Type::TorusSplit: return setwise_stabilizer(G, {0, g.point_of(0)});
    case L2Type::TorusNonsplit: {
      std::uint32_t m = (g.q() + 1) / g.d();
      std::mt19937_64 rng(1);
      for (int tries = 0; tries < 100000; ++tries) {
        Permutation t = g.socle().random_element(rng);
        if (t.fixed_point_count() != 0 || t.order() != m) continue;
        return cyclic_normalizer(G, t);
      }
      throw Error("no irreducible torus element found");
    }
    case L2Type::Subfield: {
      const FiniteField& F = g.field();
      auto [p0, e] = prime_power(q0);
      if (p0 != F.p() || e == 0 || F.f() % e != 0 || e == F.f())
        throw Error("q0 = " + std::to_string(q0) + " is not a proper subfield order of q = " + std::to_string(g.q()));
      std::vector<Point> pts{0};
      for (std::uint32_t a : F.subfield(e)) pts.push_back(g.point_of(a));
      return setwise_stabilizer(G, pts);
    }
  }
  throw Error("unknown subgroup type");
}

PermGroup agl1(std::uint32_t p) {
  if (!is_prime_u32(p)) throw Error("agl1 needs a prime");
  FiniteField F(p, 1);
  std::vector<Point> shift(p), scale(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = F.mul(F.primitive(), x);
  }
  return PermGroup(p, {Permutation(shift), Permutation(scale)});
}

PermGroup gl2_vectors(std::uint32_t n, bool affine) {
  std::uint32_t size = 1u << n;
  std::uint32_t off = affine ? 0 : 1;
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Point> img(size - off);
      for (std::uint32_t v = off; v < size; ++v) img[v - off] = ((v >> i & 1) ? v ^ (1u << j) : v) - off;
      gens.emplace_back(std::move(img));
    }
  if (affine) {
    std::vector<Point> img(size);
    for (std::uint32_t v = 0; v < size; ++v) img[v] = v ^ 1u;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(size - off, std::move(gens));
}

const Mathieu11& m11() {
  static const Mathieu11 m = [] {
    Mathieu11 r;
    r.degree11 = PermGroup(11, {Permutation::from_cycles(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                                Permutation::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
    // an L2(11) inside it, found once by random search for a (2,3,11) pair
    r.l2_11 = PermGroup(11, {Permutation::from_cycles(11, {{1, 4}, {2, 8}, {3, 9}, {5, 11}}),
                             Permutation::from_cycles(11, {{1, 3, 11}, {2, 5, 10}, {6, 9, 7}})});
    if (r.degree11.order() != 7920 || r.l2_11.order() != 660) throw Error("internal: bad M11 data");
    r.degree12 = PermGroup(12, coset_action(r.degree11, r.l2_11).image_generators());
    if (r.degree12.order() != 7920) throw Error("internal: degree-12 action is not faithful");
    return r;
  }();
  return m;
}

}  // namespace derange
