#include "derange/classes.hpp"

#include "derange/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace derange {

const char* to_string(Completeness c) { return c == Completeness::Proved ? "proved" : "probabilistic"; }

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Exhaustive: return "exhaustive";
    case Backend::SymmetricCosets: return "symmetric-cosets";
    case Backend::Randomized: return "randomized";
  }
  return "?";
}

namespace {

bool lex_less(const Permutation& a, const Permutation& b) {
  auto x = a.images(), y = b.images();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// BFS over conjugates, optionally recording the conjugating element of each member.
struct Orbit {
  std::vector<Permutation> members;
  std::vector<Permutation> transporters;
  std::unordered_map<ElementKey, std::uint32_t> index;
};

Orbit conjugation_orbit(const PermGroup& g, const Permutation& x, std::size_t cap, bool with_transporters) {
  Orbit o;
  o.members.push_back(x);
  if (with_transporters) o.transporters.push_back(Permutation::identity(g.degree()));
  o.index.emplace(g.key(x), 0);
  for (std::size_t i = 0; i < o.members.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation y = o.members[i].conjugate_by(s);
      auto [it, inserted] = o.index.emplace(g.key(y), static_cast<std::uint32_t>(o.members.size()));
      if (!inserted) continue;
      if (o.members.size() >= cap) throw Error("conjugacy class exceeds cap " + std::to_string(cap));
      o.members.push_back(std::move(y));
      if (with_transporters) o.transporters.push_back(o.transporters[i] * s);
    }
  }
  return o;
}

// Stabilizer of the orbit's first member, by Schreier generators; stops once
// the order reaches |G| / |orbit|.
PermGroup orbit_stabilizer(const PermGroup& g, const Orbit& o) {
  BigInt target = g.order() / o.members.size();
  PermGroup stab = PermGroup::trivial(g.degree());
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < o.members.size() && stab.order() < target; ++i) {
    for (const auto& s : g.generators()) {
      Permutation y = o.members[i].conjugate_by(s);
      std::uint32_t j = o.index.at(g.key(y));
      Permutation h = o.transporters[i] * s * o.transporters[j].inverse();
      if (h.is_identity() || stab.contains(h)) continue;
      gens.push_back(std::move(h));
      stab = PermGroup(g.degree(), gens, g.base());
      if (stab.order() >= target) break;
    }
  }
  if (stab.order() != target) throw Error("orbit-stabilizer mismatch in centralizer computation");
  return stab;
}

void sort_classes(std::vector<GroupClass>& cs) {
  std::sort(cs.begin(), cs.end(), [](const GroupClass& a, const GroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return lex_less(a.rep, b.rep);
  });
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

BigInt factorial(std::uint32_t n) {
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

ClassList exhaustive(const PermGroup& g, const ClassOptions& opts, bool prime_only) {
  if (g.order() > opts.cap_order)
    throw Error("group order " + to_string(g.order()) + " exceeds exhaustive cap " + to_string(opts.cap_order));
  ClassList out;
  std::unordered_set<ElementKey> seen;
  g.for_each_element([&](const Permutation& x) {
    std::uint64_t ord;
    if (prime_only) {
      ord = x.prime_order();
      if (ord == 0) return;
    } else {
      if (x.is_identity()) return;
      ord = x.order();
    }
    if (seen.count(g.key(x))) return;
    MaterializedClass mc = conjugacy_class(g, x, opts.class_cap);
    out.classes.push_back({mc.least, ord, BigInt(mc.keys.size())});
    for (auto& k : mc.keys) seen.insert(std::move(k));
  });
  sort_classes(out.classes);
  out.backend = Backend::Exhaustive;
  return out;
}

// Classes of G <= Sym(n) meeting the Sym(n)-class of x: orbits of C_Sym(x) on
// the cosets G*t fixed by x. Requires |Sym(n):G| within cap.
ClassList symmetric_cosets(const PermGroup& g, const ClassOptions& opts) {
  const std::uint32_t n = g.degree();
  BigInt index = factorial(n) / g.order();
  if (index > opts.cap_index) throw Error("index in Sym(n) exceeds cap");
  TransitiveAction sa(symmetric_group(n), g, opts.cap_index);
  ClassList out;
  out.backend = Backend::SymmetricCosets;
  for (std::uint32_t r : primes_up_to(n)) {
    for (std::uint32_t d = 1; d * r <= n; ++d) {
      std::vector<std::vector<Point>> cycles;
      for (std::uint32_t j = 0; j < d; ++j) {
        std::vector<Point> c;
        for (std::uint32_t k = 0; k < r; ++k) c.push_back(j * r + k + 1);
        cycles.push_back(std::move(c));
      }
      Permutation x = Permutation::from_cycles(n, cycles);
      std::vector<Permutation> cgens;
      for (const auto& c : cycles) cgens.push_back(Permutation::from_cycles(n, {c}));
      for (std::uint32_t j = 0; j + 1 < d; ++j) {
        std::vector<std::vector<Point>> sw;
        for (std::uint32_t k = 0; k < r; ++k) sw.push_back({cycles[j][k], cycles[j + 1][k]});
        cgens.push_back(Permutation::from_cycles(n, sw));
      }
      std::uint32_t nfix = n - d * r;
      if (nfix >= 2) {
        std::vector<Point> rest;
        for (Point p = d * r + 1; p <= n; ++p) rest.push_back(p);
        cgens.push_back(Permutation::from_cycles(n, {rest}));
        cgens.push_back(Permutation::from_cycles(n, {{rest[0], rest[1]}}));
      }
      BigInt csize = factorial(d) * factorial(nfix);
      for (std::uint32_t j = 0; j < d; ++j) csize *= r;

      std::vector<char> fixed(sa.point_count(), 0), done(sa.point_count(), 0);
      for (std::uint32_t i = 0; i < sa.point_count(); ++i) fixed[i] = sa.coset_of(sa.coset_rep(i) * x) == i;
      for (std::uint32_t i = 0; i < sa.point_count(); ++i) {
        if (!fixed[i] || done[i]) continue;
        std::vector<std::uint32_t> orb{i};
        done[i] = 1;
        for (std::size_t a = 0; a < orb.size(); ++a)
          for (const auto& c : cgens) {
            std::uint32_t b = sa.coset_of(sa.coset_rep(orb[a]) * c);
            if (!done[b]) {
              done[b] = 1;
              orb.push_back(b);
            }
          }
        const Permutation& t = sa.coset_rep(i);
        Permutation y = t * x * t.inverse();
        if (!g.contains(y)) throw Error("internal: coset representative does not conjugate into the group");
        BigInt num = g.order() * orb.size();
        if (num % csize != 0) throw Error("internal: non-integral class size");
        out.classes.push_back({std::move(y), r, num / csize});
      }
    }
  }
  sort_classes(out.classes);
  return out;
}

ClassList randomized(const PermGroup& g, const ClassOptions& opts) {
  ClassList out;
  out.backend = Backend::Randomized;
  out.completeness = Completeness::Probabilistic;
  std::mt19937_64 rng(opts.seed);
  std::unordered_set<ElementKey> seen;
  // classes too large to materialize are told apart by (prime, cycle type) only
  std::set<std::pair<std::uint64_t, std::string>> fingerprints;
  std::size_t fruitless = 0;
  while (fruitless < opts.fruitless_samples) {
    Permutation x = g.random_element(rng);
    bool found = false;
    std::uint64_t m = x.is_identity() ? 1 : x.order();
    for (std::uint64_t r = 2; r <= m; ++r) {
      if (m % r != 0) continue;
      bool prime = true;
      for (std::uint64_t q = 2; q * q <= r; ++q)
        if (r % q == 0) prime = false;
      if (!prime) continue;
      Permutation y = x.pow(static_cast<long long>(m / r));
      if (seen.count(g.key(y))) continue;
      std::pair<std::uint64_t, std::string> fp{r, y.cycle_type().str()};
      if (fingerprints.count(fp)) continue;
      MaterializedClass mc;
      try {
        mc = conjugacy_class(g, y, opts.class_cap);
      } catch (const Error&) {
        fingerprints.insert(fp);
        out.classes.push_back({y, r, BigInt(0)});  // size unknown
        found = true;
        continue;
      }
      out.classes.push_back({mc.least, r, BigInt(mc.keys.size())});
      for (auto& k : mc.keys) seen.insert(std::move(k));
      found = true;
    }
    fruitless = found ? 0 : fruitless + 1;
  }
  sort_classes(out.classes);
  return out;
}

}  // namespace

MaterializedClass conjugacy_class(const PermGroup& g, const Permutation& x, std::size_t cap) {
  Orbit o = conjugation_orbit(g, x, cap, false);
  MaterializedClass mc;
  mc.least = o.members[0];
  for (const auto& y : o.members)
    if (lex_less(y, mc.least)) mc.least = y;
  mc.keys.reserve(o.index.size());
  for (auto& [k, v] : o.index) mc.keys.push_back(k);
  return mc;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, std::size_t cap) {
  return orbit_stabilizer(g, conjugation_orbit(g, x, cap, true));
}

PermGroup cyclic_normalizer(const PermGroup& g, const Permutation& x, std::size_t cap) {
  Orbit o = conjugation_orbit(g, x, cap, true);
  PermGroup c = orbit_stabilizer(g, o);
  std::vector<Permutation> gens = c.generators();
  std::uint64_t m = x.order();
  for (std::uint64_t k = 2; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    auto it = o.index.find(g.key(x.pow(static_cast<long long>(k))));
    if (it != o.index.end()) gens.push_back(o.transporters[it->second]);
  }
  return PermGroup(g.degree(), std::move(gens), g.base());
}

ClassList prime_order_classes(const PermGroup& g, const ClassOptions& opts) {
  Backend b = opts.backend;
  if (b == Backend::Auto) {
    if (g.order() <= opts.cap_order) b = Backend::Exhaustive;
    else if (g.degree() <= 64 && factorial(g.degree()) / g.order() <= opts.cap_index) b = Backend::SymmetricCosets;
    else b = Backend::Randomized;
  }
  if (b == Backend::Randomized && opts.require_complete)
    throw Error("group of order " + to_string(g.order()) + " is beyond the complete backends");
  switch (b) {
    case Backend::Exhaustive: return exhaustive(g, opts, true);
    case Backend::SymmetricCosets: return symmetric_cosets(g, opts);
    default: return randomized(g, opts);
  }
}

ClassList all_classes(const PermGroup& g, const ClassOptions& opts) { return exhaustive(g, opts, false); }

ActionClasses on_action(const TransitiveAction& a, const ClassList& cl) {
  ActionClasses out;
  out.completeness = cl.completeness;
  out.backend = cl.backend;
  for (const auto& c : cl.classes) {
    if (c.order == 0 || !is_prime_u32(static_cast<std::uint32_t>(c.order))) continue;
    PrimeOrderClass pc;
    pc.fixes = a.fixed_points(c.rep);
    pc.prime = static_cast<std::uint32_t>(c.order);
    pc.size = c.size;
    pc.cycle_type = c.rep.cycle_type();
    pc.rep = c.rep;
    out.classes.push_back(std::move(pc));
  }
  return out;
}

ActionClasses prime_order_classes(const TransitiveAction& a, const ClassOptions& opts) {
  return on_action(a, prime_order_classes(a.group(), opts));
}

BigInt fixes_by_intersection(const TransitiveAction& a, const Permutation& x, std::size_t cap) {
  const PermGroup& g = a.group();
  MaterializedClass mc = conjugacy_class(g, x, cap);
  std::unordered_set<ElementKey> cls(mc.keys.begin(), mc.keys.end());
  if (a.stabilizer().order() > cap) throw Error("stabilizer too large to enumerate");
  std::size_t meet = 0;
  a.stabilizer().for_each_element([&](const Permutation& h) { meet += cls.count(g.key(h)); });
  BigInt num = BigInt(a.point_count()) * meet;
  if (num % mc.keys.size() != 0) throw Error("internal: non-integral fixed-point count");
  return num / mc.keys.size();
}

}  // namespace derange
