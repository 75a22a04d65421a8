#include "derange/symshapes.hpp"

#include "derange/finite_field.hpp"
#include "derange/numtheory.hpp"

namespace derange {

CycleType PrimeShape::cycle_type() const {
  CycleType c;
  c.parts[r] = d;
  if (n > d * r) c.parts[1] = n - d * r;
  return c;
}

Permutation PrimeShape::representative() const {
  std::vector<std::vector<Point>> cycles;
  for (std::uint32_t j = 0; j < d; ++j) {
    std::vector<Point> c;
    for (std::uint32_t i = 0; i < r; ++i) c.push_back(j * r + i + 1);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(n, cycles);
}

std::vector<PrimeShape> prime_shapes(std::uint32_t n) {
  std::vector<PrimeShape> out;
  for (std::uint32_t r = 2; r <= n; ++r) {
    if (!is_prime_u32(r)) continue;
    for (std::uint32_t d = 1; d * r <= n; ++d) out.push_back({n, r, d});
  }
  return out;
}

bool fixes_kset(const PrimeShape& s, std::uint32_t k) {
  std::uint32_t fixed = s.n - s.d * s.r;
  for (std::uint32_t alpha = 0; alpha <= s.d && alpha * s.r <= k; ++alpha)
    if (k - alpha * s.r <= fixed) return true;
  return false;
}

bool fixes_partition(const PrimeShape& s, std::uint32_t a, std::uint32_t b) {
  // s block-orbits of length r use s*a of the r-cycles; the rest sit inside fixed blocks
  for (std::uint32_t t = 0; t * a <= s.d && t * s.r <= b; ++t)
    if (s.d - t * a <= (b - t * s.r) * (a / s.r)) return true;
  return false;
}

const char* to_string(AltSplit s) {
  switch (s) {
    case AltSplit::NotInAlt: return "NotInAlt";
    case AltSplit::OneClass: return "OneClass";
    case AltSplit::TwoClasses: return "TwoClasses";
  }
  return "?";
}

AltSplit alt_class_splits(const PrimeShape& s) {
  if (s.r == 2 && s.d % 2 == 1) return AltSplit::NotInAlt;
  if (s.r != 2 && s.d == 1 && s.n - s.r <= 1) return AltSplit::TwoClasses;
  return AltSplit::OneClass;
}

const char* to_string(NatGroup g) { return g == NatGroup::Sym ? "S" : "A"; }

namespace {

std::string shape_str(std::uint32_t n, std::uint32_t r, std::uint32_t d) { return PrimeShape{n, r, d}.cycle_type().str(); }

}  // namespace

SymbolicVerdict classify_natural(std::uint32_t n, NatGroup g) {
  if (n < 5) throw Error("natural classification needs n >= 5");
  auto rec = recognize(n);
  if (rec.prime_power) {
    auto [r, a] = *rec.prime_power;
    if (g == NatGroup::Sym || a >= 2) return {true, shape_str(n, static_cast<std::uint32_t>(r), n / static_cast<std::uint32_t>(r))};
    return {};
  }
  if (g == NatGroup::Alt && n % 2 == 0) {
    auto half = recognize(n / 2);
    if (half.prime_power && half.prime_power->first != 2) {
      auto r = static_cast<std::uint32_t>(half.prime_power->first);
      return {true, shape_str(n, r, n / r)};
    }
  }
  return {};
}

SymbolicVerdict classify_ksets(std::uint32_t n, std::uint32_t k, NatGroup g) {
  if (n < 5 || k < 2 || 2 * k >= n) throw Error("k-set classification needs n >= 5 and 2 <= k < n/2");
  if (k >= 4) return {};
  if (k == 3) {
    if (n == 9) return {true, shape_str(9, 7, 1)};
    if (n == 10 && g == NatGroup::Alt) return {true, shape_str(10, 5, 2)};
    return {};
  }
  if (n == 9) return {true, shape_str(9, 3, 3)};
  if (g == NatGroup::Sym) {
    if (is_fermat_prime(n)) return {true, shape_str(n, n, 1)};
    if (is_mersenne_prime(n - 1)) return {true, shape_str(n, n - 1, 1)};
  }
  return {};
}

SymbolicVerdict classify_imprimitive(std::uint32_t n, std::uint32_t a, std::uint32_t b, NatGroup g) {
  if (a < 2 || b < 2 || a * b != n) throw Error("partition classification needs a, b >= 2 and ab = n");
  if (n == 6 && a == 3 && b == 2 && g == NatGroup::Sym) return {true, shape_str(6, 5, 1)};
  return {};
}

namespace {

struct SmallCase {
  std::uint32_t n;
  const char* group;
  const char* action;
  bool ae;
  const char* shape;
};

// Primitive, non-natural point stabilizers for n <= 10 (socle A_n).
const SmallCase kSmallCases[] = {
    {5, "A", "D10", true, "[3,1^2]"},
    {5, "S", "AGL1(5)", false, ""},
    {6, "A", "L2(5)", true, "[3,1^3]"},
    {6, "S", "PGL2(5)", false, ""},
    {6, "PGL2(9)", "P1", false, ""},
    {6, "PGL2(9)", "torus+", false, ""},
    {6, "PGL2(9)", "torus-", true, "3"},
    {6, "M10", "P1", true, "5"},
    {6, "M10", "torus+", false, ""},
    {6, "M10", "torus-", true, "3"},
    {6, "PGammaL2(9)", "P1", false, ""},
    {6, "PGammaL2(9)", "torus+", false, ""},
    {6, "PGammaL2(9)", "torus-", false, ""},
    {7, "S", "AGL1(7)", false, ""},
    {7, "A", "L3(2)", false, ""},
    {8, "S", "PGL2(7)", false, ""},
    {8, "A", "AGL3(2)", false, ""},
    {9, "A", "PGammaL2(8)", false, ""},
};

}  // namespace

std::vector<Table1Row> scan_table1_all(std::uint32_t n_max) {
  if (n_max < 5) throw Error("n_max must be at least 5");
  std::vector<Table1Row> rows;
  for (std::uint32_t n = 5; n <= n_max; ++n) {
    for (NatGroup g : {NatGroup::Sym, NatGroup::Alt}) {
      auto v = classify_natural(n, g);
      rows.push_back({n, to_string(g), "natural", v.ae, v.shape});
      for (std::uint32_t k = 2; 2 * k < n; ++k) {
        v = classify_ksets(n, k, g);
        rows.push_back({n, to_string(g), "kset:" + std::to_string(k), v.ae, v.shape});
      }
      for (std::uint32_t a = 2; a < n; ++a) {
        if (n % a) continue;
        v = classify_imprimitive(n, a, n / a, g);
        rows.push_back({n, to_string(g), "part:" + std::to_string(a) + "x" + std::to_string(n / a), v.ae, v.shape});
      }
    }
    for (const auto& c : kSmallCases)
      if (c.n == n) rows.push_back({c.n, c.group, c.action, c.ae, c.shape});
  }
  return rows;
}

std::vector<Table1Row> scan_table1(std::uint32_t n_max) {
  std::vector<Table1Row> out;
  for (auto& r : scan_table1_all(n_max))
    if (r.ae) out.push_back(std::move(r));
  return out;
}

std::string tsv_header() { return "n\tgroup\taction\tverdict\tshape"; }

std::string to_tsv(const Table1Row& r) {
  return std::to_string(r.n) + "\t" + r.group + "\t" + r.action + "\t" + (r.ae ? "AE" : "notAE") + "\t" +
         (r.shape.empty() ? "-" : r.shape);
}

}  // namespace derange
