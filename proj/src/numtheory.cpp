#include "derange/numtheory.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <map>
#include <random>
#include <sstream>

namespace derange {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool fits_u64(const BigInt& n) { return n >= 0 && msb(n) < 64; }
u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += 128;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt rho_big(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (BigInt c = 1;; ++c) {
    BigInt x = 2, y = 2, g = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (g != n) return g;
  }
}

void factor_rec(const BigInt& n, std::map<BigInt, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = fits_u64(n) ? BigInt(rho_u64(static_cast<u64>(n))) : rho_big(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

std::vector<bool> sieve(u64 n) {
  std::vector<bool> p(n + 1, true);
  p[0] = false;
  if (n >= 1) p[1] = false;
  for (u64 i = 2; i * i <= n; ++i)
    if (p[i])
      for (u64 j = i * i; j <= n; j += i) p[j] = false;
  return p;
}

int mobius(std::uint32_t n) {
  int m = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(static_cast<u64>(n));
  std::mt19937_64 rng(12345);
  return boost::multiprecision::miller_rabin_test(n, 40, rng);
}

std::vector<std::pair<BigInt, std::uint32_t>> factor(BigInt n) {
  if (n < 1) throw Error("factor needs a positive integer");
  std::map<BigInt, std::uint32_t> out;
  for (std::uint32_t p = 2; p < 1000 && BigInt(p) * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  factor_rec(n, out);
  return {out.begin(), out.end()};
}

FactoredInteger FactoredInteger::of(const BigInt& n) {
  FactoredInteger f;
  f.value = n;
  f.factors = factor(n);
  return f;
}

FactoredInteger FactoredInteger::parse(const std::string& text) {
  std::map<BigInt, std::uint32_t> acc;
  std::stringstream ss(text);
  std::string term;
  bool any = false;
  while (std::getline(ss, term, '*')) {
    term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
    if (term.empty()) throw Error("empty factor in '" + text + "'");
    std::string base = term, exp = "1";
    if (auto pos = term.find('^'); pos != std::string::npos) {
      base = term.substr(0, pos);
      exp = term.substr(pos + 1);
    }
    for (const auto& part : {base, exp})
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw Error("malformed factorization '" + text + "'");
    BigInt b(base);
    std::uint32_t e = static_cast<std::uint32_t>(std::stoul(exp));
    if (b < 1) throw Error("malformed factorization '" + text + "'");
    for (const auto& [p, k] : factor(b)) acc[p] += k * e;
    any = true;
  }
  if (!any) throw Error("empty factorization");
  FactoredInteger f;
  f.factors.assign(acc.begin(), acc.end());
  f.value = f.product();
  return f;
}

BigInt FactoredInteger::product() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::set<BigInt> FactoredInteger::primes() const {
  std::set<BigInt> s;
  for (const auto& [p, e] : factors) s.insert(p);
  return s;
}

std::string FactoredInteger::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : factors) {
    if (!s.empty()) s += '*';
    s += p.str();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

BigInt ipow(const BigInt& b, std::uint32_t e) { return boost::multiprecision::pow(b, e); }

BigInt iroot(const BigInt& n, std::uint32_t k) {
  if (n < 0 || k == 0) throw Error("iroot domain");
  if (n < 2 || k == 1) return n;
  BigInt lo = 0, hi = BigInt(1) << (msb(n) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= n) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

BigInt cyclotomic_value(std::uint32_t n, const BigInt& q) {
  BigInt num = 1, den = 1;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) num *= ipow(q, d) - 1;
    else if (mu == -1) den *= ipow(q, d) - 1;
  }
  return num / den;
}

std::uint64_t mult_order_mod(const BigInt& q, const BigInt& r) {
  if (q % r == 0) throw Error("order undefined: r divides q");
  BigInt ord = r - 1;
  for (const auto& [p, e] : factor(r - 1)) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (boost::multiprecision::powm(q, ord / p, r) == 1) ord /= p;
      else break;
    }
  }
  return static_cast<std::uint64_t>(ord);
}

std::vector<PowerPlusOne> solve_power_plus_one(std::uint64_t r_max, std::uint64_t s_max, std::uint32_t m_max,
                                               std::uint32_t n_max) {
  std::vector<PowerPlusOne> out;
  auto pr = sieve(r_max);
  for (u64 r = 2; r <= r_max; ++r) {
    if (!pr[r]) continue;
    BigInt rm = 1;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
      rm *= r;
      BigInt v = rm + 1;
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        BigInt s = iroot(v, n);
        if (s < 2) break;
        if (s > s_max || ipow(s, n) != v || !is_prime(s)) continue;
        out.push_back({r, static_cast<u64>(s), m, n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int power_plus_one_clause(const PowerPlusOne& s) {
  if (s.r == 2 && s.s == 3 && s.m == 3 && s.n == 2) return 1;
  if (s.r == 2 && s.n == 1 && s.s == (u64{1} << s.m) + 1 && is_fermat_prime(s.s)) return 2;
  if (s.s == 2 && s.m == 1 && s.n < 64 && s.r == (u64{1} << s.n) - 1 && is_mersenne_prime(s.r)) return 3;
  return 0;
}

std::vector<BigInt> zsigmondy_ppds(std::uint64_t q, std::uint32_t n) {
  auto rec = recognize(q);
  if (!rec.prime_power) throw Error(std::to_string(q) + " is not a prime power");
  if (n < 1) throw Error("n must be positive");
  std::vector<BigInt> out;
  for (const auto& [r, e] : factor(cyclotomic_value(n, q)))
    if (BigInt(q) % r != 0 && mult_order_mod(q, r) == n) out.push_back(r);
  return out;
}

UniquePpd unique_ppd_bound(std::uint64_t q) {
  auto rec = recognize(q);
  if (!rec.prime_power || q < 3) throw Error("q must be a prime power >= 3");
  std::uint32_t f = rec.prime_power->second;
  UniquePpd u;
  auto ppds = zsigmondy_ppds(q, 6);
  if (ppds.size() != 1) {
    u.branch = "not unique";
    return u;
  }
  u.unique = true;
  u.r = ppds[0];
  static const std::set<u64> exceptional{3, 4, 5, 8, 19};
  if (u.r >= 12 * f + 1) u.branch = "r >= 12f+1";
  else if (exceptional.count(q) && u.r == 6 * f + 1) u.branch = "exceptional q, r = 6f+1";
  else u.branch = "violated";
  return u;
}

BinomialChecks binomial_prime_checks(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || 2 * k >= n) throw Error("binomial checks need 1 <= k < n/2");
  BinomialChecks b;
  auto pr = sieve(n);
  b.prime_power_bound_ok = true;
  std::uint32_t large = 0;
  for (u64 p = 2; p <= n; ++p) {
    if (!pr[p]) continue;
    std::uint32_t v = 0;
    for (u64 pk = p; pk <= n; pk *= p) {
      v += static_cast<std::uint32_t>(n / pk - k / pk - (n - k) / pk);
      if (pk > n / p) break;
    }
    if (v == 0) continue;
    b.factors.push_back({p, v});
    if (BigInt(ipow(p, v)) > n) b.prime_power_bound_ok = false;
    if (p > k) ++large;
  }
  b.two_large_primes = large >= 2;
  return b;
}

bool two_primes_in_half_interval(std::uint64_t n) {
  if (n < 2) throw Error("n must be at least 2");
  std::uint32_t count = 0;
  for (u64 p = n / 2 + 1; p < n; ++p)
    if (is_prime(p) && ++count >= 2) return true;
  return false;
}

std::uint64_t half_interval_threshold(std::uint64_t n_max) {
  auto pr = sieve(n_max);
  std::vector<std::uint32_t> pi(n_max + 1, 0);
  for (u64 i = 1; i <= n_max; ++i) pi[i] = pi[i - 1] + (pr[i] ? 1 : 0);
  u64 n0 = n_max + 1;
  for (u64 n = n_max; n >= 2; --n) {
    // primes p with n/2 < p < n
    if (pi[n - 1] - pi[n / 2] < 2) break;
    n0 = n;
  }
  return n0;
}

bool is_mersenne_prime(std::uint64_t n) {
  return n >= 3 && n != UINT64_MAX && ((n + 1) & n) == 0 && is_prime(n);
}

bool is_fermat_prime(std::uint64_t n) { return n >= 3 && ((n - 1) & (n - 2)) == 0 && is_prime(n); }

Recognition recognize(std::uint64_t n) {
  Recognition r;
  if (n < 2) return r;
  r.prime = is_prime(n);
  auto fs = factor(n);
  if (fs.size() == 1) r.prime_power = std::make_pair(static_cast<u64>(fs[0].first), fs[0].second);
  if (is_mersenne_prime(n)) r.mersenne = static_cast<std::uint32_t>(std::bit_width(n));
  if (is_fermat_prime(n)) r.fermat = static_cast<std::uint32_t>(std::bit_width(n - 1) - 1);
  return r;
}

std::string Recognition::str() const {
  std::ostringstream os;
  os << "prime=" << (prime ? "yes" : "no");
  if (prime_power) os << " prime_power=" << prime_power->first << '^' << prime_power->second;
  else os << " prime_power=no";
  os << " mersenne=";
  if (mersenne) os << "2^" << *mersenne << "-1";
  else os << "no";
  os << " fermat=";
  if (fermat) os << "2^" << *fermat << "+1";
  else os << "no";
  return os.str();
}

}  // namespace derange
