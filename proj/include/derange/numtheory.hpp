#ifndef DERANGE_NUMTHEORY_HPP
#define DERANGE_NUMTHEORY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "derange/perm_group.hpp"

namespace derange {

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

struct FactoredInteger {
  BigInt value = 1;
  std::vector<std::pair<BigInt, std::uint32_t>> factors;  // increasing primes

  static FactoredInteger of(const BigInt& n);
  /// Parses "2^4*3^2*5*11" or a plain integer.
  static FactoredInteger parse(const std::string& text);
  BigInt product() const;
  std::set<BigInt> primes() const;
  std::string str() const;
};

/// Prime factorization by trial division and Pollard rho (fixed seed).
std::vector<std::pair<BigInt, std::uint32_t>> factor(BigInt n);

BigInt ipow(const BigInt& b, std::uint32_t e);
/// Largest x with x^k <= n.
BigInt iroot(const BigInt& n, std::uint32_t k);
/// n-th cyclotomic polynomial evaluated at q.
BigInt cyclotomic_value(std::uint32_t n, const BigInt& q);
/// Multiplicative order of q modulo a prime r not dividing q.
std::uint64_t mult_order_mod(const BigInt& q, const BigInt& r);

struct PowerPlusOne {
  std::uint64_t r, s;
  std::uint32_t m, n;
  bool operator<(const PowerPlusOne& o) const { return std::tie(r, s, m, n) < std::tie(o.r, o.s, o.m, o.n); }
  bool operator==(const PowerPlusOne&) const = default;
};
/// All r^m + 1 = s^n with r, s prime within the bounds, sorted.
std::vector<PowerPlusOne> solve_power_plus_one(std::uint64_t r_max, std::uint64_t s_max, std::uint32_t m_max,
                                               std::uint32_t n_max);
/// 1, 2 or 3 for the clause the solution satisfies: (2,3,3,2); s = 2^m+1 a
/// Fermat prime with n = 1; r = 2^n-1 a Mersenne prime with m = 1. 0 if none.
int power_plus_one_clause(const PowerPlusOne& s);

/// Primitive prime divisors of q^n - 1.
std::vector<BigInt> zsigmondy_ppds(std::uint64_t q, std::uint32_t n);

struct UniquePpd {
  bool unique = false;
  BigInt r;                // when unique
  std::string branch;      // "r >= 12f+1", "exceptional q, r = 6f+1", "violated", or "not unique"
};
UniquePpd unique_ppd_bound(std::uint64_t q);

struct BinomialChecks {
  bool prime_power_bound_ok = false;
  bool two_large_primes = false;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
};
/// Factorization of C(n,k) by Legendre's formula, and the two checks.
BinomialChecks binomial_prime_checks(std::uint64_t n, std::uint64_t k);

bool two_primes_in_half_interval(std::uint64_t n);
/// Smallest n0 <= n_max such that the interval check holds for all n0 <= n <= n_max.
std::uint64_t half_interval_threshold(std::uint64_t n_max);

struct Recognition {
  bool prime = false;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power;  // (base, exponent)
  std::optional<std::uint32_t> mersenne;                               // n = 2^m - 1
  std::optional<std::uint32_t> fermat;                                 // n = 2^m + 1
  std::string str() const;
};
Recognition recognize(std::uint64_t n);
bool is_mersenne_prime(std::uint64_t n);
bool is_fermat_prime(std::uint64_t n);

}  // namespace derange

#endif  // DERANGE_NUMTHEORY_HPP
