#include "doctest.h"

#include "derange/numtheory.hpp"

#include <map>
#include <random>

using namespace derange;

TEST_CASE("primality and factoring") {
  CHECK(is_prime(2));
  CHECK(!is_prime(1));
  CHECK(is_prime(18446744073709551557ull));
  CHECK(!is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  auto f = factor(728);
  CHECK(f == std::vector<std::pair<BigInt, std::uint32_t>>{{2, 3}, {7, 1}, {13, 1}});
  CHECK(FactoredInteger::parse("2^4*3^2*5*11").value == 7920);
  CHECK(FactoredInteger::of(2448).str() == "2^4*3^2*17");
  CHECK_THROWS_AS(FactoredInteger::parse("2^*3"), Error);
}

TEST_CASE("factor round trip on random 64-bit values") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100000; ++i) {
    std::uint64_t v = rng() | 1;
    if (i % 2) v >>= (i % 40);
    if (v == 0) continue;
    BigInt prod = 1;
    BigInt last = 0;
    for (const auto& [p, e] : factor(v)) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      prod *= ipow(p, e);
    }
    CHECK(prod == v);
  }
}

TEST_CASE("power plus one agrees with a double-loop oracle") {
  auto sols = solve_power_plus_one(1000, 1000, 20, 20);
  // oracle: every s^n - 1 (s prime, n <= 20) looked up among the r^m
  std::map<BigInt, std::pair<std::uint64_t, std::uint32_t>> powers;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t x = 2; x <= 1000; ++x)
    if (is_prime(x)) primes.push_back(x);
  for (auto r : primes) {
    BigInt v = 1;
    for (std::uint32_t m = 1; m <= 20; ++m) powers[v *= r] = {r, m};
  }
  std::vector<PowerPlusOne> oracle;
  for (auto s : primes) {
    BigInt v = 1;
    for (std::uint32_t n = 1; n <= 20; ++n) {
      v *= s;
      auto it = powers.find(v - 1);
      if (it != powers.end()) oracle.push_back({it->second.first, s, it->second.second, n});
    }
  }
  std::sort(oracle.begin(), oracle.end());
  CHECK(sols == oracle);
  bool has_232 = false;
  for (const auto& s : sols) {
    CHECK(power_plus_one_clause(s) != 0);
    has_232 |= s == PowerPlusOne{2, 3, 3, 2};
  }
  CHECK(has_232);
  CHECK(power_plus_one_clause({2, 17, 4, 1}) == 2);
  CHECK(power_plus_one_clause({7, 2, 1, 3}) == 3);
}

TEST_CASE("zsigmondy") {
  CHECK(zsigmondy_ppds(2, 6).empty());
  CHECK(zsigmondy_ppds(7, 2).empty());
  CHECK(zsigmondy_ppds(3, 6) == std::vector<BigInt>{7});
  for (std::uint64_t q = 2; q <= 50; ++q) {
    if (!recognize(q).prime_power) continue;
    for (std::uint32_t n = 2; n <= 12; ++n) {
      auto ppds = zsigmondy_ppds(q, n);
      bool exception = (n == 6 && q == 2) || (n == 2 && is_mersenne_prime(q));
      CHECK_MESSAGE(ppds.empty() == exception, "q=" << q << " n=" << n);
      for (const auto& r : ppds) {
        // oracle: direct search for the least i with r | q^i - 1
        std::uint32_t i = 1;
        while ((ipow(BigInt(q), i) - 1) % r != 0) ++i;
        CHECK(i == n);
        CHECK(r % n == 1);
      }
    }
  }
  CHECK_THROWS_AS(zsigmondy_ppds(12, 3), Error);
}

TEST_CASE("unique ppd of q^6 - 1") {
  CHECK(unique_ppd_bound(3).branch == "exceptional q, r = 6f+1");
  CHECK(unique_ppd_bound(3).r == 7);
  CHECK(unique_ppd_bound(8).r == 19);
  // 7^6 - 1 = 2^4 3^2 19 43 and 7 has order 3 mod 19, so 43 is the only ppd
  CHECK(unique_ppd_bound(7).unique);
  CHECK(unique_ppd_bound(7).r == 43);
  CHECK(unique_ppd_bound(7).branch == "r >= 12f+1");
  CHECK(unique_ppd_bound(4).r == 13);
  CHECK(!unique_ppd_bound(17).unique);  // 17^2 - 17 + 1 = 7 * 13
  for (std::uint64_t q = 3; q <= 100; ++q) {
    if (!recognize(q).prime_power) continue;
    CHECK(unique_ppd_bound(q).branch != "violated");
  }
}

TEST_CASE("binomial checks") {
  CHECK(!binomial_prime_checks(9, 4).two_large_primes);
  CHECK(!binomial_prime_checks(12, 5).two_large_primes);
  auto b = binomial_prime_checks(10, 3);
  CHECK(!b.two_large_primes);
  CHECK(b.prime_power_bound_ok);
  CHECK(b.factors == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 1}, {5, 1}});
  for (std::uint64_t n = 3; n <= 60; ++n)
    for (std::uint64_t k = 1; 2 * k < n; ++k) {
      auto c = binomial_prime_checks(n, k);
      BigInt prod = 1, direct = 1;
      for (auto [p, e] : c.factors) prod *= ipow(BigInt(p), e);
      for (std::uint64_t i = 0; i < k; ++i) direct = direct * (n - i) / (i + 1);
      CHECK(prod == direct);
      CHECK(c.prime_power_bound_ok);
    }
}

TEST_CASE("primes in (n/2, n)") {
  CHECK(two_primes_in_half_interval(12));
  CHECK(!two_primes_in_half_interval(10));
  CHECK(two_primes_in_half_interval(13));
  CHECK(half_interval_threshold(2000) == 12);
}

TEST_CASE("recognition") {
  CHECK(recognize(31).mersenne == 5u);
  CHECK(recognize(17).fermat == 4u);
  auto r9 = recognize(9);
  CHECK(!r9.prime);
  CHECK(r9.prime_power->first == 3);
  CHECK(!r9.mersenne);
  CHECK(!r9.fermat);
  CHECK(recognize(3).fermat == 1u);
  CHECK(recognize(3).mersenne == 2u);
}
