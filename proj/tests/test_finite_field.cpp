#include "doctest.h"

#include "derange/finite_field.hpp"
#include "derange/permutation.hpp"

using namespace derange;

TEST_CASE("small fields") {
  FiniteField f2(2, 1);
  CHECK(f2.add(1, 1) == 0);
  FiniteField f9(3, 2);
  CHECK(f9.mult_order(f9.primitive()) == 8);
  FiniteField f8(2, 3);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});  // x^3 + x^2 + 1
  // powers of x (code 2): enumerate until 1
  std::uint32_t x = 2, y = x, k = 1;
  while (y != 1) {
    y = f8.mul(y, x);
    ++k;
  }
  CHECK(k == 7);
  CHECK_THROWS_AS(FiniteField(4, 1), Error);
}

TEST_CASE("field axioms") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t f = 1; f <= 4; ++f) {
      if (p >= 11 && f > 3) continue;
      FiniteField F(p, f);
      std::uint32_t q = F.q();
      std::uint32_t step = q > 200 ? q / 61 + 1 : 1;
      for (std::uint32_t a = 0; a < q; a += step) {
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
        for (std::uint32_t b = 0; b < q; b += step)
          for (std::uint32_t c = 0; c < q; c += 7 * step) {
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          }
      }
      // Frobenius: automorphism of order f fixing exactly the prime field
      std::uint32_t fixed = 0;
      for (std::uint32_t a = 0; a < q; ++a) {
        fixed += F.frobenius(a) == a;
        CHECK(F.frobenius(a, f) == a);
      }
      CHECK(fixed == p);
      for (std::uint32_t k = 1; k < f; ++k) {
        bool moves = false;
        for (std::uint32_t a = 0; a < q && !moves; ++a) moves = F.frobenius(a, k) != a;
        CHECK(moves);
      }
      CHECK(F.mult_order(F.primitive()) == q - 1);
    }
  }
}

TEST_CASE("prime powers") {
  CHECK(prime_power(81) == std::pair<std::uint32_t, std::uint32_t>{3, 4});
  CHECK(prime_power(12).first == 0);
  CHECK(FiniteField(5, 2).subfield(1).size() == 5);
}
