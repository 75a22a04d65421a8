#ifndef DERANGE_FINITE_FIELD_HPP
#define DERANGE_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace derange {

/// GF(p^f) with elements coded as integers sum c_i p^i, where c_0 + c_1 x + ...
/// is the residue modulo the lexicographically least monic irreducible of
/// degree f (coefficients compared low to high). Code 0 is zero, 1 is one,
/// and (for f > 1) code p is the class of x. Tables make every operation O(1).
class FiniteField {
public:
  FiniteField(std::uint32_t p, std::uint32_t f);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_{f-1} then the implicit leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  /// Throws on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a, std::uint32_t k = 1) const;

  /// Least-code generator of the multiplicative group.
  std::uint32_t primitive() const { return exp_[1]; }
  std::uint32_t mult_order(std::uint32_t a) const;
  /// Coefficient vector c_0..c_{f-1} of a code.
  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  /// Subfield GF(p^e) as codes (e must divide f).
  std::vector<std::uint32_t> subfield(std::uint32_t e) const;
  bool is_square(std::uint32_t a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

private:
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, neg_, exp_, log_;
};

bool is_prime_u32(std::uint32_t n);
/// (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace derange

#endif  // DERANGE_FINITE_FIELD_HPP
