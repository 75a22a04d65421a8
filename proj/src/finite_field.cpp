#include "derange/finite_field.hpp"

#include <numeric>

#include "derange/permutation.hpp"

namespace derange {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return {0, 0};
  return {p, f};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo a monic b
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& m, std::uint32_t p) {
  std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly b(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        b[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      b[d] = 1;
      if (poly_mod(m, b, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
  if (!is_prime_u32(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw Error("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > (1u << 20)) throw Error("field too large");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Least monic irreducible with (c_0, ..., c_{f-1}) compared lexicographically:
  // read the counter with c_0 as its most significant digit.
  for (std::uint32_t n = 0; n < q_; ++n) {
    Poly m(f + 1);
    std::uint32_t c = n;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[f - 1 - i] = c % p;
      c /= p;
    }
    m[f] = 1;
    if (irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto ca = coeffs(a);
    for (std::uint32_t b = 0; b < q_; ++b) {
      auto cb = coeffs(b);
      std::uint32_t code = 0, scale = 1;
      for (std::uint32_t i = 0; i < f_; ++i) {
        code += ((ca[i] + cb[i]) % p_) * scale;
        scale *= p_;
      }
      add_[a * q_ + b] = code;
      if (code == 0) neg_[a] = b;
    }
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, k = 0;
    do {
      exp_[k] = x;
      ++k;
      x = mul_poly(x, g);
    } while (x != 1 && k < q_ - 1);
    if (x == 1 && k == q_ - 1) break;
  }
  for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
  if (q_ == 2) exp_[0] = 1;
}

std::vector<std::uint32_t> FiniteField::coeffs(std::uint32_t a) const {
  std::vector<std::uint32_t> c(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FiniteField::mul_poly(std::uint32_t a, std::uint32_t b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  Poly prod(2 * f_, 0);
  for (std::uint32_t i = 0; i < f_; ++i)
    for (std::uint32_t j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  std::uint32_t code = 0, scale = 1;
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    code += r[i] * scale;
    scale *= p_;
  }
  return code;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

std::uint32_t FiniteField::frobenius(std::uint32_t a, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % f_; ++i) e *= p_;
  return pow(a, e);
}

std::uint32_t FiniteField::mult_order(std::uint32_t a) const {
  if (a == 0) throw Error("zero has no multiplicative order");
  std::uint32_t n = q_ - 1, l = log_[a];
  std::uint32_t g = l == 0 ? n : std::gcd(l, n);
  return n / g;
}

std::vector<std::uint32_t> FiniteField::subfield(std::uint32_t e) const {
  if (e == 0 || f_ % e) throw Error("subfield degree must divide the field degree");
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < q_; ++a)
    if (frobenius(a, e) == a) out.push_back(a);
  return out;
}

}  // namespace derange
