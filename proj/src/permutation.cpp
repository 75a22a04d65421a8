#include "derange/permutation.hpp"

#include <numeric>
#include <sstream>

namespace derange {

std::uint32_t CycleType::degree() const {
  std::uint32_t n = 0;
  for (auto [len, mult] : parts) n += len * mult;
  return n;
}

std::string CycleType::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it->second == 0) continue;
    if (!first) os << ',';
    first = false;
    os << it->first;
    if (it->second > 1) os << '^' << it->second;
  }
  os << ']';
  return os.str();
}

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw Error("image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::uint32_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > degree || b < 1 || b > degree) throw Error("cycle point out of range");
      if (used[a - 1]) throw Error("cycles are not disjoint");
      used[a - 1] = true;
      img[a - 1] = b - 1;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint32_t Permutation::fixed_point_count() const {
  std::uint32_t n = 0;
  for (Point i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

Point Permutation::smallest_moved_point() const {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // g^-1 x g maps g(i) -> g(x(i))
  Permutation r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in product");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (Point i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

CycleType Permutation::cycle_type() const {
  CycleType ct;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ++ct.parts[len];
  }
  return ct;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (auto [len, mult] : cycle_type().parts) {
    std::uint64_t g = std::gcd(l, std::uint64_t{len});
    std::uint64_t next = l / g * len;
    if (next / len != l / g) throw Error("element order overflows 64 bits");
    l = next;
  }
  return l;
}

std::uint32_t Permutation::prime_order() const {
  std::uint32_t r = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len == 1) continue;
    if (r == 0) r = len;
    else if (r != len) return 0;
  }
  if (r < 2) return 0;
  for (std::uint32_t d = 2; d * d <= r; ++d)
    if (r % d == 0) return 0;
  return r;
}

bool Permutation::is_even() const {
  std::uint32_t transpositions = 0;
  for (auto [len, mult] : cycle_type().parts) transpositions += (len - 1) * mult;
  return transpositions % 2 == 0;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (Point i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << images_[i] + 1;
  }
  return os.str();
}

std::string Permutation::cycle_str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::uint64_t order_of(const Permutation& g) { return g.order(); }
CycleType cycle_type(const Permutation& g) { return g.cycle_type(); }

}  // namespace derange
