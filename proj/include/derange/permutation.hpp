#ifndef DERANGE_PERMUTATION_HPP
#define DERANGE_PERMUTATION_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace derange {

using Point = std::uint32_t;

/// Thrown on malformed input or violated preconditions anywhere in the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Multiset of cycle lengths, stored as length -> multiplicity (fixed points
/// are recorded under length 1).
struct CycleType {
  std::map<std::uint32_t, std::uint32_t> parts;

  std::uint32_t degree() const;
  /// Bracket notation with the longest cycles first, e.g. "[5^2]" or "[7,1^2]".
  std::string str() const;
  bool operator==(const CycleType&) const = default;
};

/// Bijection of {0..n-1}. Points are 0-indexed internally and 1-indexed in all
/// text I/O. Products act on the right: (a * b)(i) = b(a(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::uint32_t degree);
  /// Takes 0-indexed images; throws Error unless they form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::uint32_t degree) { return Permutation(degree); }
  /// Builds from 1-indexed disjoint cycles, e.g. from_cycles(5, {{1,2,3},{4,5}}).
  static Permutation from_cycles(std::uint32_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::uint32_t degree, const std::vector<std::vector<Point>>& cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  Point image(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  std::uint32_t fixed_point_count() const;
  Point smallest_moved_point() const;  // degree() if identity

  Permutation inverse() const;
  Permutation pow(long long e) const;
  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;

  /// Least k >= 1 with this^k = 1 (lcm of the cycle lengths). Throws on overflow.
  std::uint64_t order() const;
  /// The prime r if the order is prime, else 0.
  std::uint32_t prime_order() const;
  CycleType cycle_type() const;
  bool is_even() const;

  /// Images as 1-indexed space separated integers.
  std::string str() const;
  std::string cycle_str() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
  std::vector<Point> images_;
};

std::uint64_t order_of(const Permutation& g);
CycleType cycle_type(const Permutation& g);

}  // namespace derange

#endif  // DERANGE_PERMUTATION_HPP
