#ifndef DERANGE_SU3_HPP
#define DERANGE_SU3_HPP

#include <array>

#include "derange/coset_action.hpp"
#include "derange/finite_field.hpp"

namespace derange {

/// U3(q) <= G <= Aut(U3(q)) with |G:U3(q)| = index, acting on the q^4+q^2+1
/// points of PG(2, q^2). The Hermitian form is x1 y3^q + x2 y2^q + x3 y1^q.
/// Supported: q in {3, 4, 5}; index 1, 2 for q = 3; 1, 2, 4 for q = 4;
/// 1, 2, 3, 6 for q = 5.
class UnitaryGroup {
public:
  UnitaryGroup(std::uint32_t q, std::uint32_t index = 1);

  std::uint32_t q() const { return q_; }
  std::uint32_t index() const { return index_; }
  const FiniteField& field() const { return field_; }  // GF(q^2)
  const PermGroup& socle() const { return g0_; }
  const PermGroup& group() const { return group_; }

  std::uint32_t point_count() const { return static_cast<std::uint32_t>(points_.size()); }
  bool isotropic(Point x) const;
  Point isotropic_point() const;     // <e1>
  Point nonisotropic_point() const;  // <e2>
  std::uint32_t isotropic_count() const;

private:
  using Vec = std::array<std::uint32_t, 3>;
  using Mat = std::array<Vec, 3>;
  Vec normalize(Vec v) const;
  Point index_of(const Vec& v) const;
  std::uint32_t form(const Vec& u, const Vec& v) const;
  bool preserves_form(const Mat& m) const;
  Permutation linear(const Mat& m) const;
  Permutation frobenius(std::uint32_t k) const;

  std::uint32_t q_, index_;
  FiniteField field_;
  std::vector<Vec> points_;
  std::vector<std::uint32_t> code_to_point_;
  PermGroup g0_, group_;
};

enum class Su3Variant { Isotropic, Nonisotropic };

/// G on the isotropic points (degree q^3+1) or on the nonisotropic points
/// (degree q^2(q^2-q+1)), as a coset action.
TransitiveAction su3_action(std::uint32_t q, Su3Variant v, std::uint32_t index = 1,
                            std::size_t index_cap = kDefaultIndexCap);

}  // namespace derange

#endif  // DERANGE_SU3_HPP
