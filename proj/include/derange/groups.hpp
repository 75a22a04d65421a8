#ifndef DERANGE_GROUPS_HPP
#define DERANGE_GROUPS_HPP

#include <string>

#include "derange/coset_action.hpp"
#include "derange/finite_field.hpp"

namespace derange {

PermGroup symmetric_group(std::uint32_t n);
PermGroup alternating_group(std::uint32_t n);

/// (S_k x S_{n-k}) cap G, stabilizing {1..k}.
PermGroup kset_stabilizer(std::uint32_t n, std::uint32_t k, bool alternating);
/// (S_a wr S_b) cap G, blocks {1..a}, {a+1..2a}, ...
PermGroup partition_stabilizer(std::uint32_t n, std::uint32_t a, std::uint32_t b, bool alternating);

/// delta^delta * phi^phi, an element of Out(L2(q)) = <delta> x <phi>.
struct OutElement {
  std::uint32_t delta = 0;
  std::uint32_t phi = 0;
  bool operator==(const OutElement&) const = default;
};

/// Subgroup J of Out(G0) given by generators; G = G0.J.
struct Extension {
  std::vector<OutElement> gens;
  /// Dot-separated tokens: "", "G0", "delta"/"pgl", "phi", "phi2", "deltaphi", "full", ...
  static Extension parse(const std::string& text);
  std::string str() const;
};

/// Elements of J <= C_d x C_f generated by ext; validates the generators for q.
std::vector<OutElement> out_closure(const Extension& ext, std::uint32_t q);

/// G0 <= G <= PGammaL2(q) acting on the q+1 points of the projective line.
/// Point 0 is infinity; field element a is point 1 + (rank of a with its
/// coefficient c_0 most significant).
class ProjectiveGroup {
public:
  ProjectiveGroup(std::uint32_t q, const Extension& ext);

  const FiniteField& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t d() const { return d_; }
  const Extension& extension() const { return ext_; }
  const PermGroup& group() const { return group_; }
  const PermGroup& socle() const { return g0_; }
  /// |J| where G = G0.J; J is the closure of the generators in C_d x C_f.
  std::uint32_t out_order() const { return static_cast<std::uint32_t>(out_elements_.size()); }
  const std::vector<OutElement>& out_elements() const { return out_elements_; }
  std::string name() const;

  Point point_of(std::uint32_t code) const { return 1 + rank_[code]; }
  /// x -> (a x^s + c) / (b x^s + d), s = Frobenius^k.
  Permutation mobius(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t dd, std::uint32_t k = 0) const;
  Permutation outer(const OutElement& e) const;

private:
  FiniteField field_;
  std::uint32_t d_;
  Extension ext_;
  std::vector<std::uint32_t> rank_;
  std::vector<OutElement> out_elements_;
  PermGroup g0_;
  PermGroup group_;
};

enum class L2Type { P1, TorusSplit, TorusNonsplit, Subfield };
const char* to_string(L2Type t);

/// Maximal-subgroup types of G built inside the projective group. For
/// Subfield, q0^k = q for some k >= 2.
PermGroup l2_subgroup(const ProjectiveGroup& g, L2Type type, std::uint32_t q0 = 0);

/// Affine group x -> ax + b over GF(p), degree p.
PermGroup agl1(std::uint32_t p);
/// GL_n(2) on the 2^n - 1 nonzero vectors (ignoring translations) or
/// AGL_n(2) on all 2^n vectors.
PermGroup gl2_vectors(std::uint32_t n, bool affine);

/// M11 on 11 points, an L2(11) subgroup of it, and the action on its 12 cosets.
struct Mathieu11 {
  PermGroup degree11;
  PermGroup l2_11;
  PermGroup degree12;
};
const Mathieu11& m11();

}  // namespace derange

#endif  // DERANGE_GROUPS_HPP
