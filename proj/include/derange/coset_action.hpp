#ifndef DERANGE_COSET_ACTION_HPP
#define DERANGE_COSET_ACTION_HPP

#include <unordered_map>

#include "derange/perm_group.hpp"

namespace derange {

/// Least base image, over all h in `sub`, of h * g. `sub` must carry a chain
/// whose base is the base of the ambient group containing g; the result then
/// names the right coset sub * g.
ElementKey min_coset_key(const PermGroup& sub, Permutation g);

/// G acting on the right cosets of H by right multiplication. G keeps its own
/// (small, faithful) representation; points of the action are coset indices,
/// with point 0 the coset H itself.
class TransitiveAction {
public:
  TransitiveAction(PermGroup group, PermGroup stabilizer, std::size_t index_cap);

  const PermGroup& group() const { return group_; }
  const PermGroup& stabilizer() const { return stabilizer_; }
  std::uint32_t point_count() const { return static_cast<std::uint32_t>(reps_.size()); }
  bool degenerate() const { return reps_.size() == 1; }

  /// Coset index of H * g.
  std::uint32_t coset_of(const Permutation& g) const;
  const Permutation& coset_rep(std::uint32_t i) const { return reps_[i]; }
  /// Image of g in Sym(point_count).
  Permutation act(const Permutation& g) const;
  std::uint32_t fixed_points(const Permutation& g) const;
  std::vector<Permutation> image_generators() const;

private:
  PermGroup group_;
  PermGroup stabilizer_;
  std::vector<Permutation> reps_;
  std::unordered_map<ElementKey, std::uint32_t> index_;
};

inline constexpr std::size_t kDefaultIndexCap = 100'000;

/// Requires every generator of H to lie in G and |G:H| <= index_cap.
TransitiveAction coset_action(const PermGroup& g, const PermGroup& h, std::size_t index_cap = kDefaultIndexCap);
/// Action of a transitive group on its own points (H = stabilizer of point 0).
TransitiveAction natural_action(const PermGroup& g, std::size_t index_cap = kDefaultIndexCap);

}  // namespace derange

#endif  // DERANGE_COSET_ACTION_HPP
