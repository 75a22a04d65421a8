#ifndef DERANGE_PERM_GROUP_HPP
#define DERANGE_PERM_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

using BigInt = boost::multiprecision::cpp_int;

/// Base images of a group element; determines the element uniquely within
/// the group whose chain produced it.
using ElementKey = std::u32string;

/// Permutation group stored with a complete stabilizer chain (deterministic
/// Schreier-Sims). Immutable after construction.
///
/// The base starts with `base_prefix` (kept even where the orbit is trivial,
/// so that subgroups can share a parent's base) and is extended with the
/// smallest point moved by a residue whenever one fixes every base point.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::uint32_t degree) { return PermGroup(degree, {}); }

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  std::vector<Point> base() const;
  std::size_t base_length() const { return levels_.size(); }
  std::vector<Permutation> strong_generators() const;

  bool contains(const Permutation& g) const;
  /// Residue of sifting g from level `from`; returns the level where it dropped out.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  /// Base point, basic orbit and transversal of level i.
  Point base_point(std::size_t level) const { return levels_[level].base_point; }
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_basic_orbit(std::size_t level, Point p) const { return levels_[level].pos[p] >= 0; }
  /// Element of the level's stabilizer mapping the base point to p.
  const Permutation& transversal(std::size_t level, Point p) const {
    return levels_[level].trans[static_cast<std::size_t>(levels_[level].pos[p])];
  }
  const Permutation& transversal_inverse(std::size_t level, Point p) const {
    return levels_[level].trans_inv[static_cast<std::size_t>(levels_[level].pos[p])];
  }

  /// True iff some element maps base_point(i) to images[i] for every i given.
  bool base_images_feasible(std::span<const Point> images) const;
  /// The unique element with the given full base image.
  Permutation element_from_base_images(std::span<const Point> images) const;
  ElementKey key(const Permutation& g) const;

  /// Visits every element exactly once (in transversal order).
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  Permutation random_element(std::mt19937_64& rng) const;

  /// Same group, chain rebuilt so that the base starts with `prefix`.
  PermGroup with_base(std::vector<Point> prefix) const;
  /// Pointwise stabilizer of the first `level` base points.
  PermGroup chain_subgroup(std::size_t level) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Permutation> trans;
    std::vector<Permutation> trans_inv;
    std::vector<std::size_t> checked;  // per orbit point: gens already used for Schreier generators
  };

  void schreier_sims(std::vector<Point> base_prefix);
  void add_level(Point base_point);
  void extend_orbit(Level& level);

  std::uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Group generated by a nonempty list of equal-degree permutations.
PermGroup build_group(std::vector<Permutation> gens);
bool membership(const PermGroup& g, const Permutation& x);
/// Stabilizer of a 0-indexed point.
PermGroup point_stabilizer(const PermGroup& g, Point p);
/// Setwise stabilizer: pointwise stabilizer of `pts`, extended by transporters
/// found by a backtrack over images of `pts`. Throws if more than `node_budget`
/// search nodes are needed.
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& pts, std::size_t node_budget = 1'000'000);
/// Index-2-or-1 subgroup of even permutations.
PermGroup even_part(const PermGroup& g);

std::string to_string(const BigInt& v);

}  // namespace derange

#endif  // DERANGE_PERM_GROUP_HPP
