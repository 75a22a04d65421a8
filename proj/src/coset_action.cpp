#include "derange/coset_action.hpp"

namespace derange {

ElementKey min_coset_key(const PermGroup& sub, Permutation g) {
  ElementKey key;
  key.reserve(sub.base_length());
  for (std::size_t l = 0; l < sub.base_length(); ++l) {
    const auto& orb = sub.basic_orbit(l);
    Point best = g[orb[0]];
    Point arg = orb[0];
    for (std::size_t i = 1; i < orb.size(); ++i) {
      Point v = g[orb[i]];
      if (v < best) {
        best = v;
        arg = orb[i];
      }
    }
    key.push_back(static_cast<char32_t>(best));
    if (arg != sub.base_point(l)) g = sub.transversal(l, arg) * g;
  }
  return key;
}

TransitiveAction::TransitiveAction(PermGroup group, PermGroup stabilizer, std::size_t index_cap)
    : group_(std::move(group)), stabilizer_(std::move(stabilizer)) {
  if (stabilizer_.degree() != group_.degree()) throw Error("subgroup degree mismatch");
  for (const auto& h : stabilizer_.generators())
    if (!group_.contains(h)) throw Error("subgroup generator is not in the group");
  if (stabilizer_.base() != group_.base()) stabilizer_ = stabilizer_.with_base(group_.base());
  if (stabilizer_.base_length() != group_.base_length()) throw Error("subgroup chain does not share the group base");
  if (group_.order() % stabilizer_.order() != 0) throw Error("subgroup order does not divide group order");
  BigInt index = group_.order() / stabilizer_.order();
  if (index > index_cap) throw Error("coset action index " + to_string(index) + " exceeds cap");

  Permutation id = Permutation::identity(group_.degree());
  index_.emplace(min_coset_key(stabilizer_, id), 0);
  reps_.push_back(id);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const auto& s : group_.generators()) {
      Permutation t = reps_[i] * s;
      auto [it, inserted] = index_.emplace(min_coset_key(stabilizer_, t), static_cast<std::uint32_t>(reps_.size()));
      if (inserted) reps_.push_back(std::move(t));
    }
  }
  if (BigInt(reps_.size()) != index) throw Error("coset enumeration disagrees with |G:H|");
}

std::uint32_t TransitiveAction::coset_of(const Permutation& g) const {
  auto it = index_.find(min_coset_key(stabilizer_, g));
  if (it == index_.end()) throw Error("element is not in the acting group");
  return it->second;
}

Permutation TransitiveAction::act(const Permutation& g) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = coset_of(reps_[i] * g);
  return Permutation(std::move(img));
}

std::uint32_t TransitiveAction::fixed_points(const Permutation& g) const {
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < reps_.size(); ++i) n += coset_of(reps_[i] * g) == i;
  return n;
}

std::vector<Permutation> TransitiveAction::image_generators() const {
  std::vector<Permutation> out;
  for (const auto& s : group_.generators()) out.push_back(act(s));
  return out;
}

TransitiveAction coset_action(const PermGroup& g, const PermGroup& h, std::size_t index_cap) {
  return TransitiveAction(g, h, index_cap);
}

TransitiveAction natural_action(const PermGroup& g, std::size_t index_cap) {
  if (!g.is_transitive()) throw Error("group is not transitive on its points");
  return TransitiveAction(g, point_stabilizer(g, 0), index_cap);
}

}  // namespace derange
