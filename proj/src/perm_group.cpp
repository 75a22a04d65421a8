#include "derange/perm_group.hpp"

#include <algorithm>
#include <deque>

namespace derange {

PermGroup::PermGroup(std::uint32_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error("generator degree mismatch");
  schreier_sims(std::move(base_prefix));
}

void PermGroup::add_level(Point base_point) {
  Level l;
  l.base_point = base_point;
  l.pos.assign(degree_, -1);
  levels_.push_back(std::move(l));
}

void PermGroup::extend_orbit(Level& l) {
  if (l.orbit.empty()) {
    l.orbit.push_back(l.base_point);
    l.pos[l.base_point] = 0;
    l.trans.push_back(Permutation::identity(degree_));
    l.trans_inv.push_back(Permutation::identity(degree_));
    l.checked.push_back(0);
  }
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    for (const auto& s : l.gens) {
      Point img = s[l.orbit[i]];
      if (l.pos[img] >= 0) continue;
      l.pos[img] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(img);
      Permutation t = l.trans[i] * s;
      l.trans_inv.push_back(t.inverse());
      l.trans.push_back(std::move(t));
      l.checked.push_back(0);
    }
  }
}

void PermGroup::schreier_sims(std::vector<Point> base_prefix) {
  levels_.clear();
  std::vector<bool> in_base(degree_, false);
  for (Point p : base_prefix) {
    if (p >= degree_) throw Error("base point out of range");
    if (in_base[p]) continue;
    in_base[p] = true;
    add_level(p);
  }
  std::vector<const Permutation*> nontrivial;
  for (const auto& g : generators_)
    if (!g.is_identity()) nontrivial.push_back(&g);
  for (const Permutation* g : nontrivial) {
    bool fixes_all = std::all_of(levels_.begin(), levels_.end(),
                                 [&](const Level& l) { return (*g)[l.base_point] == l.base_point; });
    if (fixes_all) add_level(g->smallest_moved_point());
  }
  for (const Permutation* g : nontrivial) {
    for (auto& l : levels_) {
      l.gens.push_back(*g);
      if ((*g)[l.base_point] != l.base_point) break;
    }
  }
  for (auto& l : levels_) extend_orbit(l);

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t idx = 0; idx < levels_[i].orbit.size() && !restarted; ++idx) {
      while (levels_[i].checked[idx] < levels_[i].gens.size()) {
        Level& l = levels_[i];
        std::size_t gi = l.checked[idx]++;
        const Permutation& s = l.gens[gi];
        Point img = s[l.orbit[idx]];
        Permutation h = l.trans[idx] * s * l.trans_inv[static_cast<std::size_t>(l.pos[img])];
        if (h.is_identity()) continue;
        auto [res, j] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && res.is_identity()) continue;
        if (j == levels_.size()) add_level(res.smallest_moved_point());
        for (std::size_t lv = static_cast<std::size_t>(i) + 1; lv <= j; ++lv) {
          levels_[lv].gens.push_back(res);
          extend_orbit(levels_[lv]);
        }
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& l : levels_) order_ *= static_cast<unsigned long>(l.orbit.size());
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& l : levels_)
    for (const auto& g : l.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Point img = g[levels_[l].base_point];
    std::int32_t p = levels_[l].pos[img];
    if (p < 0) return {std::move(g), l};
    g = g * levels_[l].trans_inv[static_cast<std::size_t>(p)];
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw Error("degree mismatch in membership test");
  auto [res, j] = sift(g);
  return j == levels_.size() && res.is_identity();
}

bool PermGroup::base_images_feasible(std::span<const Point> images) const {
  if (images.size() > levels_.size()) return false;
  std::vector<const Permutation*> applied;
  for (std::size_t j = 0; j < images.size(); ++j) {
    Point d = images[j];
    for (const Permutation* u : applied) d = (*u)[d];
    std::int32_t p = levels_[j].pos[d];
    if (p < 0) return false;
    applied.push_back(&levels_[j].trans_inv[static_cast<std::size_t>(p)]);
  }
  return true;
}

Permutation PermGroup::element_from_base_images(std::span<const Point> images) const {
  if (images.size() > levels_.size()) throw Error("too many base images");
  std::vector<const Permutation*> applied;
  std::vector<const Permutation*> factors;
  for (std::size_t j = 0; j < images.size(); ++j) {
    Point d = images[j];
    for (const Permutation* u : applied) d = (*u)[d];
    std::int32_t p = levels_[j].pos[d];
    if (p < 0) throw Error("base image not realised by any group element");
    applied.push_back(&levels_[j].trans_inv[static_cast<std::size_t>(p)]);
    factors.push_back(&levels_[j].trans[static_cast<std::size_t>(p)]);
  }
  Permutation g = Permutation::identity(degree_);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) g = g * **it;
  return g;
}

ElementKey PermGroup::key(const Permutation& g) const {
  ElementKey k;
  k.reserve(levels_.size());
  for (const auto& l : levels_) k.push_back(static_cast<char32_t>(g[l.base_point]));
  return k;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  if (levels_.empty()) {
    visit(Permutation::identity(degree_));
    return;
  }
  std::vector<Permutation> stack(levels_.size() + 1);
  stack[levels_.size()] = Permutation::identity(degree_);
  auto rec = [&](auto&& self, std::size_t level) -> void {
    for (const auto& u : levels_[level].trans) {
      stack[level] = stack[level + 1] * u;
      if (level == 0) visit(stack[0]);
      else self(self, level - 1);
    }
  };
  rec(rec, levels_.size() - 1);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->trans.size() - 1);
    g = g * it->trans[pick(rng)];
  }
  return g;
}

PermGroup PermGroup::with_base(std::vector<Point> prefix) const {
  return PermGroup(degree_, strong_generators(), std::move(prefix));
}

PermGroup PermGroup::chain_subgroup(std::size_t level) const {
  std::vector<Point> rest;
  for (std::size_t l = level; l < levels_.size(); ++l) rest.push_back(levels_[l].base_point);
  std::vector<Permutation> gens;
  if (level < levels_.size()) gens = levels_[level].gens;
  return PermGroup(degree_, std::move(gens), std::move(rest));
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw Error("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : generators_) {
      Point q = g[orb[i]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (Point q : orb) seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbit(0).size() == degree_; }

PermGroup build_group(std::vector<Permutation> gens) {
  if (gens.empty()) throw Error("empty generator list");
  std::uint32_t n = gens.front().degree();
  if (n == 0) throw Error("degree 0");
  return PermGroup(n, std::move(gens));
}

bool membership(const PermGroup& g, const Permutation& x) { return g.contains(x); }

PermGroup point_stabilizer(const PermGroup& g, Point p) {
  if (p >= g.degree()) throw Error("point out of range");
  if (g.base_length() > 0 && g.base_point(0) == p) return g.chain_subgroup(1);
  return g.with_base({p}).chain_subgroup(1);
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<Point>& pts, std::size_t node_budget) {
  for (Point p : pts)
    if (p >= g.degree()) throw Error("point out of range");
  PermGroup chain = g.with_base(pts);
  std::size_t m = pts.size();
  PermGroup current = chain.chain_subgroup(m).with_base(pts);
  std::vector<bool> in_set(g.degree(), false);
  for (Point p : pts) in_set[p] = true;

  std::vector<Point> images;
  std::vector<bool> used(g.degree(), false);
  std::size_t nodes = 0;
  auto rec = [&](auto&& self) -> void {
    if (++nodes > node_budget) throw Error("setwise stabilizer search exceeded node budget");
    if (images.size() == m) {
      Permutation t = chain.element_from_base_images(images);
      if (!current.contains(t)) {
        auto gens = current.strong_generators();
        gens.push_back(std::move(t));
        current = PermGroup(g.degree(), std::move(gens), pts);
      }
      return;
    }
    for (Point p : pts) {
      if (used[p]) continue;
      images.push_back(p);
      if (chain.base_images_feasible(images)) {
        used[p] = true;
        self(self);
        used[p] = false;
      }
      images.pop_back();
    }
  };
  rec(rec);
  return current.with_base(g.base());
}

PermGroup even_part(const PermGroup& g) {
  const auto& gens = g.generators();
  auto odd = std::find_if(gens.begin(), gens.end(), [](const Permutation& s) { return !s.is_even(); });
  if (odd == gens.end()) return g;
  const Permutation t = *odd;
  const Permutation t_inv = t.inverse();
  std::vector<Permutation> out;
  auto push = [&](Permutation x) {
    if (!x.is_identity() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  };
  for (const auto& s : gens) {
    if (s.is_even()) {
      push(s);
      push(t * s * t_inv);
    } else {
      push(s * t_inv);
      push(t * s);
    }
  }
  return PermGroup(g.degree(), std::move(out), g.base());
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace derange
