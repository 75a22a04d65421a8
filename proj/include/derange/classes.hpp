#ifndef DERANGE_CLASSES_HPP
#define DERANGE_CLASSES_HPP

#include <optional>

#include "derange/coset_action.hpp"

namespace derange {

enum class Completeness { Proved, Probabilistic };
enum class Backend { Auto, Exhaustive, SymmetricCosets, Randomized };

const char* to_string(Completeness c);
const char* to_string(Backend b);

struct ClassOptions {
  BigInt cap_order = 10'000'000;
  std::size_t cap_index = kDefaultIndexCap;
  std::size_t class_cap = 1'000'000;
  std::size_t fruitless_samples = 10'000;
  std::uint64_t seed = 0;
  Backend backend = Backend::Auto;
  bool require_complete = false;
};

/// A conjugacy class of G; `order` is the element order (prime for the
/// prime-order enumerations).
struct GroupClass {
  Permutation rep;
  std::uint64_t order = 0;
  BigInt size;
};

struct ClassList {
  std::vector<GroupClass> classes;
  Completeness completeness = Completeness::Proved;
  Backend backend = Backend::Exhaustive;
};

struct PrimeOrderClass {
  Permutation rep;
  std::uint32_t prime = 0;
  BigInt size;
  std::uint64_t fixes = 0;
  CycleType cycle_type;  // of rep in the group's own representation
};

struct ActionClasses {
  std::vector<PrimeOrderClass> classes;
  Completeness completeness = Completeness::Proved;
  Backend backend = Backend::Exhaustive;
};

/// Conjugation orbit of x under G, materialized. Throws if it exceeds `cap`.
struct MaterializedClass {
  std::vector<ElementKey> keys;  // G.key() of each member
  Permutation least;             // lexicographically least image sequence
};
MaterializedClass conjugacy_class(const PermGroup& g, const Permutation& x, std::size_t cap = 1'000'000);

/// Normalizer in G of the cyclic group <x>; |class of x| must be within `cap`.
PermGroup cyclic_normalizer(const PermGroup& g, const Permutation& x, std::size_t cap = 1'000'000);
/// Centralizer in G of x.
PermGroup centralizer(const PermGroup& g, const Permutation& x, std::size_t cap = 1'000'000);

/// One entry per G-class of elements of prime order, sorted by (prime, rep).
ClassList prime_order_classes(const PermGroup& g, const ClassOptions& opts = {});
/// Every nonidentity class; exhaustive backend only.
ClassList all_classes(const PermGroup& g, const ClassOptions& opts = {});

ActionClasses prime_order_classes(const TransitiveAction& a, const ClassOptions& opts = {});
/// Fixed points on the action for each prime-order class of a precomputed list
/// (the list must belong to a.group()).
ActionClasses on_action(const TransitiveAction& a, const ClassList& cl);

/// |Omega| * |x^G cap H| / |x^G| computed by enumerating H; independent of
/// the direct fixed-point count.
BigInt fixes_by_intersection(const TransitiveAction& a, const Permutation& x, std::size_t cap = 1'000'000);

}  // namespace derange

#endif  // DERANGE_CLASSES_HPP
