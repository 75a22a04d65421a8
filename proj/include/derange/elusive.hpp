#ifndef DERANGE_ELUSIVE_HPP
#define DERANGE_ELUSIVE_HPP

#include "derange/classes.hpp"
#include "derange/numtheory.hpp"

namespace derange {

enum class Status { Elusive, AlmostElusive, NotAlmostElusive };
const char* to_string(Status s);

struct ElusivityVerdict {
  Status status = Status::Elusive;
  std::vector<PrimeOrderClass> derangement_classes;
  std::vector<PrimeOrderClass> all_classes;
  Completeness completeness = Completeness::Proved;
  bool degenerate = false;
  std::uint32_t degree = 0;
  BigInt group_order;

  /// Structured text record: status, completeness, classes[{prime,size,cycle_type,fixes}].
  std::string serialize() const;
  /// "prime r, size s, [cycle type]" of the unique class, or "" if not AE.
  std::string descriptor() const;
};

ElusivityVerdict classify(const TransitiveAction& a, const ClassOptions& opts = {});
ElusivityVerdict verdict_from_classes(const TransitiveAction& a, ActionClasses classes);

bool is_r_elusive(const TransitiveAction& a, std::uint32_t r, const ClassOptions& opts = {});

struct PiFilter {
  bool passes = false;
  std::set<BigInt> excess;  // pi(G) minus pi(H)
};
/// Throws if |H| does not divide |G|.
PiFilter pi_filter(const FactoredInteger& order_g, const FactoredInteger& order_h);

/// Number of G-classes of derangements of any order (exhaustive backend only).
std::size_t all_orders_derangement_census(const TransitiveAction& a, const ClassOptions& opts = {});

}  // namespace derange

#endif  // DERANGE_ELUSIVE_HPP
