#include "derange/elusive.hpp"

#include <sstream>

namespace derange {

const char* to_string(Status s) {
  switch (s) {
    case Status::Elusive: return "Elusive";
    case Status::AlmostElusive: return "AlmostElusive";
    case Status::NotAlmostElusive: return "NotAlmostElusive";
  }
  return "?";
}

ElusivityVerdict verdict_from_classes(const TransitiveAction& a, ActionClasses classes) {
  ElusivityVerdict v;
  v.degree = a.point_count();
  v.group_order = a.group().order();
  v.degenerate = a.degenerate();
  v.completeness = classes.completeness;
  for (const auto& c : classes.classes)
    if (c.fixes == 0) v.derangement_classes.push_back(c);
  v.all_classes = std::move(classes.classes);
  if (v.degenerate) v.derangement_classes.clear();
  switch (v.derangement_classes.size()) {
    case 0: v.status = Status::Elusive; break;
    case 1: v.status = Status::AlmostElusive; break;
    default: v.status = Status::NotAlmostElusive;
  }
  return v;
}

ElusivityVerdict classify(const TransitiveAction& a, const ClassOptions& opts) {
  return verdict_from_classes(a, prime_order_classes(a, opts));
}

std::string ElusivityVerdict::descriptor() const {
  if (status != Status::AlmostElusive) return "";
  const auto& c = derangement_classes.front();
  return "prime " + std::to_string(c.prime) + ", size " + (c.size == 0 ? std::string("unknown") : to_string(c.size)) + ", " + c.cycle_type.str();
}

std::string ElusivityVerdict::serialize() const {
  std::ostringstream os;
  os << "status: " << to_string(status) << "\n";
  os << "completeness: " << to_string(completeness) << "\n";
  os << "degenerate: " << (degenerate ? "true" : "false") << "\n";
  os << "degree: " << degree << "\n";
  os << "group_order: " << to_string(group_order) << "\n";
  os << "derangement_classes: " << derangement_classes.size() << "\n";
  os << "classes:\n";
  for (const auto& c : all_classes) {
    os << "  - {prime: " << c.prime << ", size: " << (c.size == 0 ? std::string("unknown") : to_string(c.size)) << ", cycle_type: " << c.cycle_type.str()
       << ", fixes: " << c.fixes << "}\n";
  }
  return os.str();
}

bool is_r_elusive(const TransitiveAction& a, std::uint32_t r, const ClassOptions& opts) {
  if (!is_prime(std::uint64_t{r})) throw Error(std::to_string(r) + " is not prime");
  for (const auto& c : prime_order_classes(a, opts).classes)
    if (c.prime == r && c.fixes == 0) return false;
  return true;
}

PiFilter pi_filter(const FactoredInteger& order_g, const FactoredInteger& order_h) {
  if (order_g.value % order_h.value != 0) throw Error("|H| does not divide |G|");
  PiFilter f;
  auto ph = order_h.primes();
  for (const auto& p : order_g.primes())
    if (!ph.count(p)) f.excess.insert(p);
  f.passes = f.excess.size() <= 1;
  return f;
}

std::size_t all_orders_derangement_census(const TransitiveAction& a, const ClassOptions& opts) {
  std::size_t n = 0;
  for (const auto& c : all_classes(a.group(), opts).classes) n += a.fixed_points(c.rep) == 0;
  return n;
}

}  // namespace derange
