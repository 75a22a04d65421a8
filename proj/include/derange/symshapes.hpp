#ifndef DERANGE_SYMSHAPES_HPP
#define DERANGE_SYMSHAPES_HPP

#include <string>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

/// Cycle shape [r^d, 1^(n-dr)] of an element of prime order r in S_n.
struct PrimeShape {
  std::uint32_t n = 0, r = 0, d = 0;
  CycleType cycle_type() const;
  /// d disjoint r-cycles on the first dr points.
  Permutation representative() const;
};
/// Every prime shape of degree n.
std::vector<PrimeShape> prime_shapes(std::uint32_t n);

bool fixes_kset(const PrimeShape& s, std::uint32_t k);
bool fixes_partition(const PrimeShape& s, std::uint32_t a, std::uint32_t b);

enum class AltSplit { NotInAlt, OneClass, TwoClasses };
const char* to_string(AltSplit s);
AltSplit alt_class_splits(const PrimeShape& s);

enum class NatGroup { Sym, Alt };
const char* to_string(NatGroup g);  // "S" / "A"

struct SymbolicVerdict {
  bool ae = false;
  std::string shape;  // derangement class when ae
};

SymbolicVerdict classify_natural(std::uint32_t n, NatGroup g);
/// 2 <= k < n/2.
SymbolicVerdict classify_ksets(std::uint32_t n, std::uint32_t k, NatGroup g);
SymbolicVerdict classify_imprimitive(std::uint32_t n, std::uint32_t a, std::uint32_t b, NatGroup g);

/// One row of the scan: `action` is "natural", "kset:k", "part:axb", or a
/// primitive subgroup label for n <= 10.
struct Table1Row {
  std::uint32_t n = 0;
  std::string group;  // "S", "A", "PGL2(9)", "M10"
  std::string action;
  bool ae = false;
  std::string shape;
};

/// Every (group, action) considered for 5 <= n <= n_max, with its symbolic
/// verdict. Small-n primitive cases come from a fixed list.
std::vector<Table1Row> scan_table1_all(std::uint32_t n_max);
/// The AE rows of scan_table1_all.
std::vector<Table1Row> scan_table1(std::uint32_t n_max);

std::string tsv_header();
std::string to_tsv(const Table1Row& r);

}  // namespace derange

#endif  // DERANGE_SYMSHAPES_HPP
