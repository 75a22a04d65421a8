#ifndef DERANGE_TABLES_HPP
#define DERANGE_TABLES_HPP

#include <functional>
#include <iosfwd>

#include "derange/elusive.hpp"
#include "derange/lieclass.hpp"
#include "derange/symshapes.hpp"

namespace derange {

/// A Table 1 row recomputed by the engine.
struct Table1Check {
  Table1Row expected;
  bool engine_ae = false;
  std::string engine_shape;  // cycle type for S/A rows, the prime otherwise
  Completeness completeness = Completeness::Proved;
  std::uint32_t degree = 0;
  bool agrees() const { return engine_ae == expected.ae && (!engine_ae || engine_shape == expected.shape); }
};

/// Builds the group and the coset action named by a Table 1 row.
TransitiveAction table1_action(const Table1Row& row, const ClassOptions& opts = {});

/// Runs classify on every row of scan_table1_all(n_max). Class lists are
/// shared between rows with the same group.
std::vector<Table1Check> verify_table1(std::uint32_t n_max, const ClassOptions& opts = {},
                                       const std::function<void(const Table1Check&)>& progress = {});

std::string check_tsv_header();
std::string to_tsv(const Table1Check& c);

/// One Table 2 case: classifier verdict and, when constructible within the
/// engine bound, the engine comparison.
struct Table2Check {
  LieCase lie_case;
  LieVerdict verdict;
  bool crosschecked = false;
  bool agree = true;
  std::string detail;
};

struct Table2Options {
  std::uint32_t l2_qmax = 81;
  std::uint32_t engine_qmax = 81;  // crosscheck L2 cases with q <= engine_qmax
  bool u3 = true;                  // U3(q), q in {3, 4, 5}, P1 and nonisotropic
};

/// Every admissible L2 case (P1, torus+, torus-, subfield; all extensions)
/// with 7 <= q <= l2_qmax, q != 9, plus the constructible U3 cases.
std::vector<LieCase> table2_cases(const Table2Options& t);
std::vector<Table2Check> verify_table2(const Table2Options& t, const ClassOptions& opts = {},
                                       const std::function<void(const Table2Check&)>& progress = {});

/// An expected AE row instance: family, q, type, G (extension), x (descriptor).
struct Table2Row {
  std::string family, type, ext, x;
  std::uint32_t q = 0;
  std::size_t line = 0;
  std::string str() const;
};
/// Tab-separated "family q type ext x" lines; '#' comments. Errors name the line.
std::vector<Table2Row> parse_table2_rows(std::istream& in, const std::string& source = "rows");

/// Every disagreement between a verification run and the expected rows: rows
/// in range that were not confirmed AE with their descriptor, AE cases that are
/// not rows, and engine disagreements. Rows for cases outside the run are ignored.
std::vector<std::string> table2_discrepancies(const std::vector<Table2Check>& checks, const std::vector<Table2Row>& rows);

std::string table2_tsv_header();
std::string to_tsv(const Table2Check& c);

}  // namespace derange

#endif  // DERANGE_TABLES_HPP
