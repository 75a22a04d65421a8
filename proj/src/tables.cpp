#include "derange/tables.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "derange/groups.hpp"
#include "derange/su3.hpp"

namespace derange {

namespace {

bool is_natural_family(const std::string& g) { return g == "S" || g == "A"; }

std::uint32_t parse_u32(const std::string& s) { return static_cast<std::uint32_t>(std::stoul(s)); }

PermGroup row_group(const Table1Row& row) {
  if (row.group == "S") return symmetric_group(row.n);
  if (row.group == "A") return alternating_group(row.n);
  if (row.group == "PGL2(9)") return ProjectiveGroup(9, Extension::parse("pgl")).group();
  if (row.group == "M10") return ProjectiveGroup(9, Extension::parse("deltaphi")).group();
  if (row.group == "PGammaL2(9)") return ProjectiveGroup(9, Extension::parse("full")).group();
  throw Error("unknown table group " + row.group);
}

PermGroup row_subgroup(const Table1Row& row, const PermGroup& g) {
  const std::string& act = row.action;
  if (!is_natural_family(row.group)) {
    ProjectiveGroup pg(9, Extension::parse(row.group == "PGL2(9)" ? "pgl" : row.group == "M10" ? "deltaphi" : "full"));
    if (act == "P1") return l2_subgroup(pg, L2Type::P1);
    if (act == "torus+") return l2_subgroup(pg, L2Type::TorusSplit);
    if (act == "torus-") return l2_subgroup(pg, L2Type::TorusNonsplit);
    throw Error("unknown action " + act);
  }
  bool alt = row.group == "A";
  if (act == "natural") return point_stabilizer(g, 0);
  if (act.rfind("kset:", 0) == 0) return kset_stabilizer(row.n, parse_u32(act.substr(5)), alt);
  if (act.rfind("part:", 0) == 0) {
    auto x = act.find('x');
    return partition_stabilizer(row.n, parse_u32(act.substr(5, x - 5)), parse_u32(act.substr(x + 1)), alt);
  }
  // primitive subgroups for small n; these are transitive on n points
  PermGroup h = [&]() -> PermGroup {
    if (act == "D10")
      return build_group({Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}), Permutation::from_cycles(5, {{2, 5}, {3, 4}})});
    if (act.rfind("AGL1(", 0) == 0) return agl1(row.n);
    if (act == "L2(5)") return ProjectiveGroup(5, Extension::parse("G0")).group();
    if (act == "PGL2(5)") return ProjectiveGroup(5, Extension::parse("pgl")).group();
    if (act == "PGL2(7)") return ProjectiveGroup(7, Extension::parse("pgl")).group();
    if (act == "L3(2)") return gl2_vectors(3, false);
    if (act == "AGL3(2)") return gl2_vectors(3, true);
    if (act == "PGammaL2(8)") return ProjectiveGroup(8, Extension::parse("phi")).group();
    throw Error("unknown action " + act);
  }();
  if (h.degree() != row.n) throw Error("subgroup " + act + " has the wrong degree");
  return h;
}

std::string engine_shape(const Table1Row& row, const ElusivityVerdict& v) {
  if (v.status != Status::AlmostElusive) return "";
  const auto& c = v.derangement_classes.front();
  return is_natural_family(row.group) ? c.cycle_type.str() : std::to_string(c.prime);
}

}  // namespace

TransitiveAction table1_action(const Table1Row& row, const ClassOptions& opts) {
  PermGroup g = row_group(row);
  PermGroup h = row_subgroup(row, g);
  return coset_action(g, h, opts.cap_index);
}

std::vector<Table1Check> verify_table1(std::uint32_t n_max, const ClassOptions& opts,
                                       const std::function<void(const Table1Check&)>& progress) {
  struct Cached {
    PermGroup group;
    ClassList classes;
  };
  std::map<std::string, Cached> cache;
  std::vector<Table1Check> out;
  for (const auto& row : scan_table1_all(n_max)) {
    std::string key = row.group + ":" + std::to_string(row.n);
    auto it = cache.find(key);
    if (it == cache.end()) {
      PermGroup g = row_group(row);
      ClassList cl = prime_order_classes(g, opts);
      it = cache.emplace(key, Cached{std::move(g), std::move(cl)}).first;
    }
    const auto& g = it->second.group;
    TransitiveAction a = coset_action(g, row_subgroup(row, g), opts.cap_index);
    auto v = verdict_from_classes(a, on_action(a, it->second.classes));
    Table1Check c;
    c.expected = row;
    c.engine_ae = v.status == Status::AlmostElusive;
    c.engine_shape = engine_shape(row, v);
    c.completeness = v.completeness;
    c.degree = v.degree;
    if (progress) progress(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::string check_tsv_header() { return "n\tgroup\taction\tdegree\texpected\tengine\tshape\tcompleteness\tagree"; }

std::string to_tsv(const Table1Check& c) {
  const auto& r = c.expected;
  return std::to_string(r.n) + "\t" + r.group + "\t" + r.action + "\t" + std::to_string(c.degree) + "\t" +
         (r.ae ? "AE" : "notAE") + "\t" + (c.engine_ae ? "AE" : "notAE") + "\t" +
         (c.engine_shape.empty() ? "-" : c.engine_shape) + "\t" + to_string(c.completeness) + "\t" +
         (c.agrees() ? "yes" : "NO");
}

std::vector<LieCase> table2_cases(const Table2Options& t) {
  std::vector<LieCase> out;
  for (std::uint32_t q = 7; q <= t.l2_qmax; ++q) {
    auto [p, f] = prime_power(q);
    if (p == 0 || q == 9) continue;
    for (const auto& ext : l2_extensions(q)) {
      std::vector<LieCase> cs;
      for (auto ty : {LieType::P1, LieType::TorusSplit, LieType::TorusNonsplit})
        cs.push_back({LieFamily::L2, q, ty, 0, ext.str()});
      for (std::uint32_t f0 = 1; f0 < f; ++f0)
        if (f % f0 == 0 && is_prime_u32(f / f0))
          cs.push_back({LieFamily::L2, q, LieType::Subfield, static_cast<std::uint32_t>(ipow(p, f0)), ext.str()});
      for (auto& c : cs) {
        try {
          classify_l2(c);
        } catch (const Error&) {
          continue;
        }
        out.push_back(std::move(c));
      }
    }
  }
  if (t.u3) {
    const std::pair<std::uint32_t, std::vector<std::uint32_t>> u3s[] = {{3, {1, 2}}, {4, {1, 2, 4}}, {5, {1, 2, 3, 6}}};
    for (const auto& [q, ks] : u3s)
      for (auto k : ks)
        for (auto ty : {LieType::P1, LieType::GU2xGU1})
          out.push_back({LieFamily::U3, q, ty, 0, k == 1 ? "G0" : "G0." + std::to_string(k)});
  }
  return out;
}

std::vector<Table2Check> verify_table2(const Table2Options& t, const ClassOptions& opts,
                                       const std::function<void(const Table2Check&)>& progress) {
  // groups are shared by all subgroup types of one (family, q, ext)
  std::string cached_key;
  PermGroup cached_group;
  ClassList cached_classes;
  std::vector<Table2Check> out;
  for (const auto& c : table2_cases(t)) {
    Table2Check r;
    r.lie_case = c;
    r.verdict = classify_lie(c);
    bool engine = lie_constructible(c) && (c.family != LieFamily::L2 || c.q <= t.engine_qmax);
    if (engine) {
      TransitiveAction a = lie_action(c, opts);
      std::string key = std::string(to_string(c.family)) + ":" + std::to_string(c.q) + ":" + c.ext;
      if (key != cached_key) {
        cached_key = key;
        cached_group = a.group();
        cached_classes = prime_order_classes(cached_group, opts);
      }
      auto rep = compare_with_engine(c, r.verdict, verdict_from_classes(a, on_action(a, cached_classes)));
      r.crosschecked = true;
      r.agree = rep.agree;
      r.detail = rep.detail;
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string Table2Row::str() const {
  return family + " q=" + std::to_string(q) + " " + type + " " + ext + " x=" + x + " (line " + std::to_string(line) + ")";
}

std::vector<Table2Row> parse_table2_rows(std::istream& in, const std::string& source) {
  std::vector<Table2Row> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    Table2Row r;
    std::string q, extra;
    if (!(ls >> r.family >> q >> r.type >> r.ext >> r.x) || (ls >> extra))
      throw Error(source + ":" + std::to_string(lineno) + ": expected 5 fields: family q type ext x");
    if (q.empty() || q.find_first_not_of("0123456789") != std::string::npos || q.size() > 9)
      throw Error(source + ":" + std::to_string(lineno) + ": bad q '" + q + "'");
    r.q = static_cast<std::uint32_t>(std::stoul(q));
    r.line = lineno;
    try {
      parse_lie_family(r.family);
      parse_lie_type(r.type.substr(0, r.type.find(':')));
    } catch (const Error& e) {
      throw Error(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> ext_key(const std::string& ext, std::uint32_t q) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& e : out_closure(Extension::parse(ext), q)) out.emplace_back(e.delta, e.phi);
  std::sort(out.begin(), out.end());
  return out;
}

bool row_matches(const Table2Row& r, const LieCase& c) {
  if (parse_lie_family(r.family) != c.family || r.q != c.q) return false;
  auto colon = r.type.find(':');
  if (parse_lie_type(r.type.substr(0, colon)) != c.type) return false;
  if (colon != std::string::npos && std::to_string(c.q0) != r.type.substr(colon + 1)) return false;
  if (c.family == LieFamily::L2) return ext_key(r.ext, r.q) == ext_key(c.ext, c.q);
  return r.ext == c.ext;
}

bool descriptor_matches(const std::string& want, const std::string& got) {
  if (want == got) return true;
  try {
    return std::to_string(descriptor_prime(got)) == want;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<std::string> table2_discrepancies(const std::vector<Table2Check>& checks, const std::vector<Table2Row>& rows) {
  std::vector<std::string> out;
  std::vector<bool> is_row(checks.size());
  for (const auto& r : rows) {
    bool in_run = false, found = false;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      if (parse_lie_family(r.family) == c.lie_case.family && r.q == c.lie_case.q) in_run = true;
      if (!row_matches(r, c.lie_case)) continue;
      found = true;
      is_row[i] = true;
      if (!c.verdict.ae)
        out.push_back("row " + r.str() + ": not confirmed AE");
      else if (!descriptor_matches(r.x, c.verdict.descriptor))
        out.push_back("row " + r.str() + ": descriptor is " + c.verdict.descriptor);
    }
    if (in_run && !found) out.push_back("row " + r.str() + ": no such case in range");
  }
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (c.verdict.ae && !is_row[i]) out.push_back("case " + c.lie_case.str() + ": AE but not a table row");
    if (!c.agree) out.push_back("case " + c.lie_case.str() + ": engine disagrees: " + c.detail);
  }
  return out;
}

std::string table2_tsv_header() { return "family\tq\ttype\text\tverdict\tdetail\tcrosschecked\tagree"; }

std::string to_tsv(const Table2Check& c) {
  const auto& k = c.lie_case;
  std::string type = to_string(k.type);
  if (k.type == LieType::Subfield) type += ":" + std::to_string(k.q0);
  std::string detail = c.verdict.ae ? c.verdict.descriptor : "";
  if (!c.verdict.ae)
    for (const auto& w : c.verdict.witnesses)
      detail += (detail.empty() ? "" : ",") + std::to_string(w.prime) + "x" + std::to_string(w.classes);
  if (!c.detail.empty()) detail += " (" + c.detail + ")";
  return std::string(to_string(k.family)) + "\t" + std::to_string(k.q) + "\t" + type + "\t" + k.ext + "\t" +
         (c.verdict.ae ? "AE" : "notAE") + "\t" + (detail.empty() ? "-" : detail) + "\t" +
         (c.crosschecked ? "yes" : "no") + "\t" + (c.agree ? "yes" : "NO");
}

}  // namespace derange
