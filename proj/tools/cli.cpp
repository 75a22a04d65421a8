#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include "derange/elusive.hpp"
#include "derange/lieclass.hpp"
#include "derange/specs.hpp"
#include "derange/tables.hpp"

namespace derange {

namespace {

struct Globals {
  std::string cap_order = "10000000";
  std::size_t cap_index = kDefaultIndexCap;
  std::uint64_t seed = 0;

  ClassOptions options() const {
    ClassOptions o;
    o.cap_order = BigInt(cap_order);
    o.cap_index = cap_index;
    o.seed = seed;
    return o;
  }
};

Backend parse_backend(const std::string& s) {
  if (s == "auto") return Backend::Auto;
  if (s == "exhaustive") return Backend::Exhaustive;
  if (s == "cosets") return Backend::SymmetricCosets;
  if (s == "randomized") return Backend::Randomized;
  throw Error("unknown backend '" + s + "'");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Symbolic row plus, for n <= engine_nmax, the engine's verdict on the same action.
int scan_rows(const std::string& prefix, std::uint32_t nmin, std::uint32_t nmax, std::uint32_t engine_nmax,
              const ClassOptions& opts, std::ostream& out, std::ostream& err) {
  out << "n\tgroup\taction\tverdict\tshape\tengine\n";
  int bad = 0;
  for (const auto& r : scan_table1_all(nmax)) {
    if (r.n < nmin || r.action.rfind(prefix, 0) != 0) continue;
    std::string engine = "-";
    if (r.n <= engine_nmax) {
      auto v = classify(table1_action(r, opts), opts);
      bool ae = v.status == Status::AlmostElusive;
      std::string shape = ae ? v.derangement_classes.front().cycle_type.str() : "";
      bool agree = ae == r.ae && (!ae || shape == r.shape);
      engine = agree ? "agrees" : "DISAGREES";
      if (!agree) {
        ++bad;
        err << "discrepancy: " << r.group << r.n << " " << r.action << "\n";
      }
    }
    out << r.n << "\t" << r.group << "\t" << r.action << "\t" << (r.ae ? "AE" : "notAE") << "\t"
        << (r.shape.empty() ? "-" : r.shape) << "\t" << engine << "\n";
  }
  return bad ? 1 : 0;
}

void print_group_summary(const PermGroup& g, std::ostream& out) {
  auto orbits = g.orbits();
  out << "degree: " << g.degree() << "\n"
      << "generators: " << g.generators().size() << "\n"
      << "order: " << g.order() << "\n"
      << "order_factored: " << FactoredInteger::of(g.order()).str() << "\n"
      << "orbits: " << orbits.size() << "\n"
      << "transitive: " << (g.is_transitive() ? "yes" : "no") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derangements of prime order in finite permutation groups", "derange"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap-order", g.cap_order, "largest group order for exhaustive class enumeration")
      ->capture_default_str();
  app.add_option("--cap-index", g.cap_index, "largest coset action degree")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for the randomized backend")->capture_default_str();

  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "classify a coset action G on the cosets of H");
  std::string group_spec, subgroup_spec, backend = "auto";
  bool require_complete = false;
  analyze->add_option("group", group_spec, "S:n, A:n, L2:q[.ext], PGL2:q, PGammaL2:q, U3:q[.k], M11, file:PATH")
      ->required();
  analyze->add_option("subgroup", subgroup_spec,
                      "stab[:N], kset:k, part:axb, P1, torus+, torus-, subfield:q0, nonisotropic, stab12, file:PATH")
      ->required();
  analyze->add_option("--backend", backend, "auto, exhaustive, cosets or randomized")->capture_default_str();
  analyze->add_flag("--require-complete", require_complete, "fail instead of falling back to sampling");
  analyze->callback([&] {
    action = [&] {
      auto t0 = std::chrono::steady_clock::now();
      ClassOptions opts = g.options();
      opts.backend = parse_backend(backend);
      opts.require_complete = require_complete;
      TransitiveAction a = resolve_action(group_spec, subgroup_spec, opts.cap_index);
      ElusivityVerdict v = classify(a, opts);
      out << "group: " << group_spec << "\n"
          << "subgroup: " << subgroup_spec << "\n"
          << "subgroup_order: " << a.stabilizer().order() << "\n"
          << v.serialize();
      if (v.status == Status::AlmostElusive) out << "descriptor: " << v.descriptor() << "\n";
      err << "runtime: " << seconds_since(t0) << " s\n";
      return v.completeness == Completeness::Proved ? 0 : 2;
    };
  });

  auto* vt1 = app.add_subcommand("verify-table1", "recompute every Table 1 case up to degree nmax with the engine");
  std::uint32_t t1_nmax = 13;
  vt1->add_option("--nmax", t1_nmax, "largest degree")->capture_default_str()->check(CLI::Range(5, 40));
  vt1->callback([&] {
    action = [&] {
      out << check_tsv_header() << "\n";
      int bad = 0;
      bool probabilistic = false;
      for (const auto& c : verify_table1(t1_nmax, g.options())) {
        out << to_tsv(c) << "\n";
        if (c.completeness != Completeness::Proved) probabilistic = true;
        if (!c.agrees()) {
          ++bad;
          err << "discrepancy: " << c.expected.group << c.expected.n << " " << c.expected.action << "\n";
        }
      }
      err << (bad ? "FAIL" : "PASS") << ": " << bad << " discrepancies\n";
      return bad ? 1 : probabilistic ? 2 : 0;
    };
  });

  auto* vt2 = app.add_subcommand("verify-table2", "classify every admissible L2 and U3 case and cross-check");
  Table2Options t2;
  std::string rows_path;
  bool no_u3 = false;
  bool engine_given = false;
  vt2->add_option("--qmax", t2.l2_qmax, "largest L2 field order")->capture_default_str()->check(CLI::Range(7, 100000));
  vt2->add_option("--engine-qmax", t2.engine_qmax, "cross-check L2 cases with q up to this bound (default qmax)")
      ->each([&](const std::string&) { engine_given = true; });
  vt2->add_option("--rows", rows_path, "expected AE rows (family q type ext x)");
  vt2->add_flag("--no-u3", no_u3, "skip the U3 cases");
  vt2->callback([&] {
    action = [&] {
      t2.u3 = !no_u3;
      if (!engine_given) t2.engine_qmax = std::min<std::uint32_t>(t2.l2_qmax, 81);
      std::vector<Table2Row> rows;
      if (!rows_path.empty()) {
        std::ifstream in(rows_path);
        if (!in) throw Error("cannot open " + rows_path);
        rows = parse_table2_rows(in, rows_path);
      }
      out << table2_tsv_header() << "\n";
      auto checks = verify_table2(t2, g.options(), [&](const Table2Check& c) { out << to_tsv(c) << "\n"; });
      auto bad = table2_discrepancies(checks, rows);
      for (const auto& d : bad) err << "discrepancy: " << d << "\n";
      err << (bad.empty() ? "PASS" : "FAIL") << ": " << checks.size() << " cases, " << bad.size()
          << " discrepancies\n";
      return bad.empty() ? 0 : 1;
    };
  });

  std::uint32_t scan_nmin = 5, scan_nmax = 20, scan_engine = 0;
  for (auto [name, prefix] : {std::pair{"scan-ksets", "kset:"}, std::pair{"scan-partitions", "part:"}}) {
    auto* s = app.add_subcommand(name, std::string("symbolic verdicts for the ") +
                                           (prefix[0] == 'k' ? "k-set" : "partition") + " actions of S_n and A_n");
    s->add_option("--nmin", scan_nmin)->capture_default_str();
    s->add_option("--nmax", scan_nmax)->capture_default_str()->check(CLI::Range(5, 5000));
    s->add_option("--engine-nmax", scan_engine, "confirm with the engine up to this degree")->capture_default_str();
    s->callback([&, prefix] {
      action = [&, prefix] { return scan_rows(prefix, scan_nmin, scan_nmax, scan_engine, g.options(), out, err); };
    });
  }

  auto* nt = app.add_subcommand("numtheory", "number-theoretic checks");
  nt->require_subcommand(1);
  auto* btv = nt->add_subcommand("btv", "solutions of r^m + 1 = s^n in primes r, s");
  std::vector<std::uint64_t> bounds{1000, 1000, 20, 20};
  btv->add_option("--bounds", bounds, "r_max,s_max,m_max,n_max")->delimiter(',')->expected(4)->capture_default_str();
  btv->callback([&] {
    action = [&] {
      out << "r\tm\ts\tn\tclause\n";
      for (const auto& s : solve_power_plus_one(bounds[0], bounds[1], static_cast<std::uint32_t>(bounds[2]),
                                                static_cast<std::uint32_t>(bounds[3])))
        out << s.r << "\t" << s.m << "\t" << s.s << "\t" << s.n << "\t" << power_plus_one_clause(s) << "\n";
      return 0;
    };
  });
  auto* zs = nt->add_subcommand("zsig", "primitive prime divisors of q^n - 1");
  std::uint64_t zq = 0;
  std::uint32_t zn = 0;
  zs->add_option("q", zq)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  zs->add_option("n", zn)->required()->check(CLI::Range(1, 64));
  zs->callback([&] {
    action = [&] {
      auto ppds = zsigmondy_ppds(zq, zn);
      out << "q^n-1 = " << FactoredInteger::of(ipow(BigInt(zq), zn) - 1).str() << "\nppds:";
      if (ppds.empty()) out << " none";
      for (const auto& r : ppds) out << " " << r;
      out << "\n";
      return 0;
    };
  });
  auto* p6 = nt->add_subcommand("ppd6", "uniqueness of the primitive prime divisor of q^6 - 1");
  std::uint64_t pq = 0;
  p6->add_option("q", pq)->required()->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 20));
  p6->callback([&] {
    action = [&] {
      if (recognize(pq).prime_power == std::nullopt) throw Error(std::to_string(pq) + " is not a prime power");
      auto u = unique_ppd_bound(pq);
      out << "q: " << pq << "\nunique: " << (u.unique ? "yes" : "no") << "\n";
      if (u.unique) out << "r: " << u.r << "\n";
      out << "branch: " << u.branch << "\n";
      return u.branch == "violated" ? 1 : 0;
    };
  });

  auto* ingest = app.add_subcommand("ingest", "read a generator file and report the group");
  std::string ingest_path, emit_path;
  ingest->add_option("path", ingest_path)->required();
  ingest->add_option("--emit", emit_path, "write the generators back out in canonical form");
  ingest->callback([&] {
    action = [&] {
      auto f = read_generator_file(ingest_path);
      PermGroup grp(f.degree, f.gens);
      print_group_summary(grp, out);
      if (!emit_path.empty()) {
        std::ofstream o(emit_path);
        if (!o) throw Error("cannot write " + emit_path);
        write_generators(o, f.degree, f.gens);
      }
      return 0;
    };
  });

  auto* pf = app.add_subcommand("pi-filter", "primes dividing |G| but not |H| (forced derangements)");
  std::string order_g, order_h;
  pf->add_option("order_g", order_g, "integer or factored form such as 2^4*3^2*5*11")->required();
  pf->add_option("order_h", order_h)->required();
  pf->callback([&] {
    action = [&] {
      auto r = pi_filter(FactoredInteger::parse(order_g), FactoredInteger::parse(order_h));
      out << "passes: " << (r.passes ? "yes" : "no") << "\nexcess:";
      if (r.excess.empty()) out << " none";
      for (const auto& p : r.excess) out << " " << p;
      out << "\n";
      return 0;
    };
  });

  auto* cl = app.add_subcommand("classify", "parametric verdict for a group of Lie type");
  std::string family = "l2", type = "p1", ext = "G0";
  std::uint32_t lq = 0, q0 = 0;
  bool do_crosscheck = false;
  cl->add_option("--family", family, "l2, u3, ree or suzuki")->capture_default_str();
  cl->add_option("--q", lq)->required();
  cl->add_option("--type", type)->capture_default_str();
  cl->add_option("--ext", ext, "L2: G0, pgl, phi, deltaphi, phi2, ...; U3: G0.k")->capture_default_str();
  cl->add_option("--q0", q0, "subfield order for type subfield");
  cl->add_flag("--crosscheck", do_crosscheck, "confirm with the engine when the action can be built");
  cl->callback([&] {
    action = [&] {
      LieCase c{parse_lie_family(family), lq, parse_lie_type(type), q0, ext};
      auto v = classify_lie(c);
      out << "case: " << c.str() << "\n" << v.str() << "\n";
      if (!do_crosscheck) return 0;
      auto rep = crosscheck(c, g.options());
      if (!rep.constructible) {
        out << "crosscheck: skipped (" << rep.detail << ")\n";
        return 0;
      }
      out << "crosscheck: " << (rep.agree ? "agrees" : "DISAGREES") << " (engine " << to_string(rep.engine_status)
          << (rep.engine_descriptor.empty() ? "" : ", " + rep.engine_descriptor) << ")\n";
      if (!rep.agree) err << "discrepancy: " << rep.detail << "\n";
      return rep.agree ? 0 : 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }
  try {
    return action ? action() : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace derange
