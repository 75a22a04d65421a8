#include "derange/specs.hpp"

#include <fstream>
#include <sstream>

#include "derange/perm_group.hpp"

namespace derange {

GeneratorFile parse_generators(std::istream& in, const std::string& source) {
  GeneratorFile g;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  auto fail = [&](const std::string& why) { return Error(source + ":" + std::to_string(lineno) + ": " + why); };
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (!have_degree) {
      std::string word;
      long long n = 0;
      if (!(ls >> word >> n) || word != "degree" || n < 1 || n > 1'000'000) throw fail("expected 'degree N'");
      std::string extra;
      if (ls >> extra) throw fail("trailing text after degree");
      g.degree = static_cast<std::uint32_t>(n);
      have_degree = true;
      continue;
    }
    std::vector<Point> img;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw fail("'" + tok + "' is not an integer");
      }
      if (used != tok.size()) throw fail("'" + tok + "' is not an integer");
      if (v < 1 || v > g.degree) throw fail("image " + tok + " out of range 1.." + std::to_string(g.degree));
      img.push_back(static_cast<Point>(v - 1));
    }
    if (img.size() != g.degree)
      throw fail("expected " + std::to_string(g.degree) + " images, got " + std::to_string(img.size()));
    std::vector<bool> seen(g.degree);
    for (auto x : img) {
      if (seen[x]) throw fail("not a bijection (" + std::to_string(x + 1) + " repeated)");
      seen[x] = true;
    }
    g.gens.emplace_back(std::move(img));
  }
  if (!have_degree) throw Error(source + ": missing 'degree N' line");
  if (g.gens.empty()) throw Error(source + ": no generators");
  return g;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_generators(in, path);
}

void write_generators(std::ostream& out, std::uint32_t degree, const std::vector<Permutation>& gens) {
  out << "degree " << degree << "\n";
  for (const auto& g : gens) {
    for (std::uint32_t i = 0; i < degree; ++i) out << (i ? " " : "") << g.image(i) + 1;
    out << "\n";
  }
}

namespace {

std::uint32_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw Error("bad " + what + " '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

GroupContext parse_group_spec(const std::string& spec) {
  GroupContext g;
  g.spec = spec;
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "file") {
    auto f = read_generator_file(arg);
    g.family = "file";
    g.group = PermGroup(f.degree, f.gens);
    return g;
  }
  if (head == "M11") {
    if (!arg.empty()) throw Error("M11 takes no parameter");
    g.family = "M11";
    g.group = m11().degree11;
    return g;
  }
  if (arg.empty()) throw Error("group spec '" + spec + "' needs a parameter");
  if (head == "S" || head == "A") {
    g.family = head;
    g.n = parse_uint(arg, "degree");
    if (g.n < 1) throw Error("degree must be positive");
    g.group = head == "S" ? symmetric_group(g.n) : alternating_group(g.n);
    return g;
  }
  auto dot = arg.find('.');
  std::string qs = arg.substr(0, dot), ext = dot == std::string::npos ? "" : arg.substr(dot + 1);
  std::uint32_t q = parse_uint(qs, "field order");
  if (head == "L2" || head == "PGL2" || head == "PGammaL2") {
    if (head == "PGL2") ext = ext.empty() ? "pgl" : "pgl." + ext;
    if (head == "PGammaL2") {
      if (!ext.empty()) throw Error("PGammaL2 takes no extension");
      ext = q % 2 ? "full" : "phi";
    }
    g.family = "L2";
    g.projective = std::make_shared<ProjectiveGroup>(q, Extension::parse(ext));
    g.group = g.projective->group();
    return g;
  }
  if (head == "U3") {
    g.family = "U3";
    g.unitary = std::make_shared<UnitaryGroup>(q, ext.empty() ? 1 : parse_uint(ext, "index"));
    g.group = g.unitary->group();
    return g;
  }
  throw Error("unknown group family '" + head + "'");
}

PermGroup parse_subgroup_spec(const GroupContext& g, const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool alt = g.family == "A";
  if (head == "file") {
    auto f = read_generator_file(arg);
    if (f.degree != g.group.degree()) throw Error(arg + ": degree " + std::to_string(f.degree) + " does not match the group");
    return PermGroup(f.degree, f.gens);
  }
  if (head == "stab" || head == "natural") {
    Point x = 0;
    if (!arg.empty()) {
      x = parse_uint(arg, "point");
      if (x < 1 || x > g.group.degree()) throw Error("point " + arg + " out of range");
      --x;
    }
    return point_stabilizer(g.group, x);
  }
  if (head == "stab12") {
    if (g.family != "M11") throw Error("stab12 needs the group M11");
    return m11().l2_11;
  }
  if (head == "kset" || head == "part") {
    if (g.family != "S" && g.family != "A") throw Error(head + " needs S:n or A:n");
    if (head == "kset") {
      std::uint32_t k = parse_uint(arg, "k");
      if (k < 1 || k >= g.n) throw Error("k must satisfy 1 <= k < n");
      return kset_stabilizer(g.n, k, alt);
    }
    auto x = arg.find('x');
    if (x == std::string::npos) throw Error("partition spec must be part:axb");
    std::uint32_t a = parse_uint(arg.substr(0, x), "block size"), b = parse_uint(arg.substr(x + 1), "block count");
    if (a < 2 || b < 2 || a * b != g.n) throw Error("partition needs a, b >= 2 and ab = n");
    return partition_stabilizer(g.n, a, b, alt);
  }
  if (g.family == "L2") {
    if (head == "P1") return l2_subgroup(*g.projective, L2Type::P1);
    if (head == "torus+") return l2_subgroup(*g.projective, L2Type::TorusSplit);
    if (head == "torus-") return l2_subgroup(*g.projective, L2Type::TorusNonsplit);
    if (head == "subfield") return l2_subgroup(*g.projective, L2Type::Subfield, parse_uint(arg, "q0"));
  }
  if (g.family == "U3") {
    if (head == "P1") return point_stabilizer(g.group, g.unitary->isotropic_point());
    if (head == "nonisotropic") return point_stabilizer(g.group, g.unitary->nonisotropic_point());
  }
  throw Error("subgroup spec '" + spec + "' does not apply to " + g.spec);
}

TransitiveAction resolve_action(const std::string& group_spec, const std::string& subgroup_spec, std::size_t index_cap) {
  GroupContext g = parse_group_spec(group_spec);
  PermGroup h = parse_subgroup_spec(g, subgroup_spec);
  for (const auto& x : h.generators())
    if (!membership(g.group, x)) throw Error(subgroup_spec + " is not a subgroup of " + group_spec);
  return coset_action(g.group, h, index_cap);
}

}  // namespace derange
