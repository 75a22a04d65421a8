#include <map>

#include "derange/lieclass.hpp"
#include "derange/su3.hpp"

namespace derange {

namespace {

bool u3_index_built(std::uint32_t q, std::uint32_t k) {
  switch (q) {
    case 3: return k == 1 || k == 2;
    case 4: return k == 1 || k == 2 || k == 4;
    case 5: return k == 1 || k == 2 || k == 3 || k == 6;
  }
  return false;
}

std::uint32_t u3_index_of(const std::string& ext) {
  if (ext.empty() || ext == "G0") return 1;
  return static_cast<std::uint32_t>(std::stoul(ext.substr(3)));
}

L2Type l2_type(LieType t) {
  switch (t) {
    case LieType::P1: return L2Type::P1;
    case LieType::TorusSplit: return L2Type::TorusSplit;
    case LieType::TorusNonsplit: return L2Type::TorusNonsplit;
    case LieType::Subfield: return L2Type::Subfield;
    default: throw Error(std::string("type ") + to_string(t) + " is not constructed");
  }
}

}  // namespace

std::uint64_t descriptor_prime(const std::string& d) {
  if (d == "t1'") return 2;
  if (d == "[J2,J1]") return 3;
  return std::stoull(d);
}

bool lie_constructible(const LieCase& c) {
  try {
    classify_lie(c);
  } catch (const Error&) {
    return false;
  }
  switch (c.family) {
    case LieFamily::L2:
      return c.q <= 81 && (c.type == LieType::P1 || c.type == LieType::TorusSplit ||
                           c.type == LieType::TorusNonsplit || c.type == LieType::Subfield);
    case LieFamily::U3:
      return (c.type == LieType::P1 || c.type == LieType::GU2xGU1) && u3_index_built(c.q, u3_index_of(c.ext));
    default: return false;
  }
}

TransitiveAction lie_action(const LieCase& c, const ClassOptions& opts) {
  if (!lie_constructible(c)) throw Error(c.str() + " is not constructible");
  if (c.family == LieFamily::L2) {
    ProjectiveGroup g(c.q, Extension::parse(c.ext));
    return coset_action(g.group(), l2_subgroup(g, l2_type(c.type), c.q0), opts.cap_index);
  }
  return su3_action(c.q, c.type == LieType::P1 ? Su3Variant::Isotropic : Su3Variant::Nonisotropic, u3_index_of(c.ext),
                    opts.cap_index);
}

CrosscheckReport compare_with_engine(const LieCase& c, const LieVerdict& v, const ElusivityVerdict& e) {
  CrosscheckReport r;
  r.lie_case = c;
  r.verdict = v;
  r.constructible = true;
  r.engine_status = e.status;
  r.engine_descriptor = e.descriptor();
  const bool engine_ae = e.status == Status::AlmostElusive;
  if (v.ae != engine_ae) {
    r.detail = std::string("engine says ") + to_string(e.status);
    return r;
  }
  if (v.ae) {
    if (e.derangement_classes.front().prime != descriptor_prime(v.descriptor)) {
      r.detail = "engine derangement prime is " + std::to_string(e.derangement_classes.front().prime);
      return r;
    }
  } else {
    std::map<std::uint64_t, std::uint64_t> per_prime;
    for (const auto& d : e.derangement_classes) ++per_prime[d.prime];
    std::map<std::uint64_t, std::uint64_t> claimed;
    for (const auto& w : v.witnesses) claimed[w.prime] += w.classes;
    for (const auto& [p, n] : claimed)
      if (per_prime[p] < n) {
        r.detail = "witness " + std::to_string(p) + " claims " + std::to_string(n) + " classes, engine finds " +
                   std::to_string(per_prime[p]);
        return r;
      }
    if (v.exact && v.certified() != e.derangement_classes.size()) {
      r.detail = "exact count " + std::to_string(v.certified()) + " but engine finds " +
                 std::to_string(e.derangement_classes.size());
      return r;
    }
  }
  r.agree = true;
  return r;
}

CrosscheckReport crosscheck(const LieCase& c, const ClassOptions& opts) {
  if (!lie_constructible(c)) {
    CrosscheckReport r;
    r.lie_case = c;
    r.detail = "not constructible";
    return r;
  }
  return compare_with_engine(c, classify_lie(c), classify(lie_action(c, opts), opts));
}

}  // namespace derange
