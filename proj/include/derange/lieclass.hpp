#ifndef DERANGE_LIECLASS_HPP
#define DERANGE_LIECLASS_HPP

#include <string>
#include <vector>

#include "derange/elusive.hpp"
#include "derange/groups.hpp"

namespace derange {

enum class LieFamily { L2, U3, Ree, Suzuki };
const char* to_string(LieFamily f);
LieFamily parse_lie_family(const std::string& s);

// Types of the point stabilizer H. Not every type exists in every family.
enum class LieType {
  P1,
  TorusSplit,     // L2: GL1(q) wr S2
  TorusNonsplit,  // L2: GL1(q^2)
  Subfield,       // q = q0^k, k prime
  Extraspecial,   // L2: 2^{1+2}.O2-(2)
  A5,
  GU2xGU1,
  GU1wrS3,
  GU1q3,          // GU1(q^3)
  SO3,
  Ext3,           // 3^{1+2}.Sp2(3)
  L27,
  A6,
  Borel,
  TwoByL2,        // Ree: 2 x L2(q)
  InvNormalizer,  // Ree: (2^2 x D_{(q+1)/2}):3
  TorusPlus,      // Ree (q+sqrt(3q)+1):6, Suzuki (q+sqrt(2q)+1):4
  TorusMinus,
  Dihedral,       // Suzuki: D_{2(q-1)}
};
const char* to_string(LieType t);
LieType parse_lie_type(const std::string& s);

/// One (G0, H, G) triple. `ext` is an L2 extension ("G0", "pgl", "phi", "deltaphi2", ...)
/// or "G0.k" (|G:G0| = k) for U3; Ree and Suzuki ignore it.
struct LieCase {
  LieFamily family = LieFamily::L2;
  std::uint32_t q = 0;
  LieType type = LieType::P1;
  std::uint32_t q0 = 0;  // subfield types only
  std::string ext = "G0";
  std::string str() const;
};

/// A family of derangements of prime order in G0: at least `classes` G-classes.
struct Witness {
  std::uint64_t prime = 0;
  std::uint64_t classes = 1;
  bool avoids_h0 = false;  // the reason is that prime does not divide |H0|
  std::string reason;
};

struct LieVerdict {
  bool ae = false;
  std::string descriptor;          // when ae: a prime, "t1'" or "[J2,J1]"
  std::vector<Witness> witnesses;  // when not ae
  bool exact = false;              // witnesses list every derangement class of prime order
  BigInt order_g0, order_h0;
  std::string note;

  std::uint64_t certified() const;
  std::string str() const;
};

BigInt lie_g0_order(LieFamily f, std::uint32_t q);
/// |H cap G0|; throws on an inadmissible case.
BigInt lie_h0_order(const LieCase& c);

LieVerdict classify_l2(const LieCase& c);
LieVerdict classify_u3(const LieCase& c);
LieVerdict classify_ree_suzuki(const LieCase& c);
LieVerdict classify_lie(const LieCase& c);

/// "t1" or "t1'": which involution type lies in L2(q), q odd.
std::string l2_g0_involution_type(std::uint32_t q);

/// Prime of a descriptor: "t1'" -> 2, "[J2,J1]" -> 3, a number otherwise.
std::uint64_t descriptor_prime(const std::string& d);

/// Every subgroup of Out(L2(q)) = C_d x C_f, one generating set each.
std::vector<Extension> l2_extensions(std::uint32_t q);

struct CrosscheckReport {
  LieCase lie_case;
  LieVerdict verdict;
  bool constructible = false;
  bool agree = false;
  Status engine_status = Status::Elusive;
  std::string engine_descriptor;
  std::string detail;  // reason for disagreement, or why it was skipped
};

/// Engine action for a constructible case; throws if not constructible.
TransitiveAction lie_action(const LieCase& c, const ClassOptions& opts = {});
bool lie_constructible(const LieCase& c);
/// Compares a classifier verdict with an engine verdict on the same case.
CrosscheckReport compare_with_engine(const LieCase& c, const LieVerdict& v, const ElusivityVerdict& e);
CrosscheckReport crosscheck(const LieCase& c, const ClassOptions& opts = {});

}  // namespace derange

#endif  // DERANGE_LIECLASS_HPP
