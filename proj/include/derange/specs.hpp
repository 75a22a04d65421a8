#ifndef DERANGE_SPECS_HPP
#define DERANGE_SPECS_HPP

#include <iosfwd>
#include <memory>
#include <string>

#include "derange/coset_action.hpp"
#include "derange/groups.hpp"
#include "derange/su3.hpp"

namespace derange {

/// Generator file: "degree N", then one 1-indexed image list per line; '#' comments.
struct GeneratorFile {
  std::uint32_t degree = 0;
  std::vector<Permutation> gens;
};
/// `source` names the input in error messages.
GeneratorFile parse_generators(std::istream& in, const std::string& source = "input");
GeneratorFile read_generator_file(const std::string& path);
void write_generators(std::ostream& out, std::uint32_t degree, const std::vector<Permutation>& gens);

/// A parsed group spec: S:n, A:n, L2:q[.ext], PGL2:q, PGammaL2:q, U3:q[.k], M11, file:PATH.
struct GroupContext {
  std::string family;  // "S", "A", "L2", "U3", "M11", "file"
  std::string spec;
  PermGroup group;
  std::uint32_t n = 0;
  std::shared_ptr<ProjectiveGroup> projective;
  std::shared_ptr<UnitaryGroup> unitary;
};
GroupContext parse_group_spec(const std::string& spec);

/// Subgroup specs: stab, stab:N, natural, kset:k, part:axb, P1, torus+, torus-,
/// subfield:q0, nonisotropic, stab12 (M11 only), file:PATH.
PermGroup parse_subgroup_spec(const GroupContext& g, const std::string& spec);

/// Parses both and builds the coset action; throws if H is not a subgroup.
TransitiveAction resolve_action(const std::string& group_spec, const std::string& subgroup_spec,
                                std::size_t index_cap = kDefaultIndexCap);

}  // namespace derange

#endif  // DERANGE_SPECS_HPP
