#ifndef ZGR_GROUPSPEC_HPP
#define ZGR_GROUPSPEC_HPP

#include <memory>
#include <string>
#include <vector>

#include "zgr/group.hpp"

namespace zgr {

/// AST of the group-spec DSL:
///   cyclic(n) | elemab(p,k) | dihedral(n) | quaternion(8) | sym(n) | alt(n)
///   | product(spec,spec) | perm[(1 2),(1 2 3)]
/// Cycles use 1-based points separated by spaces.
struct GroupSpec {
  enum class Kind { cyclic, elemab, dihedral, quaternion, sym, alt, product, perm };
  Kind kind = Kind::cyclic;
  std::vector<long> args;                       // integer arguments
  std::vector<std::shared_ptr<GroupSpec>> sub;  // product factors
  std::vector<std::vector<std::vector<int>>> perms;  // generators as cycle lists, 1-based

  std::string print() const;
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.print() == b.print();
  }
};

/// Parses the DSL; throws ParseError with a byte offset on bad input.
GroupSpec parse_spec(const std::string& text);

GroupPtr build_group(const GroupSpec& spec, const Config& cfg = {});

/// Builds a product spec keeping the factor embeddings.
DirectProduct build_group_product(const GroupSpec& spec, const Config& cfg = {});

}  // namespace zgr

#endif
