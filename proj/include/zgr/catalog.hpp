#ifndef ZGR_CATALOG_HPP
#define ZGR_CATALOG_HPP

#include <string>
#include <vector>

#include "zgr/group.hpp"
#include "zgr/groupspec.hpp"

namespace zgr {

struct CatalogEntry {
  std::string spec;  // canonical DSL text
  GroupPtr group;
};

/// The built-in family catalog up to max_order: cyclic, elementary abelian,
/// dihedral, quaternion(8), sym(3), sym(4), alt(4), and binary direct
/// products of a seed list. Deduplicated by canonical table hash and sorted
/// by (order, spec).
std::vector<CatalogEntry> catalog(int max_order, const Config& cfg = {});

/// The abelian entries only.
std::vector<CatalogEntry> abelian_catalog(int max_order, const Config& cfg = {});

}  // namespace zgr

#endif
