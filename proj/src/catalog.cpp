#include "zgr/catalog.hpp"

#include <algorithm>
#include <set>

namespace zgr {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<CatalogEntry> catalog(int max_order, const Config& cfg) {
  if (max_order > cfg.order_cap)
    throw SizeError("catalog max_order exceeds the order cap " + std::to_string(cfg.order_cap));
  std::vector<std::string> specs;
  for (int n = 1; n <= max_order; ++n) specs.push_back("cyclic(" + std::to_string(n) + ")");
  for (int p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    long pk = static_cast<long>(p) * p;
    for (int k = 2; pk <= max_order; ++k, pk *= p)
      specs.push_back("elemab(" + std::to_string(p) + "," + std::to_string(k) + ")");
  }
  for (int n = 3; 2 * n <= max_order; ++n) specs.push_back("dihedral(" + std::to_string(n) + ")");
  if (max_order >= 8) specs.push_back("quaternion(8)");
  if (max_order >= 6) specs.push_back("sym(3)");
  if (max_order >= 24) specs.push_back("sym(4)");
  if (max_order >= 12) specs.push_back("alt(4)");

  // binary direct products over a small seed family
  std::vector<std::pair<std::string, int>> seeds;
  for (int n = 2; n <= 16; ++n) seeds.emplace_back("cyclic(" + std::to_string(n) + ")", n);
  seeds.emplace_back("elemab(2,2)", 4);
  seeds.emplace_back("elemab(2,3)", 8);
  seeds.emplace_back("elemab(3,2)", 9);
  seeds.emplace_back("dihedral(3)", 6);
  seeds.emplace_back("dihedral(4)", 8);
  seeds.emplace_back("quaternion(8)", 8);
  seeds.emplace_back("sym(3)", 6);
  seeds.emplace_back("alt(4)", 12);
  for (const auto& [sa, na] : seeds)
    for (const auto& [sb, nb] : seeds)
      if (static_cast<long>(na) * nb <= max_order)
        specs.push_back("product(" + sa + "," + sb + ")");

  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  for (const auto& s : specs) {
    GroupPtr g = build_group(parse_spec(s), cfg);
    if (seen.insert(g->canonical_hash()).second) out.push_back({s, std::move(g)});
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.group->order() != b.group->order()) return a.group->order() < b.group->order();
    return a.spec < b.spec;
  });
  return out;
}

std::vector<CatalogEntry> abelian_catalog(int max_order, const Config& cfg) {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog(max_order, cfg))
    if (e.group->is_abelian()) out.push_back(std::move(e));
  return out;
}

}  // namespace zgr
