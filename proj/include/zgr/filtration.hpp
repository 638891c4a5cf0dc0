#ifndef ZGR_FILTRATION_HPP
#define ZGR_FILTRATION_HPP

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zgr/config.hpp"
#include "zgr/lattice.hpp"
#include "zgr/ring.hpp"

namespace zgr {

/// Where an element sits in the delta-adic chain.
struct DeltaDepth {
  int observed = 0;    // largest computed n with membership; 0 = not in the first power
  bool omega = false;  // chain stabilized and the element is in the stable term:
                       // it lies in every power
  bool at_cap = false; // in the deepest computed power, chain not stabilized
};

/// The descending chain of augmentation-ideal powers of ZG, as integer
/// lattices in the coordinate module Z^{|G|}. The first power is spanned by
/// {g - 1 : g != 1}; each next power by the previous basis multiplied by all
/// g - 1. Construction stops early once two consecutive powers coincide
/// (every later power then equals the stable one; this is re-verified by
/// computing one extra step).
class DeltaChain {
 public:
  DeltaChain(GroupPtr group, int depth, const Config& cfg = {});

  const GroupPtr& group() const { return group_; }
  int computed_depth() const { return static_cast<int>(lattices_.size()); }
  int requested_depth() const { return depth_requested_; }
  std::optional<int> stabilized_at() const { return stabilized_at_; }

  /// The n-th power, n >= 1. Past the stable index the chain is constant.
  const IntegerLattice& at(int n) const;
  /// Invariant factors of power n over power n+1 (n from 1 to computed-1,
  /// and at the stable index the quotient is empty).
  const std::vector<mpz_class>& quotient_invariants(int n) const;
  int quotient_count() const { return static_cast<int>(quotient_invariants_.size()); }

  DeltaDepth depth_of(const GroupRingElement& x) const;
  bool member(const GroupRingElement& x, int n) const;

  nlohmann::json report() const;

 private:
  GroupPtr group_;
  std::vector<IntegerLattice> lattices_;
  std::vector<std::vector<mpz_class>> quotient_invariants_;
  std::optional<int> stabilized_at_;
  int depth_requested_;
};

/// D_n = {g in G : g - 1 in the n-th power}, returned as a verified Subgroup.
Subgroup dimension_subgroup(const DeltaChain& chain, int n);

struct DimensionSeriesReport {
  GroupPtr group;
  std::vector<Subgroup> d_series;        // D_1 .. D_depth
  std::vector<Subgroup> gamma_series;    // gamma_1 .. aligned to the same depth
  std::vector<Subgroup> rational_d_series;  // filled when requested
  bool d_omega_known = false;
  std::optional<Subgroup> d_omega;       // set when known
  std::optional<int> chain_stabilized_at;
  int depth = 0;

  nlohmann::json to_json() const;
};

DimensionSeriesReport dimension_series_report(GroupPtr g, int depth, bool with_rational,
                                              const Config& cfg = {});

/// n-th power of the rational augmentation ideal, as a canonical subspace.
RationalSubspace rational_delta_power(GroupPtr g, int n);

/// {g : g - 1 in the n-th rational power}. Whole group for every finite G.
Subgroup rational_dimension_subgroup(GroupPtr g, int n);

/// Least m >= 1 with u^m - 1 in the n-th power. Representatives are reduced
/// against the lattice after every multiplication, so coefficients stay
/// bounded; iteration is capped by the index of the n-th power in the first
/// (the residue count), past which u cannot be a unit.
mpz_class unit_order_mod_delta(const GroupRingElement& u, const DeltaChain& chain, int n);

/// Independent route to the n-th power: pairwise products of the bases of
/// lower powers (general ring convolution), rather than the chain's
/// element-times-basis generation. Used as a cross-check oracle.
IntegerLattice delta_power_by_products(GroupPtr g, int n);

}  // namespace zgr

#endif
