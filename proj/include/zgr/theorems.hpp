#ifndef ZGR_THEOREMS_HPP
#define ZGR_THEOREMS_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "zgr/filtration.hpp"
#include "zgr/group.hpp"

namespace zgr {

/// Torsion-free rank of the normalized unit group of ZA for finite abelian A:
/// rho = (|A| + n2 - 2 c_A + 1) / 2, n2 the number of involutions, c_A the
/// number of cyclic subgroups. The division is always exact.
struct RankReport {
  long order = 0;
  long n2 = 0;
  long cyclic_subgroups = 0;
  long rho = 0;

  nlohmann::json to_json() const;
};

RankReport abelian_rank(GroupPtr a);

/// One verifier outcome with enough evidence to re-check it.
struct Verdict {
  std::string id;
  std::string group_hash;
  std::string group_desc;
  bool holds = false;
  nlohmann::json evidence;

  nlohmann::json to_json() const;
};

/// Ranks of C_p, C_q, C_pq and whether the strict gap
/// rho(C_pq) > rho(C_p) + rho(C_q) holds; it must for every prime pair
/// except exactly (2,3). `holds` = observed pattern matches that rule.
Verdict rank_gap_table(int p, int q, const Config& cfg = {});

/// Abelian group with only trivial central units in ZG: exponent divides 4 or 6.
bool is_abelian_cut(GroupPtr a);

/// Detects the K8 x E shape: a subgroup Q of order 8 with a unique involution
/// times a central elementary-abelian 2-complement. Structural, no general
/// isomorphism testing.
struct K8xEDecomposition {
  std::vector<int> q_elements;
  std::vector<int> e_elements;
};
std::optional<K8xEDecomposition> find_k8xe(GroupPtr g);

/// Classifier: the unit filtration of ZG reaches {1} at a finite step iff
/// G is an abelian cut-group or K8 x E. Attaches D_3 = {1} evidence in the
/// second case.
Verdict classify_terminating(GroupPtr g, const Config& cfg = {});

/// Classifier: the full delta-adic residue of the unit group is trivial iff
/// G is abelian of exponent 6 or a p-group. Attaches the dimension chain
/// reaching {1} for p-groups when it does so within the default depth.
Verdict classify_trivial_residue(GroupPtr g, const Config& cfg = {});

/// Elements whose order is divisible by two distinct primes other than the
/// pair (2,3); an empty list satisfies the constraint.
Verdict order_pq_scan(GroupPtr g);

/// Elements of infinite p-height computed over the finite ranges that exhaust
/// all cases: i <= v_p(exponent)+1, j <= stabilization of the lower central
/// series. Always a normal subgroup.
Subgroup p_height_subgroup(GroupPtr g, int p);

/// Intersection of gamma_l(G) G^{p^k} over the same exhausting ranges.
Subgroup kp_residue(GroupPtr g, int p);

struct DiscriminationResult {
  bool discriminated = false;
  int prime = 0;  // a prime whose residue misses g, when discriminated
  int l = 0, k = 0;  // a witnessing quotient gamma_l G^{p^k}
};

/// Is g separated from 1 by some nilpotent p-group quotient of bounded
/// exponent (i.e. outside kp_residue for some prime dividing |G|)?
DiscriminationResult k_discriminated(GroupPtr g, int x);

/// For g1 not discriminated from 1 and any g: the commutator c = [g1,g]
/// satisfies c - 1 in every computed delta power. Throws PreconditionError
/// (with the separating quotient in the message) when g1 is discriminated.
Verdict commutator_residue_witness(GroupPtr g, int g1, int x, const DeltaChain& chain);

}  // namespace zgr

#endif
