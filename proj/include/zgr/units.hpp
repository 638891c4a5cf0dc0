#ifndef ZGR_UNITS_HPP
#define ZGR_UNITS_HPP

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "zgr/filtration.hpp"
#include "zgr/ring.hpp"

namespace zgr {

struct Provenance {
  enum class Kind { trivial, bass, bicyclic, nilpotent_based };
  Kind kind = Kind::trivial;
  int g = -1;   // trivial / bass / bicyclic
  int h = -1;   // bicyclic / nilpotent_based
  long k = 0;   // bass
  long m = 0;   // bass
  std::string describe() const;
};

/// A normalized unit of ZG with its verified two-sided inverse. Every
/// constructor re-multiplies both ways and checks augmentation 1.
struct UnitRecord {
  GroupRingElement element;
  GroupRingElement inverse;
  Provenance provenance;
  bool trivial = false;
  std::string trivial_reason;
  std::optional<DeltaDepth> depth;   // filled by attach_depth
  std::optional<bool> coprime_orders;  // nilpotent_based only

  nlohmann::json to_json() const;
};

void attach_depth(UnitRecord& u, const DeltaChain& chain);

UnitRecord trivial_unit(GroupPtr group, int g);

/// u = 1 + (g-1) h ghat, inverse 1 - (g-1) h ghat. Trivial (equal to 1)
/// exactly when h normalizes <g>; both the normalizer test and the literal
/// comparison with 1 are recorded.
UnitRecord bicyclic_unit(GroupPtr group, int g, int h);

/// u = (1 + g + ... + g^{k-1})^m + ((1 - k^m)/n) ghat, n = order(g); needs
/// k^m = 1 mod n (the division is then exact). Trivial iff k = +-1 mod n.
UnitRecord bass_unit(GroupPtr group, int g, long k, long m);

struct NilpotentSearchResult {
  std::optional<GroupRingElement> witness;  // alpha != 0 with alpha^2 = 0
  bool definitive_none = false;             // commutative group ring: provably none
  long candidates_tried = 0;
  std::string note;
};

/// Scans (g-1) h ghat over all pairs first, then a bounded brute force over
/// small supports with augmentation 0. Never claims nonexistence except for
/// abelian groups.
NilpotentSearchResult nilpotent_search(GroupPtr group, int coeff_bound = 2, int support_bound = 6,
                                       long work_cap = 2000000);

/// 1 + alpha'(h'-1) in Z[G x H] for alpha in ZG square-zero and h in H,
/// via the product's embeddings. Records whether |G| and |H| are coprime.
UnitRecord nilpotent_based_unit(const DirectProduct& gh, const GroupRingElement& alpha, int h);

struct TorsionVerdict {
  std::optional<long> order;  // least m <= bound with u^m = 1
  long bound = 0;
};

TorsionVerdict torsion_probe(const UnitRecord& u, long bound = 100);

}  // namespace zgr

#endif
