#include "zgr/units.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

namespace zgr {

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::trivial:
      return "trivial(" + std::to_string(g) + ")";
    case Kind::bass:
      return "bass(" + std::to_string(g) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
    case Kind::bicyclic:
      return "bicyclic(" + std::to_string(g) + "," + std::to_string(h) + ")";
    case Kind::nilpotent_based:
      return "nilpotent_based(alpha," + std::to_string(h) + ")";
  }
  return "?";
}

namespace {

void verify_unit(const UnitRecord& u) {
  if (u.element.augmentation() != 1)
    throw Error("unit does not have augmentation 1: " + u.provenance.describe());
  if (!(u.element * u.inverse).is_one() || !(u.inverse * u.element).is_one())
    throw Error("inverse verification failed: " + u.provenance.describe());
}

const char* prov_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::trivial: return "trivial";
    case Provenance::Kind::bass: return "bass";
    case Provenance::Kind::bicyclic: return "bicyclic";
    case Provenance::Kind::nilpotent_based: return "nilpotent_based";
  }
  return "?";
}

}  // namespace

void attach_depth(UnitRecord& u, const DeltaChain& chain) {
  u.depth = chain.depth_of(u.element - GroupRingElement::one(u.element.group()));
}

nlohmann::json UnitRecord::to_json() const {
  nlohmann::json prov{{"kind", prov_name(provenance.kind)}};
  if (provenance.g >= 0) prov["g"] = provenance.g;
  if (provenance.h >= 0) prov["h"] = provenance.h;
  if (provenance.kind == Provenance::Kind::bass) {
    prov["k"] = provenance.k;
    prov["m"] = provenance.m;
  }
  nlohmann::json j{{"element", element.to_json()},
                   {"inverse", inverse.to_json()},
                   {"provenance", prov},
                   {"trivial", trivial},
                   {"trivial_reason", trivial_reason}};
  if (depth) {
    j["depth"] = {{"observed", depth->observed}, {"omega", depth->omega}, {"at_cap", depth->at_cap}};
  }
  if (coprime_orders) j["coprime_orders"] = *coprime_orders;
  return j;
}

UnitRecord trivial_unit(GroupPtr group, int g) {
  UnitRecord u{GroupRingElement::basis(group, g), GroupRingElement::basis(group, group->inv(g)),
               Provenance{Provenance::Kind::trivial, g}, false, "", std::nullopt, std::nullopt};
  u.trivial = true;
  u.trivial_reason = "group element";
  verify_unit(u);
  return u;
}

UnitRecord bicyclic_unit(GroupPtr group, int g, int h) {
  GroupRingElement one = GroupRingElement::one(group);
  GroupRingElement ghat = group_sum(group, g);
  GroupRingElement b =
      (GroupRingElement::basis(group, g) - one) * GroupRingElement::basis(group, h) * ghat;
  UnitRecord u{one + b, one - b, Provenance{Provenance::Kind::bicyclic, g, h},
               false, "", std::nullopt, std::nullopt};
  // h normalizes <g> iff h^-1 g h is a power of g
  std::vector<char> in_cyc(group->order(), 0);
  int x = 0;
  do {
    in_cyc[x] = 1;
    x = group->mul(x, g);
  } while (x != 0);
  bool normalizes = in_cyc[group->conj(g, h)];
  u.trivial = normalizes;
  u.trivial_reason = normalizes ? "h normalizes <g>" : "h does not normalize <g>";
  if (normalizes != u.element.is_one())
    throw Error("bicyclic triviality disagrees with the normalizer test");
  verify_unit(u);
  return u;
}

UnitRecord bass_unit(GroupPtr group, int g, long k, long m) {
  if (k < 1 || m < 1) throw PreconditionError("bass unit needs k, m >= 1");
  long n = group->element_order(g);
  mpz_class km;
  mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
  if (km % n != 1 % n) throw PreconditionError("bass unit needs k^m = 1 mod order(g)");

  GroupRingElement partial(group);  // 1 + g + ... + g^{k-1}
  for (long i = 0; i < k; ++i) partial += GroupRingElement::basis(group, group->power(g, i));
  GroupRingElement acc = GroupRingElement::one(group);
  for (long i = 0; i < m; ++i) acc = acc * partial;
  mpz_class correction = (1 - km) / n;
  if ((1 - km) % n != 0) throw Error("bass correction is not integral");  // excluded by the precondition
  UnitRecord u{acc + correction * group_sum(group, g), GroupRingElement::zero(group),
               Provenance{Provenance::Kind::bass, g, -1, k, m}, false, "", std::nullopt,
               std::nullopt};
  auto inv = inverse_in_ring(u.element);
  if (!inv) throw Error("bass unit has no integral inverse");  // cannot happen under the precondition
  u.inverse = std::move(*inv);
  long kr = k % n;
  u.trivial = (kr == 1 % n) || (kr == (n - 1) % n);
  u.trivial_reason = u.trivial ? "k = +-1 mod order(g)" : "k != +-1 mod order(g)";
  verify_unit(u);
  return u;
}

NilpotentSearchResult nilpotent_search(GroupPtr group, int coeff_bound, int support_bound,
                                       long work_cap) {
  NilpotentSearchResult res;
  if (group->is_abelian()) {
    res.definitive_none = true;
    res.note = "commutative group ring, no nonzero nilpotent elements";
    return res;
  }
  GroupRingElement one = GroupRingElement::one(group);
  for (int g = 1; g < group->order(); ++g) {
    GroupRingElement gm1 = GroupRingElement::basis(group, g) - one;
    GroupRingElement ghat = group_sum(group, g);
    for (int h = 1; h < group->order(); ++h) {
      ++res.candidates_tried;
      GroupRingElement alpha = gm1 * GroupRingElement::basis(group, h) * ghat;
      if (alpha.is_zero()) continue;
      if (!(alpha * alpha).is_zero()) throw Error("canonical family candidate is not square-zero");
      res.witness = std::move(alpha);
      res.note = "canonical family (g-1) h ghat, g=" + std::to_string(g) + " h=" + std::to_string(h);
      return res;
    }
  }

  // bounded brute force: small supports, coefficients in [-bound, bound],
  // augmentation 0 (any nilpotent has augmentation 0)
  int n = group->order();
  support_bound = std::min(support_bound, n);
  std::vector<int> support;
  std::vector<int> coeff;
  long tried = 0;
  bool capped = false;

  // iterate over support subsets by recursion, innermost over coefficient tuples
  std::function<bool(int, int)> scan_support = [&](int start, int remaining) -> bool {
    if (!support.empty()) {
      // enumerate coefficient tuples over the chosen support
      std::vector<int> c(support.size(), -coeff_bound);
      for (;;) {
        if (++tried >= work_cap) {
          capped = true;
          return false;
        }
        long aug = std::accumulate(c.begin(), c.end(), 0L);
        bool all_nonzero = std::none_of(c.begin(), c.end(), [](int x) { return x == 0; });
        if (aug == 0 && all_nonzero) {
          std::map<int, mpz_class> coeffs;
          for (std::size_t i = 0; i < support.size(); ++i) coeffs[support[i]] = c[i];
          GroupRingElement alpha = GroupRingElement::from_coeffs(group, std::move(coeffs));
          if (!alpha.is_zero() && (alpha * alpha).is_zero()) {
            res.witness = std::move(alpha);
            res.note = "brute force, support " + std::to_string(support.size());
            return true;
          }
        }
        // next tuple
        std::size_t i = 0;
        while (i < c.size() && c[i] == coeff_bound) c[i++] = -coeff_bound;
        if (i == c.size()) break;
        ++c[i];
      }
    }
    if (remaining == 0) return false;
    for (int e = start; e < n; ++e) {
      support.push_back(e);
      if (scan_support(e + 1, remaining - 1)) return true;
      support.pop_back();
      if (capped) return false;
    }
    return false;
  };
  scan_support(0, support_bound);
  res.candidates_tried += tried;
  if (!res.witness)
    res.note = capped ? "none found within bounds (work cap reached)" : "none found within bounds";
  return res;
}

UnitRecord nilpotent_based_unit(const DirectProduct& gh, const GroupRingElement& alpha, int h) {
  if (!(alpha * alpha).is_zero()) throw PreconditionError("alpha must satisfy alpha^2 = 0");
  if (h < 0 || h >= gh.right_order) throw PreconditionError("h is not an element of the right factor");
  const GroupPtr& big = gh.group;
  if (alpha.group()->order() != gh.left_order)
    throw PreconditionError("alpha does not live on the left factor of the product");
  GroupRingElement lifted(big);
  for (const auto& [g, c] : alpha.coeffs())
    lifted += c * GroupRingElement::basis(big, gh.embed_left(g));
  GroupRingElement hm1 =
      GroupRingElement::basis(big, gh.embed_right(h)) - GroupRingElement::one(big);
  GroupRingElement t = lifted * hm1;
  if (!(t * t).is_zero()) throw Error("alpha (h-1) is not square-zero in the product");
  UnitRecord u{GroupRingElement::one(big) + t, GroupRingElement::one(big) - t,
               Provenance{Provenance::Kind::nilpotent_based, -1, gh.embed_right(h)}, false, "",
               std::nullopt, std::nullopt};
  u.trivial = t.is_zero();
  u.trivial_reason = u.trivial ? "alpha (h-1) = 0" : "1 + alpha(h-1) with alpha(h-1) != 0";
  // figure the two factor orders' gcd; the delta-adic membership claim needs it
  u.coprime_orders = std::gcd(gh.left_order, gh.right_order) == 1;
  verify_unit(u);
  return u;
}

TorsionVerdict torsion_probe(const UnitRecord& u, long bound) {
  TorsionVerdict v;
  v.bound = bound;
  GroupRingElement w = u.element;
  for (long m = 1; m <= bound; ++m) {
    if (w.is_one()) {
      v.order = m;
      return v;
    }
    w = w * u.element;
  }
  return v;
}

}  // namespace zgr
