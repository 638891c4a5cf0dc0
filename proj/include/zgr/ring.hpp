#ifndef ZGR_RING_HPP
#define ZGR_RING_HPP

#include <gmpxx.h>

#include <map>
#include <optional>

#include <nlohmann/json_fwd.hpp>

#include "zgr/group.hpp"
#include "zgr/lattice.hpp"

namespace zgr {

/// An element of the integral group ring ZG: a finitely supported map from
/// element indices to integers. Zero coefficients are never stored.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupRingElement zero(GroupPtr group) { return GroupRingElement(std::move(group)); }
  static GroupRingElement one(GroupPtr group) { return basis(std::move(group), 0); }
  static GroupRingElement basis(GroupPtr group, int g);
  static GroupRingElement from_coeffs(GroupPtr group, std::map<int, mpz_class> coeffs);

  const GroupPtr& group() const { return group_; }
  const std::map<int, mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int g) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  mpz_class augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  GroupRingElement operator-() const;
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const mpz_class& c, const GroupRingElement& a);

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_->canonical_hash() == b.group_->canonical_hash() && a.coeffs_ == b.coeffs_;
  }

  ZVec dense() const;
  static GroupRingElement from_dense(GroupPtr group, const ZVec& v);

  /// {"group": "<hash>", "coeffs": {"<index>": "<decimal>"}} — decimal strings
  /// so coefficients survive any JSON integer width.
  nlohmann::json to_json() const;
  static GroupRingElement from_json(GroupPtr group, const nlohmann::json& j);

 private:
  void set(int g, mpz_class v);

  GroupPtr group_;
  std::map<int, mpz_class> coeffs_;
};

/// g-hat = 1 + g + g^2 + ... + g^{order(g)-1}.
GroupRingElement group_sum(GroupPtr group, int g);

/// Two-sided inverse of u in ZG, or nullopt. Solves the left-multiplication
/// system exactly over Q and accepts only integral solutions; the result is
/// re-verified by multiplication on both sides.
std::optional<GroupRingElement> inverse_in_ring(const GroupRingElement& u);

}  // namespace zgr

#endif
