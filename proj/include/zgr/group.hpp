#ifndef ZGR_GROUP_HPP
#define ZGR_GROUP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgr/config.hpp"
#include "zgr/errors.hpp"

namespace zgr {

/// A finite group presented by its Cayley table. Element 0 is the identity.
/// Instances are immutable after construction; share them freely.
class FiniteGroup {
 public:
  // `table` is row-major order x order, table[i*order+j] = index of e_i * e_j.
  // Checks the identity and inverse laws always; checks associativity
  // exhaustively when order <= kAssocAutoCheck (call check_associativity()
  // yourself for bigger tables).
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels = {});

  static constexpr int kAssocAutoCheck = 64;

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g^-1 a g
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
  /// [a,b] = a^-1 b^-1 a b
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int power(int a, long e) const;
  int element_order(int a) const { return orders_[a]; }
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int a) const;
  /// Index of the element with the given label, if labels are present.
  std::optional<int> index_of_label(const std::string& s) const;

  /// Digest of the Cayley table bytes; equal tables, equal hashes.
  const std::string& canonical_hash() const { return hash_; }

  /// Exhaustive check of (ab)c = a(bc); throws Error on violation.
  void check_associativity() const;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::string hash_;
  long exponent_ = 1;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as its full (sorted) element set. Construction verifies
/// closure under product and inverse and that the identity is present.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  static Subgroup generated_by(GroupPtr parent, const std::vector<int>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const { return member_[g]; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return order() == parent_->order(); }

  bool contains_subgroup(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_->canonical_hash() == b.parent_->canonical_hash() && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;   // sorted indices
  std::vector<char> member_;    // bitmap over parent
  bool normal_;
};

/// Product of two subgroups A*B = {ab}, as an element set. Only a subgroup
/// when one factor normalizes the other; callers that need a subgroup wrap
/// the result in Subgroup (which re-verifies closure).
std::vector<int> set_product(const FiniteGroup& g, const std::vector<int>& a,
                             const std::vector<int>& b);

Subgroup center(GroupPtr g);

/// gamma_1 >= gamma_2 >= ... with gamma_{n+1} = <[x,g] : x in gamma_n, g in G>.
/// The last stored term is the stable tail: either it is trivial (then every
/// later term is too) or it equals the term before it (the repetition is kept
/// so the stabilization is witnessed in the list itself).
struct LowerCentralSeries {
  std::vector<Subgroup> terms;

  /// gamma_n for any n >= 1 (the tail extends indefinitely).
  const Subgroup& at(int n) const;
  /// Smallest n with gamma_n = gamma_{n+1}.
  int stabilization_index() const;
  bool nilpotent() const { return terms.back().is_trivial(); }
  /// Nilpotency class, or nullopt when the series stabilizes above {1}.
  std::optional<int> nilpotency_class() const;
};

LowerCentralSeries lower_central_series(GroupPtr g);

/// gamma_l(G) * G^{p^k}, where G^{p^k} = <x^{p^k} : x in G>. Always normal.
Subgroup power_series_subgroup(GroupPtr g, int p, int k, int l);
Subgroup power_series_subgroup(GroupPtr g, const LowerCentralSeries& lcs, int p, int k, int l);

/// The subgroup <x^{p^k} : x in G>.
Subgroup power_subgroup(GroupPtr g, int p, int k);

struct QuotientGroup {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<int> projection;  // parent index -> quotient index
};

/// G/N with coset indices in order of first appearance (identity coset = 0).
/// Verifies that the projection is a homomorphism with the stated kernel.
QuotientGroup quotient_group(GroupPtr g, const Subgroup& kernel);

/// Invariant factors d_1 | d_2 | ... | d_k (all > 1) of a finite abelian
/// group, by peeling off maximal-order cyclic summands.
std::vector<long> abelian_invariants(GroupPtr g);

struct StructureReport {
  int order = 0;
  long exponent = 1;
  bool abelian = false;
  bool nilpotent = false;
  std::optional<int> nilpotency_class;
  int center_order = 0;
  std::map<int, int> order_histogram;       // element order -> count
  std::vector<int> gamma_orders;            // |gamma_1|, |gamma_2|, ...
  std::vector<long> abelianization;         // invariant factors of G/gamma_2
};

StructureReport structural_report(GroupPtr g);

// ---- builders -------------------------------------------------------------

GroupPtr build_cyclic(int n, const Config& cfg = {});
GroupPtr build_elemab(int p, int k, const Config& cfg = {});
GroupPtr build_dihedral(int n, const Config& cfg = {});   // order 2n, n >= 3
GroupPtr build_quaternion8();
GroupPtr build_sym(int n, const Config& cfg = {});
GroupPtr build_alt(int n, const Config& cfg = {});

/// Direct product with pair indexing (a,b) -> a*|B|+b, so the two embeddings
/// stay available to callers (unit constructions need them).
struct DirectProduct {
  GroupPtr group;
  int left_order = 1;
  int right_order = 1;
  int embed_left(int a) const { return a * right_order; }
  int embed_right(int b) const { return b; }
  std::pair<int, int> split(int i) const { return {i / right_order, i % right_order}; }
};

DirectProduct build_product(GroupPtr a, GroupPtr b, const Config& cfg = {});

/// Closure of a permutation generating set, indexed in BFS insertion order
/// from the identity. Each generator is an image vector on 0..degree-1.
GroupPtr build_perm_group(const std::vector<std::vector<int>>& generators, const Config& cfg = {});

}  // namespace zgr

#endif
