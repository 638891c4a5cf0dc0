#include "zgr/filtration.hpp"

#include <nlohmann/json.hpp>

namespace zgr {

namespace {

// rows {g - 1 : g != 1} in dense coordinates
ZMat delta_generators(const FiniteGroup& g) {
  ZMat rows;
  for (int x = 1; x < g.order(); ++x) {
    ZVec r(g.order(), 0);
    r[0] = -1;
    r[x] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

// (g - 1) * b for a dense row b: permute coordinates by left translation, subtract b.
ZVec translate_minus(const FiniteGroup& grp, int g, const ZVec& b) {
  int n = grp.order();
  ZVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (b[i] == 0) continue;
    out[grp.mul(g, i)] += b[i];
    out[i] -= b[i];
  }
  return out;
}

IntegerLattice next_power(const FiniteGroup& grp, const IntegerLattice& cur) {
  ZMat rows;
  rows.reserve(static_cast<std::size_t>(grp.order() - 1) * cur.rank());
  for (int g = 1; g < grp.order(); ++g)
    for (const auto& b : cur.basis()) rows.push_back(translate_minus(grp, g, b));
  return IntegerLattice::from_rows(grp.order(), std::move(rows));
}

}  // namespace

DeltaChain::DeltaChain(GroupPtr group, int depth, const Config& cfg)
    : group_(std::move(group)), depth_requested_(depth) {
  if (depth < 1) throw PreconditionError("delta chain depth must be >= 1");
  if (depth > cfg.depth_cap)
    throw ConfigError("delta chain depth " + std::to_string(depth) + " exceeds the cap " +
                      std::to_string(cfg.depth_cap));
  lattices_.push_back(IntegerLattice::from_rows(group_->order(), delta_generators(*group_)));
  while (static_cast<int>(lattices_.size()) < depth) {
    IntegerLattice next = next_power(*group_, lattices_.back());
    if (!lattices_.back().contains_lattice(next))
      throw Error("delta chain is not descending");  // cannot happen
    if (next == lattices_.back()) {
      stabilized_at_ = static_cast<int>(lattices_.size());
      quotient_invariants_.push_back({});
      // soundness recheck: one more step must reproduce the same lattice
      if (!(next_power(*group_, next) == next)) throw Error("stabilization recheck failed");
      break;
    }
    quotient_invariants_.push_back(smith_invariants(next, lattices_.back()));
    lattices_.push_back(std::move(next));
  }
  // the trivial group: the first power is already zero and the chain is constant
  if (!stabilized_at_ && lattices_.back().rank() == 0) stabilized_at_ = 1;
}

const IntegerLattice& DeltaChain::at(int n) const {
  if (n < 1) throw PreconditionError("delta power index must be >= 1");
  if (n <= static_cast<int>(lattices_.size())) return lattices_[n - 1];
  if (stabilized_at_) return lattices_.back();
  throw PreconditionError("delta power " + std::to_string(n) + " was not computed (depth " +
                          std::to_string(lattices_.size()) + ", no stabilization)");
}

const std::vector<mpz_class>& DeltaChain::quotient_invariants(int n) const {
  if (n < 1 || n > static_cast<int>(quotient_invariants_.size()))
    throw PreconditionError("no quotient invariants for power " + std::to_string(n));
  return quotient_invariants_[n - 1];
}

bool DeltaChain::member(const GroupRingElement& x, int n) const { return at(n).contains(x.dense()); }

DeltaDepth DeltaChain::depth_of(const GroupRingElement& x) const {
  if (x.group()->canonical_hash() != group_->canonical_hash())
    throw PreconditionError("element belongs to a different group ring");
  DeltaDepth d;
  ZVec v = x.dense();
  for (int n = 1; n <= static_cast<int>(lattices_.size()); ++n) {
    if (!lattices_[n - 1].contains(v)) return d;
    d.observed = n;
  }
  if (stabilized_at_)
    d.omega = true;
  else
    d.at_cap = true;
  return d;
}

nlohmann::json DeltaChain::report() const {
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 1; n <= computed_depth(); ++n) {
    nlohmann::json level{{"n", n}, {"rank", at(n).rank()}};
    if (n <= quotient_count()) {
      nlohmann::json inv = nlohmann::json::array();
      for (const auto& f : quotient_invariants(n)) inv.push_back(f.get_str());
      level["invariant_factors"] = inv;
    }
    levels.push_back(std::move(level));
  }
  nlohmann::json j{{"group", group_->canonical_hash()},
                   {"order", group_->order()},
                   {"depth_requested", depth_requested_},
                   {"levels", levels}};
  if (stabilized_at_)
    j["stabilized_at"] = *stabilized_at_;
  else
    j["stabilized_at"] = nullptr;
  return j;
}

Subgroup dimension_subgroup(const DeltaChain& chain, int n) {
  const GroupPtr& g = chain.group();
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    GroupRingElement diff = GroupRingElement::basis(g, x) - GroupRingElement::one(g);
    if (chain.member(diff, n)) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));  // the constructor asserts closure
}

RationalSubspace rational_delta_power(GroupPtr g, int n) {
  int dim = g->order();
  QMat rows;
  for (int x = 1; x < dim; ++x) {
    QVec r(dim, 0);
    r[0] = -1;
    r[x] = 1;
    rows.push_back(std::move(r));
  }
  RationalSubspace cur = RationalSubspace::from_rows(dim, rows);
  for (int level = 2; level <= n; ++level) {
    QMat next;
    for (int x = 1; x < dim; ++x)
      for (const auto& b : cur.basis()) {
        QVec r(dim, 0);
        for (int i = 0; i < dim; ++i) {
          if (b[i] == 0) continue;
          r[g->mul(x, i)] += b[i];
          r[i] -= b[i];
        }
        next.push_back(std::move(r));
      }
    RationalSubspace up = RationalSubspace::from_rows(dim, next);
    if (up == cur) return cur;  // idempotent from here on
    cur = std::move(up);
  }
  return cur;
}

Subgroup rational_dimension_subgroup(GroupPtr g, int n) {
  RationalSubspace power = rational_delta_power(g, n);
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    QVec v(g->order(), 0);
    v[x] += 1;
    v[0] -= 1;
    if (power.contains(v)) elems.push_back(x);
  }
  return Subgroup(std::move(g), std::move(elems));
}

mpz_class unit_order_mod_delta(const GroupRingElement& u, const DeltaChain& chain, int n) {
  if (u.group()->canonical_hash() != chain.group()->canonical_hash())
    throw PreconditionError("unit belongs to a different group ring");
  if (u.augmentation() != 1) throw PreconditionError("unit_order_mod_delta needs augmentation 1");
  const IntegerLattice& L = chain.at(n);
  // iteration cap: the number of residues of the first power modulo the n-th
  mpz_class cap = 1;
  for (int k = 1; k < n && k <= chain.quotient_count(); ++k)
    for (const auto& f : chain.quotient_invariants(k)) {
      if (f == 0) throw Error("delta quotient unexpectedly infinite");
      cap *= f;
    }
  const mpz_class hard_cap = 10000000;
  ZVec one(u.group()->order(), 0);
  one[0] = 1;
  ZVec w = L.reduce(u.dense());
  ZVec one_reduced = L.reduce(one);
  mpz_class m = 1;
  while (w != one_reduced) {
    if (m >= cap || m >= hard_cap)
      throw PreconditionError("no order found within the residue bound: not a unit, or the bound " +
                              (cap < hard_cap ? cap : hard_cap).get_str() + " was exceeded");
    // w <- reduce(w * u)
    GroupRingElement prod = GroupRingElement::from_dense(u.group(), w) * u;
    w = L.reduce(prod.dense());
    ++m;
  }
  return m;
}

IntegerLattice delta_power_by_products(GroupPtr g, int n) {
  int dim = g->order();
  std::vector<IntegerLattice> powers;
  powers.push_back(IntegerLattice::from_rows(dim, delta_generators(*g)));
  for (int k = 2; k <= n; ++k) {
    // split k = a + b and multiply basis rows of the two halves pairwise
    int a = k / 2, b = k - k / 2;
    ZMat rows;
    for (const auto& x : powers[a - 1].basis())
      for (const auto& y : powers[b - 1].basis()) {
        GroupRingElement p = GroupRingElement::from_dense(g, x) * GroupRingElement::from_dense(g, y);
        rows.push_back(p.dense());
      }
    powers.push_back(IntegerLattice::from_rows(dim, std::move(rows)));
  }
  return powers[n - 1];
}

// ---- dimension series reports -------------------------------------------------

DimensionSeriesReport dimension_series_report(GroupPtr g, int depth, bool with_rational,
                                              const Config& cfg) {
  DeltaChain chain(g, depth, cfg);
  DimensionSeriesReport r;
  r.group = g;
  r.depth = depth;
  r.chain_stabilized_at = chain.stabilized_at();
  auto lcs = lower_central_series(g);
  for (int n = 1; n <= depth; ++n) {
    r.d_series.push_back(dimension_subgroup(chain, n));
    r.gamma_series.push_back(lcs.at(n));
    if (with_rational) r.rational_d_series.push_back(rational_dimension_subgroup(g, n));
  }
  for (const auto& d : r.d_series)
    if (d.is_trivial()) {
      r.d_omega_known = true;
      r.d_omega = Subgroup::trivial(g);
      break;
    }
  if (!r.d_omega_known && chain.stabilized_at()) {
    r.d_omega_known = true;
    r.d_omega = dimension_subgroup(chain, *chain.stabilized_at());
  }
  return r;
}

namespace {
nlohmann::json subgroup_list_json(const std::vector<Subgroup>& subs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : subs) arr.push_back(s.elements());
  return arr;
}
}  // namespace

nlohmann::json DimensionSeriesReport::to_json() const {
  nlohmann::json j{{"group", group->canonical_hash()},
                   {"depth", depth},
                   {"d_series", subgroup_list_json(d_series)},
                   {"gamma_series", subgroup_list_json(gamma_series)}};
  if (!rational_d_series.empty()) j["rational_d_series"] = subgroup_list_json(rational_d_series);
  j["chain_stabilized_at"] =
      chain_stabilized_at ? nlohmann::json(*chain_stabilized_at) : nlohmann::json(nullptr);
  if (d_omega_known)
    j["d_omega"] = d_omega->elements();
  else
    j["d_omega"] = "undetermined at depth " + std::to_string(depth);
  return j;
}

}  // namespace zgr
