#include "zgr/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zgr {

nlohmann::json RankReport::to_json() const {
  return {{"order", order}, {"n2", n2}, {"cyclic_subgroups", cyclic_subgroups}, {"rho", rho}};
}

nlohmann::json Verdict::to_json() const {
  return {{"theorem", id},
          {"group", group_hash},
          {"spec", group_desc},
          {"holds", holds},
          {"evidence", evidence}};
}

RankReport abelian_rank(GroupPtr a) {
  if (!a->is_abelian()) throw PreconditionError("abelian_rank needs an abelian group");
  RankReport r;
  r.order = a->order();
  for (int i = 0; i < a->order(); ++i)
    if (a->element_order(i) == 2) ++r.n2;
  std::set<std::vector<int>> cyclics;
  for (int i = 0; i < a->order(); ++i) {
    std::vector<int> cyc;
    int x = 0;
    do {
      cyc.push_back(x);
      x = a->mul(x, i);
    } while (x != 0);
    std::sort(cyc.begin(), cyc.end());
    cyclics.insert(std::move(cyc));
  }
  r.cyclic_subgroups = static_cast<long>(cyclics.size());
  long numer = r.order + r.n2 - 2 * r.cyclic_subgroups + 1;
  if (numer % 2 != 0) throw Error("rank numerator is odd");  // cannot happen
  r.rho = numer / 2;
  if (r.rho < 0) throw Error("negative rank");               // cannot happen
  return r;
}

Verdict rank_gap_table(int p, int q, const Config& cfg) {
  if (p >= q) throw PreconditionError("rank_gap_table needs primes p < q");
  auto rp = abelian_rank(build_cyclic(p, cfg));
  auto rq = abelian_rank(build_cyclic(q, cfg));
  auto rpq = abelian_rank(build_cyclic(p * q, cfg));
  bool gap = rpq.rho > rp.rho + rq.rho;
  bool exceptional = (p == 2 && q == 3);
  Verdict v;
  v.id = "rank-gap";
  v.group_hash = "";
  v.group_desc = "cyclic(" + std::to_string(p * q) + ")";
  v.holds = exceptional ? !gap : gap;
  v.evidence = {{"p", p},
                {"q", q},
                {"rho_p", rp.rho},
                {"rho_q", rq.rho},
                {"rho_pq", rpq.rho},
                {"strict_gap", gap},
                {"exceptional_pair", exceptional}};
  return v;
}

bool is_abelian_cut(GroupPtr a) {
  if (!a->is_abelian()) throw PreconditionError("is_abelian_cut needs an abelian group");
  long e = a->exponent();
  return 4 % e == 0 || 6 % e == 0;
}

std::optional<K8xEDecomposition> find_k8xe(GroupPtr g) {
  int n = g->order();
  if (n < 8 || (n & (n - 1)) != 0) return std::nullopt;  // order must be 2^(3+k)
  if (g->is_abelian() || g->exponent() != 4) return std::nullopt;
  auto lcs = lower_central_series(g);
  if (lcs.nilpotency_class() != 2) return std::nullopt;
  const Subgroup& gamma2 = lcs.at(2);
  if (gamma2.order() != 2) return std::nullopt;
  Subgroup z = center(g);
  if (z.order() * 8 != n * 2) return std::nullopt;  // |Z| = 2^{k+1} = |G|/4
  for (int e : z.elements())
    if (g->element_order(e) > 2) return std::nullopt;  // center must be elementary abelian

  int z0 = gamma2.elements()[1];  // the commutator involution

  // find Q = <a,b> of order 8 with a unique involution
  for (int a = 0; a < n; ++a) {
    if (g->element_order(a) != 4) continue;
    for (int b = a + 1; b < n; ++b) {
      if (g->element_order(b) != 4) continue;
      if (g->mul(a, b) == g->mul(b, a)) continue;
      Subgroup q = Subgroup::generated_by(g, {a, b});
      if (q.order() != 8) continue;
      int involutions = 0;
      for (int e : q.elements())
        if (g->element_order(e) == 2) ++involutions;
      if (involutions != 1) continue;
      // complement of <z0> inside the center: greedy F2 basis extension
      Subgroup e = Subgroup::trivial(g);
      for (int c : z.elements()) {
        if (e.contains(c)) continue;
        if (g->mul(c, z0) != 0 && !e.contains(g->mul(c, z0))) {
          std::vector<int> gens = e.elements();
          gens.push_back(c);
          e = Subgroup::generated_by(g, gens);
        }
      }
      if (e.order() * 8 != n) continue;
      bool disjoint = true;
      for (int x : e.elements())
        if (x != 0 && q.contains(x)) disjoint = false;
      if (!disjoint) continue;
      if (static_cast<int>(set_product(*g, q.elements(), e.elements()).size()) != n) continue;
      return K8xEDecomposition{q.elements(), e.elements()};
    }
  }
  return std::nullopt;
}

Verdict classify_terminating(GroupPtr g, const Config& cfg) {
  Verdict v;
  v.id = "thm2.2";
  v.group_hash = g->canonical_hash();
  v.evidence = nlohmann::json::object();
  if (g->is_abelian()) {
    v.holds = is_abelian_cut(g);
    v.evidence["case"] = v.holds ? "abelian cut-group" : "abelian, not a cut-group";
    v.evidence["exponent"] = g->exponent();
    if (v.holds) v.evidence["rank_rho"] = abelian_rank(g).rho;
  } else {
    auto dec = find_k8xe(g);
    v.holds = dec.has_value();
    if (dec) {
      v.evidence["case"] = "K8 x E";
      v.evidence["q_subgroup"] = dec->q_elements;
      v.evidence["e_complement"] = dec->e_elements;
      DeltaChain chain(g, 3, cfg);
      Subgroup d3 = dimension_subgroup(chain, 3);
      v.evidence["d3_order"] = d3.order();
      if (!d3.is_trivial()) throw Error("K8 x E detected but D_3 is not trivial");
    } else {
      v.evidence["case"] = "nonabelian, not of K8 x E shape";
    }
  }
  return v;
}

namespace {

bool prime_power_order(long n, int& p_out) {
  if (n == 1) {
    p_out = 0;
    return true;
  }
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      p_out = p;
      return n == 1;
    }
  }
  p_out = static_cast<int>(n);
  return true;  // n itself prime
}

std::vector<int> distinct_prime_divisors(long n) {
  std::vector<int> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

int valuation(long n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

Verdict classify_trivial_residue(GroupPtr g, const Config& cfg) {
  Verdict v;
  v.id = "thm3.3";
  v.group_hash = g->canonical_hash();
  v.evidence = nlohmann::json::object();
  int p = 0;
  bool ppower = prime_power_order(g->order(), p);
  bool exp6_abelian = g->is_abelian() && g->exponent() == 6;
  v.holds = ppower || exp6_abelian;
  if (exp6_abelian) {
    v.evidence["case"] = "abelian of exponent 6";
  } else if (ppower) {
    v.evidence["case"] = g->order() == 1 ? "trivial group" : std::to_string(p) + "-group";
    DimensionSeriesReport rep = dimension_series_report(g, cfg.default_depth, false, cfg);
    for (int n = 1; n <= rep.depth; ++n)
      if (rep.d_series[n - 1].is_trivial()) {
        v.evidence["d_chain_trivial_at"] = n;
        break;
      }
    if (!v.evidence.contains("d_chain_trivial_at"))
      v.evidence["d_chain_order_at_depth"] = rep.d_series.back().order();
  } else {
    v.evidence["case"] = "neither a p-group nor abelian of exponent 6";
    v.evidence["exponent"] = g->exponent();
  }
  return v;
}

Verdict order_pq_scan(GroupPtr g) {
  Verdict v;
  v.id = "thm3.4";
  v.group_hash = g->canonical_hash();
  nlohmann::json witnesses = nlohmann::json::array();
  for (int x = 0; x < g->order(); ++x) {
    auto ps = distinct_prime_divisors(g->element_order(x));
    bool violating = ps.size() >= 2 && !(ps.size() == 2 && ps[0] == 2 && ps[1] == 3);
    if (violating)
      witnesses.push_back({{"element", x}, {"order", g->element_order(x)}, {"label", g->label(x)}});
  }
  v.holds = witnesses.empty();
  v.evidence = {{"violations", witnesses}};
  return v;
}

Subgroup p_height_subgroup(GroupPtr g, int p) {
  auto lcs = lower_central_series(g);
  int i_max = valuation(g->exponent(), p) + 1;
  int j_max = lcs.stabilization_index();
  std::vector<char> candidate(g->order(), 1);
  for (int i = 1; i <= i_max; ++i) {
    long pi = 1;
    for (int t = 0; t < i; ++t) pi *= p;
    std::vector<char> power_image(g->order(), 0);
    for (int x = 0; x < g->order(); ++x) power_image[g->power(x, pi)] = 1;
    for (int j = 1; j <= j_max; ++j) {
      const Subgroup& gamma = lcs.at(j);
      // g qualifies at (i,j) iff g in {x^{p^i}} * gamma_j
      std::vector<char> ok(g->order(), 0);
      for (int im = 0; im < g->order(); ++im)
        if (power_image[im])
          for (int y : gamma.elements()) ok[g->mul(im, y)] = 1;
      for (int e = 0; e < g->order(); ++e)
        if (!ok[e]) candidate[e] = 0;
    }
  }
  std::vector<int> elems;
  for (int e = 0; e < g->order(); ++e)
    if (candidate[e]) elems.push_back(e);
  Subgroup out(std::move(g), std::move(elems));  // asserts closure
  if (!out.is_normal()) throw Error("infinite p-height elements do not form a normal subgroup");
  return out;
}

Subgroup kp_residue(GroupPtr g, int p) {
  auto lcs = lower_central_series(g);
  int k_max = valuation(g->exponent(), p) + 1;
  int l_max = lcs.stabilization_index();
  std::vector<char> in_all(g->order(), 1);
  for (int l = 1; l <= l_max; ++l)
    for (int k = 1; k <= k_max; ++k) {
      Subgroup s = power_series_subgroup(g, lcs, p, k, l);
      for (int e = 0; e < g->order(); ++e)
        if (!s.contains(e)) in_all[e] = 0;
    }
  std::vector<int> elems;
  for (int e = 0; e < g->order(); ++e)
    if (in_all[e]) elems.push_back(e);
  Subgroup out(std::move(g), std::move(elems));
  if (!out.is_normal()) throw Error("kp residue is not normal");
  return out;
}

DiscriminationResult k_discriminated(GroupPtr g, int x) {
  DiscriminationResult res;
  if (x == 0) return res;  // 1 is never separated from itself
  auto lcs = lower_central_series(g);
  for (int p : distinct_prime_divisors(g->order())) {
    int k_max = valuation(g->exponent(), p) + 1;
    int l_max = lcs.stabilization_index();
    for (int l = 1; l <= l_max; ++l)
      for (int k = 1; k <= k_max; ++k) {
        Subgroup s = power_series_subgroup(g, lcs, p, k, l);
        if (!s.contains(x)) {
          res.discriminated = true;
          res.prime = p;
          res.l = l;
          res.k = k;
          return res;
        }
      }
  }
  return res;
}

Verdict commutator_residue_witness(GroupPtr g, int g1, int x, const DeltaChain& chain) {
  auto disc = k_discriminated(g, g1);
  if (disc.discriminated)
    throw PreconditionError("g1 is discriminated from 1 by the quotient modulo gamma_" +
                            std::to_string(disc.l) + " G^" + std::to_string(disc.prime) + "^" +
                            std::to_string(disc.k));
  Verdict v;
  v.id = "lemma4.2";
  v.group_hash = g->canonical_hash();
  int c = g->commutator(g1, x);
  GroupRingElement cm1 = GroupRingElement::basis(g, c) - GroupRingElement::one(g);
  DeltaDepth d = chain.depth_of(cm1);
  bool all = c == 0 || d.omega || d.observed >= chain.computed_depth();
  v.holds = all;
  Subgroup generated = Subgroup::generated_by(g, {c});
  v.evidence = {{"g1", g1},
                {"g", x},
                {"commutator", c},
                {"commutator_label", g->label(c)},
                {"depth_observed", d.observed},
                {"in_every_computed_power", all},
                {"omega_member", d.omega},
                {"generated_subgroup_order", generated.order()}};
  return v;
}

}  // namespace zgr
