#include "zgr/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "zgr/digest.hpp"

namespace zgr {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ < 1) throw Error("group order must be >= 1");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error("Cayley table size does not match order");
  for (int v : table_)
    if (v < 0 || v >= order_) throw Error("Cayley table entry out of range");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(order_))
    throw Error("label count does not match order");

  for (int i = 0; i < order_; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) throw Error("identity law violated at index " + std::to_string(i));
  }

  inv_.assign(order_, -1);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (mul(i, j) == 0) {
        if (mul(j, i) != 0) throw Error("one-sided inverse at index " + std::to_string(i));
        inv_[i] = j;
        break;
      }
    }
    if (inv_[i] < 0) throw Error("no inverse for index " + std::to_string(i));
  }

  orders_.assign(order_, 1);
  for (int i = 0; i < order_; ++i) {
    int x = i, m = 1;
    while (x != 0) {
      x = mul(x, i);
      ++m;
    }
    orders_[i] = m;
    exponent_ = std::lcm(exponent_, static_cast<long>(m));
  }

  for (int i = 0; i < order_ && abelian_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) {
        abelian_ = false;
        break;
      }

  Digest d;
  d.feed(static_cast<std::uint64_t>(order_));
  for (int v : table_) d.feed(v);
  hash_ = d.hex();

  if (order_ <= kAssocAutoCheck) check_associativity();
}

int FiniteGroup::power(int a, long e) const {
  long n = element_order(a);
  e %= n;
  if (e < 0) e += n;
  int r = 0, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string FiniteGroup::label(int a) const {
  if (!labels_.empty()) return labels_[a];
  return "e" + std::to_string(a);
}

std::optional<int> FiniteGroup::index_of_label(const std::string& s) const {
  for (int i = 0; i < order_; ++i)
    if (label(i) == s) return i;
  return std::nullopt;
}

void FiniteGroup::check_associativity() const {
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) {
      int ij = mul(i, j);
      for (int k = 0; k < order_; ++k)
        if (mul(ij, k) != mul(i, mul(j, k)))
          throw Error("associativity violated at (" + std::to_string(i) + "," + std::to_string(j) +
                      "," + std::to_string(k) + ")");
    }
}

// ---- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(parent_->order(), 0);
  for (int e : elements_) {
    if (e < 0 || e >= parent_->order()) throw Error("subgroup element out of range");
    member_[e] = 1;
  }
  if (elements_.empty() || !member_[0]) throw Error("subgroup must contain the identity");
  for (int a : elements_) {
    if (!member_[parent_->inv(a)]) throw Error("subgroup not closed under inverse");
    for (int b : elements_)
      if (!member_[parent_->mul(a, b)]) throw Error("subgroup not closed under product");
  }
  normal_ = true;
  for (int a : elements_) {
    for (int g = 0; g < parent_->order() && normal_; ++g)
      if (!member_[parent_->conj(a, g)]) normal_ = false;
    if (!normal_) break;
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<int>& gens) {
  std::vector<char> seen(parent->order(), 0);
  std::vector<int> work{0};
  seen[0] = 1;
  for (int g : gens)
    if (!seen[g]) {
      seen[g] = 1;
      work.push_back(g);
    }
  // closure under products; inverses come for free in a finite group
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      int p = parent->mul(work[i], work[j]);
      if (!seen[p]) {
        seen[p] = 1;
        work.push_back(p);
      }
    }
  return Subgroup(std::move(parent), std::move(work));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  for (int e : other.elements())
    if (!contains(e)) return false;
  return true;
}

std::vector<int> set_product(const FiniteGroup& g, const std::vector<int>& a,
                             const std::vector<int>& b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> out;
  for (int x : a)
    for (int y : b) {
      int p = g.mul(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup center(GroupPtr g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b)
      if (g->mul(a, b) != g->mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup(std::move(g), std::move(z));
}

// ---- lower central series ---------------------------------------------------

const Subgroup& LowerCentralSeries::at(int n) const {
  if (n < 1) throw Error("gamma index must be >= 1");
  if (n <= static_cast<int>(terms.size())) return terms[n - 1];
  return terms.back();
}

int LowerCentralSeries::stabilization_index() const {
  auto sz = static_cast<int>(terms.size());
  if (sz >= 2 && terms[sz - 1] == terms[sz - 2]) return sz - 1;
  return sz;  // last term is trivial, gamma_{sz+1} = gamma_sz = {1}
}

std::optional<int> LowerCentralSeries::nilpotency_class() const {
  if (!nilpotent()) return std::nullopt;
  return stabilization_index() - 1;
}

LowerCentralSeries lower_central_series(GroupPtr g) {
  LowerCentralSeries s;
  s.terms.push_back(Subgroup::whole(g));
  if (g->order() == 1) return s;
  for (;;) {
    const Subgroup& cur = s.terms.back();
    std::vector<int> comms;
    for (int x : cur.elements())
      for (int y = 0; y < g->order(); ++y) comms.push_back(g->commutator(x, y));
    Subgroup next = Subgroup::generated_by(g, comms);
    if (!next.is_normal()) throw Error("lower central term not normal");  // cannot happen
    bool repeat = next == cur;
    s.terms.push_back(std::move(next));
    if (repeat || s.terms.back().is_trivial()) break;
  }
  return s;
}

Subgroup power_subgroup(GroupPtr g, int p, int k) {
  long e = 1;
  for (int i = 0; i < k; ++i) e *= p;
  std::vector<int> gens;
  for (int x = 0; x < g->order(); ++x) gens.push_back(g->power(x, e));
  return Subgroup::generated_by(std::move(g), gens);
}

Subgroup power_series_subgroup(GroupPtr g, const LowerCentralSeries& lcs, int p, int k, int l) {
  Subgroup pk = power_subgroup(g, p, k);
  std::vector<int> gens = lcs.at(l).elements();
  gens.insert(gens.end(), pk.elements().begin(), pk.elements().end());
  Subgroup out = Subgroup::generated_by(std::move(g), gens);
  if (!out.is_normal()) throw Error("gamma_l G^{p^k} not normal");  // cannot happen
  return out;
}

Subgroup power_series_subgroup(GroupPtr g, int p, int k, int l) {
  return power_series_subgroup(g, lower_central_series(g), p, k, l);
}

// ---- quotients --------------------------------------------------------------

QuotientGroup quotient_group(GroupPtr g, const Subgroup& kernel) {
  if (!kernel.is_normal()) throw PreconditionError("quotient kernel must be normal");
  int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int k : kernel.elements()) coset_of[g->mul(i, k)] = c;
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[static_cast<std::size_t>(a) * q + b] = coset_of[g->mul(reps[a], reps[b])];
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) labels[a] = "[" + g->label(reps[a]) + "]";
  auto quot = std::make_shared<FiniteGroup>(q, std::move(table), std::move(labels));
  // surjectivity is by construction; verify the homomorphism property and kernel
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (coset_of[g->mul(a, b)] != quot->mul(coset_of[a], coset_of[b]))
        throw Error("projection is not a homomorphism");
  for (int a = 0; a < n; ++a)
    if ((coset_of[a] == 0) != kernel.contains(a)) throw Error("projection kernel mismatch");
  return QuotientGroup{g, kernel, std::move(quot), std::move(coset_of)};
}

std::vector<long> abelian_invariants(GroupPtr g) {
  if (!g->is_abelian()) throw PreconditionError("abelian_invariants needs an abelian group");
  std::vector<long> factors;
  GroupPtr cur = std::move(g);
  while (cur->order() > 1) {
    int best = 0;
    for (int i = 0; i < cur->order(); ++i)
      if (cur->element_order(i) > cur->element_order(best)) best = i;
    factors.push_back(cur->element_order(best));
    auto q = quotient_group(cur, Subgroup::generated_by(cur, {best}));
    cur = q.quotient;
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility d1 | d2 | ...
  return factors;
}

StructureReport structural_report(GroupPtr g) {
  StructureReport r;
  r.order = g->order();
  r.exponent = g->exponent();
  r.abelian = g->is_abelian();
  for (int i = 0; i < g->order(); ++i) r.order_histogram[g->element_order(i)]++;
  r.center_order = center(g).order();
  auto lcs = lower_central_series(g);
  for (const auto& t : lcs.terms) r.gamma_orders.push_back(t.order());
  r.nilpotent = lcs.nilpotent();
  r.nilpotency_class = lcs.nilpotency_class();
  auto ab = quotient_group(g, lcs.at(2));
  r.abelianization = abelian_invariants(ab.quotient);
  return r;
}

// ---- builders ---------------------------------------------------------------

namespace {

void check_cap(long order, const Config& cfg, const std::string& what) {
  if (order > cfg.order_cap)
    throw SizeError(what + " has order " + std::to_string(order) + ", above the cap " +
                    std::to_string(cfg.order_cap));
}

std::string cycle_notation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);  // 1-based, matching the DSL
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace

GroupPtr build_cyclic(int n, const Config& cfg) {
  if (n < 1) throw Error("cyclic(n) requires n >= 1");
  check_cap(n, cfg, "cyclic(" + std::to_string(n) + ")");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "t" : "t^" + std::to_string(i);
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

GroupPtr build_product_raw(GroupPtr a, GroupPtr b, const Config& cfg) {
  long order = static_cast<long>(a->order()) * b->order();
  check_cap(order, cfg, "product");
  int nb = b->order(), n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int ia = i / nb, ib = i % nb;
    for (int j = 0; j < n; ++j) {
      int ja = j / nb, jb = j % nb;
      table[static_cast<std::size_t>(i) * n + j] = a->mul(ia, ja) * nb + b->mul(ib, jb);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "(" + a->label(i / nb) + "," + b->label(i % nb) + ")";
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

DirectProduct build_product(GroupPtr a, GroupPtr b, const Config& cfg) {
  DirectProduct p;
  p.left_order = a->order();
  p.right_order = b->order();
  p.group = build_product_raw(std::move(a), std::move(b), cfg);
  return p;
}

GroupPtr build_elemab(int p, int k, const Config& cfg) {
  if (p < 2) throw Error("elemab(p,k) requires a prime p");
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) throw Error("elemab(p,k) requires a prime p, got " + std::to_string(p));
  if (k < 1) throw Error("elemab(p,k) requires k >= 1");
  long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    check_cap(order, cfg, "elemab(" + std::to_string(p) + "," + std::to_string(k) + ")");
  }
  GroupPtr g = build_cyclic(p, cfg);
  for (int i = 1; i < k; ++i) g = build_product_raw(g, build_cyclic(p, cfg), cfg);
  return g;
}

GroupPtr build_perm_group(const std::vector<std::vector<int>>& generators, const Config& cfg) {
  if (generators.empty()) throw Error("permutation group needs at least one generator");
  std::size_t degree = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error("permutation generators must share a degree");
    std::vector<char> hit(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= static_cast<int>(degree) || hit[v]) throw Error("invalid permutation generator");
      hit[v] = 1;
    }
  }

  auto compose = [degree](const std::vector<int>& x, const std::vector<int>& y) {
    // apply x first, then y
    std::vector<int> r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(identity);
  index[identity] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > cfg.order_cap)
          throw SizeError("permutation closure exceeds the order cap " + std::to_string(cfg.order_cap));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_notation(elems[i]);
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

GroupPtr build_dihedral(int n, const Config& cfg) {
  if (n < 3) throw Error("dihedral(n) requires n >= 3");
  check_cap(2L * n, cfg, "dihedral(" + std::to_string(n) + ")");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return build_perm_group({rot, refl}, cfg);
}

GroupPtr build_quaternion8() {
  // elements (s,b): sign s, basis b in {1,i,j,k}
  auto mulq = [](std::pair<int, int> x, std::pair<int, int> y) {
    static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return std::pair<int, int>{(x.first + y.first + sign[x.second][y.second]) % 2,
                               basis[x.second][y.second]};
  };
  // BFS from generators i, j for the canonical ordering
  std::vector<std::pair<int, int>> elems{{0, 0}};
  std::map<std::pair<int, int>, int> index{{{0, 0}, 0}};
  std::vector<std::pair<int, int>> gens{{0, 1}, {0, 2}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto g : gens) {
      auto next = mulq(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) elems.push_back(next);
    }
  int n = 8;
  std::vector<int> table(64);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(mulq(elems[a], elems[b]));
  static const char* base_names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a)
    labels[a] = std::string(elems[a].first ? "-" : "") + base_names[elems[a].second];
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

GroupPtr build_sym(int n, const Config& cfg) {
  if (n < 1) throw Error("sym(n) requires n >= 1");
  if (n == 1) return build_perm_group({{0}}, cfg);
  long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    check_cap(order, cfg, "sym(" + std::to_string(n) + ")");
  }
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return build_perm_group({transposition, cycle}, cfg);
}

GroupPtr build_alt(int n, const Config& cfg) {
  if (n < 1) throw Error("alt(n) requires n >= 1");
  if (n <= 2) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return build_perm_group({id}, cfg);
  }
  long order = 1;
  for (int i = 3; i <= n; ++i) order *= i;  // n!/2
  check_cap(order, cfg, "alt(" + std::to_string(n) + ")");
  std::vector<int> three(n), longcyc(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1; three[1] = 2; three[2] = 0;  // (1 2 3)
  std::iota(longcyc.begin(), longcyc.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) longcyc[i] = (i + 1) % n;  // (1 2 ... n), even for odd n
  } else {
    for (int i = 1; i < n; ++i) longcyc[i] = 1 + (i % (n - 1));  // (2 3 ... n)
  }
  return build_perm_group({three, longcyc}, cfg);
}

}  // namespace zgr
