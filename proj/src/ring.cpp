#include "zgr/ring.hpp"

#include <nlohmann/json.hpp>

namespace zgr {

GroupRingElement GroupRingElement::basis(GroupPtr group, int g) {
  GroupRingElement e(std::move(group));
  if (g < 0 || g >= e.group_->order()) throw Error("basis element index out of range");
  e.coeffs_[g] = 1;
  return e;
}

GroupRingElement GroupRingElement::from_coeffs(GroupPtr group, std::map<int, mpz_class> coeffs) {
  GroupRingElement e(std::move(group));
  for (auto& [g, c] : coeffs) {
    if (g < 0 || g >= e.group_->order()) throw Error("coefficient index out of range");
    if (c != 0) e.coeffs_.emplace(g, std::move(c));
  }
  return e;
}

mpz_class GroupRingElement::coeff(int g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

bool GroupRingElement::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

mpz_class GroupRingElement::augmentation() const {
  mpz_class s = 0;
  for (const auto& [g, c] : coeffs_) s += c;
  return s;
}

void GroupRingElement::set(int g, mpz_class v) {
  if (v == 0)
    coeffs_.erase(g);
  else
    coeffs_[g] = std::move(v);
}

namespace {
void require_same_group(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.group()->canonical_hash() != b.group()->canonical_hash())
    throw PreconditionError("group ring elements live in different group rings");
}
}  // namespace

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same_group(*this, o);
  for (const auto& [g, c] : o.coeffs_) set(g, coeff(g) + c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  require_same_group(*this, o);
  for (const auto& [g, c] : o.coeffs_) set(g, coeff(g) - c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(group_);
  for (const auto& [g, c] : coeffs_) r.coeffs_[g] = -c;
  return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a, b);
  GroupRingElement r(a.group_);
  const FiniteGroup& grp = *a.group_;
  for (const auto& [g, cg] : a.coeffs_)
    for (const auto& [h, ch] : b.coeffs_) {
      int k = grp.mul(g, h);
      r.coeffs_.try_emplace(k, 0).first->second += cg * ch;
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = it->second == 0 ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

GroupRingElement operator*(const mpz_class& c, const GroupRingElement& a) {
  GroupRingElement r(a.group_);
  if (c == 0) return r;
  for (const auto& [g, v] : a.coeffs_) r.coeffs_[g] = c * v;
  return r;
}

ZVec GroupRingElement::dense() const {
  ZVec v(group_->order(), 0);
  for (const auto& [g, c] : coeffs_) v[g] = c;
  return v;
}

GroupRingElement GroupRingElement::from_dense(GroupPtr group, const ZVec& v) {
  GroupRingElement e(std::move(group));
  if (static_cast<int>(v.size()) != e.group_->order()) throw Error("dense vector has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.coeffs_[static_cast<int>(i)] = v[i];
  return e;
}

nlohmann::json GroupRingElement::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [g, c] : coeffs_) coeffs[std::to_string(g)] = c.get_str();
  return {{"group", group_->canonical_hash()}, {"coeffs", coeffs}};
}

GroupRingElement GroupRingElement::from_json(GroupPtr group, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("coeffs"))
    throw Error("group ring element JSON needs \"group\" and \"coeffs\"");
  if (j.at("group").get<std::string>() != group->canonical_hash())
    throw PreconditionError("element JSON was written for a different group (hash mismatch)");
  std::map<int, mpz_class> coeffs;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    int g = std::stoi(key);
    mpz_class c(val.get<std::string>(), 10);
    coeffs[g] = std::move(c);
  }
  return from_coeffs(std::move(group), std::move(coeffs));
}

GroupRingElement group_sum(GroupPtr group, int g) {
  GroupRingElement r(group);
  int x = 0;
  do {
    r += GroupRingElement::basis(group, x);
    x = group->mul(x, g);
  } while (x != 0);
  return r;
}

std::optional<GroupRingElement> inverse_in_ring(const GroupRingElement& u) {
  const GroupPtr& G = u.group();
  int n = G->order();
  // (u*v)_k = sum_j A[k][j] v_j with A[k][j] = u(k * j^-1)
  QMat A(n, QVec(n, 0));
  for (const auto& [i, c] : u.coeffs())
    for (int j = 0; j < n; ++j) A[G->mul(i, j)][j] = c;
  // solve A v = e_0 by exact Gaussian elimination
  QVec rhs(n, 0);
  rhs[0] = 1;
  std::vector<int> where(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[row]);
    std::swap(rhs[sel], rhs[row]);
    mpq_class inv = 1 / A[row][col];
    for (int j = col; j < n; ++j) A[row][j] *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || A[i][col] == 0) continue;
      mpq_class f = A[i][col];
      for (int j = col; j < n; ++j) A[i][j] -= f * A[row][j];
      rhs[i] -= f * rhs[row];
    }
    where[col] = row;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (rhs[i] != 0) return std::nullopt;  // inconsistent: u is a zero divisor
  std::map<int, mpz_class> coeffs;
  for (int col = 0; col < n; ++col) {
    mpq_class val = where[col] >= 0 ? rhs[where[col]] : mpq_class(0);
    if (val == 0) continue;
    if (val.get_den() != 1) return std::nullopt;  // rational but not integral: no inverse in ZG
    coeffs[col] = val.get_num();
  }
  GroupRingElement v = GroupRingElement::from_coeffs(G, std::move(coeffs));
  if (!(u * v).is_one() || !(v * u).is_one()) return std::nullopt;
  return v;
}

}  // namespace zgr
