#include "zgr/lattice.hpp"

#include <algorithm>

namespace zgr {

namespace {

bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

int leading_col(const ZVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

IntegerLattice IntegerLattice::from_rows(int dim, ZMat rows) {
  if (dim < 0) throw Error("lattice dimension must be >= 0");
  IntegerLattice lat(dim);
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw Error("lattice row has wrong dimension");
    lat.insert_row(std::move(r));
  }
  lat.normalize();
  return lat;
}

// Echelon insertion. Keeps one row per pivot column; entries above pivots are
// only brought into canonical range by normalize().
void IntegerLattice::insert_row(ZVec v) {
  for (;;) {
    int c = leading_col(v);
    if (c < 0) return;  // reduced to zero, nothing new
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != c) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      pivots_.insert(it, c);
      rows_.insert(rows_.begin() + pos, std::move(v));
      return;
    }
    ZVec& row = rows_[pos];
    const mpz_class& a = row[c];
    const mpz_class& b = v[c];
    if (b % a == 0) {
      mpz_class q = b / a;
      for (int i = c; i < dim_; ++i) v[i] -= q * row[i];
      continue;  // leading column moved right
    }
    // gcd update of the stored pivot row, then keep reducing the remainder
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class af = a / g, bf = b / g;
    for (int i = c; i < dim_; ++i) {
      mpz_class nr = s * row[i] + t * v[i];
      mpz_class nv = af * v[i] - bf * row[i];
      row[i] = nr;
      v[i] = nv;
    }
    // row now has pivot g > 0 at column c, v has 0 there
  }
}

void IntegerLattice::normalize() {
  // reduce entries above each pivot into [0, pivot)
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    const mpz_class& piv = rows_[r][p];
    for (std::size_t above = 0; above < r; ++above) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[above][p].get_mpz_t(), piv.get_mpz_t());
      if (q != 0)
        for (int i = p; i < dim_; ++i) rows_[above][i] -= q * rows_[r][i];
    }
  }
}

std::optional<ZVec> IntegerLattice::membership_certificate(const ZVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw Error("membership: dimension mismatch");
  ZVec residual = v;
  ZVec cert(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (residual[p] == 0) continue;
    if (residual[p] % rows_[r][p] != 0) return std::nullopt;
    mpz_class q = residual[p] / rows_[r][p];
    cert[r] = q;
    for (int i = p; i < dim_; ++i) residual[i] -= q * rows_[r][i];
  }
  if (!is_zero(residual)) return std::nullopt;
  return cert;
}

bool IntegerLattice::contains(const ZVec& v) const { return membership_certificate(v).has_value(); }

bool IntegerLattice::contains_lattice(const IntegerLattice& sub) const {
  if (sub.dim_ != dim_) return false;
  for (const auto& r : sub.rows_)
    if (!contains(r)) return false;
  return true;
}

ZVec IntegerLattice::reduce(ZVec v) const {
  if (static_cast<int>(v.size()) != dim_) throw Error("reduce: dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), rows_[r][p].get_mpz_t());
    if (q != 0)
      for (int i = p; i < dim_; ++i) v[i] -= q * rows_[r][i];
  }
  return v;
}

ZVec combine_rows(const ZMat& basis, const ZVec& coeffs, int dim) {
  if (basis.size() != coeffs.size()) throw Error("certificate length mismatch");
  ZVec out(dim, 0);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (int i = 0; i < dim; ++i) out[i] += coeffs[r] * basis[r][i];
  return out;
}

// ---- Smith normal form -------------------------------------------------------

std::vector<mpz_class> snf_invariant_factors(ZMat m, int cols) {
  std::size_t rows = m.size();
  std::vector<mpz_class> diag;
  std::size_t top = 0;
  int left = 0;
  while (top < rows && left < cols) {
    // find a nonzero entry in the working block
    std::size_t pi = top;
    int pj = left;
    bool found = false;
    for (std::size_t i = top; i < rows && !found; ++i)
      for (int j = left; j < cols && !found; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[top], m[pi]);
    if (pj != left)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][left], m[i][pj]);

    // clear the row and column by gcd steps until both are clean
    for (;;) {
      bool dirty = false;
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (m[i][left] == 0) continue;
        if (m[i][left] % m[top][left] == 0) {
          mpz_class q = m[i][left] / m[top][left];
          for (int j = left; j < cols; ++j) m[i][j] -= q * m[top][j];
        } else {
          mpz_class g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[top][left].get_mpz_t(),
                     m[i][left].get_mpz_t());
          mpz_class af = m[top][left] / g, bf = m[i][left] / g;
          for (int j = left; j < cols; ++j) {
            mpz_class nt = s * m[top][j] + t * m[i][j];
            mpz_class ni = af * m[i][j] - bf * m[top][j];
            m[top][j] = nt;
            m[i][j] = ni;
          }
          dirty = true;
        }
      }
      for (int j = left + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        if (m[top][j] % m[top][left] == 0) {
          mpz_class q = m[top][j] / m[top][left];
          for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][left];
        } else {
          mpz_class g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[top][left].get_mpz_t(),
                     m[top][j].get_mpz_t());
          mpz_class af = m[top][left] / g, bf = m[top][j] / g;
          for (std::size_t i = top; i < rows; ++i) {
            mpz_class nl = s * m[i][left] + t * m[i][j];
            mpz_class nj = af * m[i][j] - bf * m[i][left];
            m[i][left] = nl;
            m[i][j] = nj;
          }
          dirty = true;
        }
      }
      if (!dirty) {
        bool clean = true;
        for (std::size_t i = top + 1; i < rows && clean; ++i)
          if (m[i][left] != 0) clean = false;
        for (int j = left + 1; j < cols && clean; ++j)
          if (m[top][j] != 0) clean = false;
        if (clean) break;
      }
    }
    diag.push_back(abs(m[top][left]));
    ++top;
    ++left;
  }

  // enforce the divisibility chain d1 | d2 | ... by gcd/lcm folding
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      mpz_class g = gcd(diag[i], diag[j]);
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  return diag;
}

std::vector<mpz_class> smith_invariants(const IntegerLattice& sub, const IntegerLattice& super) {
  if (sub.dim() != super.dim()) throw PreconditionError("smith_invariants: dimension mismatch");
  ZMat rel;
  for (const auto& r : sub.basis()) {
    auto cert = super.membership_certificate(r);
    if (!cert) throw PreconditionError("smith_invariants: sub is not contained in super");
    rel.push_back(std::move(*cert));
  }
  auto diag = snf_invariant_factors(std::move(rel), super.rank());
  std::vector<mpz_class> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(d);
  for (int i = static_cast<int>(diag.size()); i < super.rank(); ++i) out.push_back(0);
  return out;
}

// ---- rational subspaces --------------------------------------------------------

RationalSubspace RationalSubspace::from_rows(int dim, const QMat& rows) {
  RationalSubspace s(dim);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw Error("subspace row has wrong dimension");
    s.insert_row(r);
  }
  return s;
}

void RationalSubspace::insert_row(QVec v) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class c = v[pivots_[r]];  // copy: the loop below overwrites v[pivot]
    if (c != 0) {
      for (int i = pivots_[r]; i < dim_; ++i) v[i] -= c * rows_[r][i];
    }
  }
  int lead = -1;
  for (int i = 0; i < dim_ && lead < 0; ++i)
    if (v[i] != 0) lead = i;
  if (lead < 0) return;
  mpq_class inv = 1 / v[lead];
  for (int i = lead; i < dim_; ++i) v[i] *= inv;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  // clear the new pivot column in the other rows (full RREF)
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == pos) continue;
    mpq_class c = rows_[r][lead];
    if (c != 0)
      for (int i = lead; i < dim_; ++i) rows_[r][i] -= c * rows_[pos][i];
  }
}

bool RationalSubspace::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw Error("subspace membership: dimension mismatch");
  QVec residual = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class c = residual[pivots_[r]];
    if (c != 0)
      for (int i = pivots_[r]; i < dim_; ++i) residual[i] -= c * rows_[r][i];
  }
  for (const auto& x : residual)
    if (x != 0) return false;
  return true;
}

}  // namespace zgr
