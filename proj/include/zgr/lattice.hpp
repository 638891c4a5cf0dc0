#ifndef ZGR_LATTICE_HPP
#define ZGR_LATTICE_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "zgr/errors.hpp"

namespace zgr {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

/// A sublattice of Z^dim held as a canonical row-style Hermite normal form:
/// rows sorted by pivot column, pivots positive, every entry above a pivot
/// reduced into [0, pivot). Two lattices are equal iff their bases are
/// identical, entry for entry.
class IntegerLattice {
 public:
  static IntegerLattice from_rows(int dim, ZMat rows);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const ZMat& basis() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  bool contains(const ZVec& v) const;
  /// Integer coefficients c with v = sum c_i * basis_i, when v is a member.
  std::optional<ZVec> membership_certificate(const ZVec& v) const;
  bool contains_lattice(const IntegerLattice& sub) const;

  /// Canonical representative of v modulo the lattice: the pivot coordinate
  /// of every basis row is reduced into [0, pivot). Congruent vectors reduce
  /// to the same representative.
  ZVec reduce(ZVec v) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  IntegerLattice(int dim) : dim_(dim) {}
  void insert_row(ZVec v);
  void normalize();

  int dim_;
  ZMat rows_;
  std::vector<int> pivots_;
};

/// Recombines a certificate against the basis; exact round-trip check.
ZVec combine_rows(const ZMat& basis, const ZVec& coeffs, int dim);

/// Invariant factors of super/sub, sub a sublattice of super (verified;
/// throws PreconditionError otherwise). Ascending divisibility order, unit
/// factors dropped, one 0 per free factor. The product of the nonzero
/// factors is the index [super : sub] when there are no zeros.
std::vector<mpz_class> smith_invariants(const IntegerLattice& sub, const IntegerLattice& super);

/// Smith invariant factors of an arbitrary integer matrix (all of them,
/// including units and zeros), ascending divisibility.
std::vector<mpz_class> snf_invariant_factors(ZMat m, int cols);

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

/// A linear subspace of Q^dim in reduced row echelon form (canonical).
class RationalSubspace {
 public:
  static RationalSubspace from_rows(int dim, const QMat& rows);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const QMat& basis() const { return rows_; }
  bool contains(const QVec& v) const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  RationalSubspace(int dim) : dim_(dim) {}
  void insert_row(QVec v);

  int dim_;
  QMat rows_;
  std::vector<int> pivots_;
};

}  // namespace zgr

#endif
