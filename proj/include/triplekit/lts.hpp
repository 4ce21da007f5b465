#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "triplekit/matrix.hpp"
#include "triplekit/report.hpp"

namespace triplekit {

/// Calls fn(tuple) for every tuple in {0..n-1}^k in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> t(k, 0);
  if (n == 0 && k > 0) return;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(t));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

/// Sparse column: nonzero (index, coefficient) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct TernaryBracketEntry {
  std::array<std::size_t, 3> args;
  Vector value;
};

/// Lie triple system on Q^n: [e_i,e_j,e_k] = sum_l c(i,j,k,l) e_l.
///
/// Constants are stored in full. Antisymmetry in the first two slots is
/// enforced at construction; the cyclic and derivation identities are not
/// assumed and must be checked with check_lts_axioms.
class LtsStructure {
 public:
  LtsStructure() = default;
  explicit LtsStructure(std::size_t dim);
  LtsStructure(std::size_t dim, std::vector<Scalar> constants);

  /// Builds from listed brackets, completing [e_j,e_i,e_k] = -[e_i,e_j,e_k].
  /// Throws InvalidInput on conflicting or out-of-range entries.
  static LtsStructure from_brackets(std::size_t dim, const std::vector<TernaryBracketEntry>& entries);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return constants_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const std::vector<Scalar>& constants() const noexcept { return constants_; }

  /// Nonzero coordinates of [e_i,e_j,e_k].
  const SparseVector& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return sparse_[(i * dim_ + j) * dim_ + k];
  }

  /// Trilinear extension. Throws DimensionMismatch.
  Vector bracket(const Vector& x, const Vector& y, const Vector& z) const;

  bool is_zero() const;

  friend bool operator==(const LtsStructure& a, const LtsStructure& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  void build_sparse();

  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
  std::vector<SparseVector> sparse_;
};

struct BinaryBracketEntry {
  std::array<std::size_t, 2> args;
  Vector value;
};

/// Lie algebra on Q^n: [e_i,e_j] = sum_k b(i,j,k) e_k. Antisymmetry is
/// enforced at construction; Jacobi is checked by check_lie_axioms.
class LieStructure {
 public:
  LieStructure() = default;
  explicit LieStructure(std::size_t dim);
  LieStructure(std::size_t dim, std::vector<Scalar> constants);

  static LieStructure from_brackets(std::size_t dim, const std::vector<BinaryBracketEntry>& entries);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& constants() const noexcept { return constants_; }
  const SparseVector& basis_bracket(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const;

  /// ad(e_i) as an n x n matrix.
  Matrix ad(std::size_t i) const;

  friend bool operator==(const LieStructure& a, const LieStructure& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  void build_sparse();

  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
  std::vector<SparseVector> sparse_;
};

/// Element of L^L. Coefficients live in an antisymmetric n x n matrix;
/// e_i^e_j (i < j) acts as the ordered pair (e_i, e_j).
class Bivector {
 public:
  Bivector() = default;
  explicit Bivector(std::size_t dim) : coeffs_(dim, dim) {}

  /// Reads the strict upper triangle and completes antisymmetrically.
  static Bivector from_upper(const Matrix& m);
  /// Throws InvalidInput unless m is antisymmetric with zero diagonal.
  static Bivector from_antisymmetric(const Matrix& m);
  /// e_i ^ e_j
  static Bivector wedge(std::size_t dim, std::size_t i, std::size_t j);
  /// Basis {e_i ^ e_j : i < j} in lexicographic order.
  static std::vector<Bivector> basis(std::size_t dim);

  /// x ^ y for arbitrary vectors.
  static Bivector wedge(const Vector& x, const Vector& y);

  std::size_t dim() const noexcept { return coeffs_.rows(); }
  const Matrix& coeffs() const noexcept { return coeffs_; }

  /// Coordinates on the lexicographic basis (length n(n-1)/2).
  Vector coordinates() const;
  static Bivector from_coordinates(std::size_t dim, const Vector& coords);

  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  Matrix coeffs_;
};

Bivector operator+(const Bivector& a, const Bivector& b);
Bivector operator*(const Scalar& s, const Bivector& x);

/// Linear map f between two L.t.s, stored as a target.dim x source.dim matrix.
struct AlgebraMorphism {
  LtsStructure source;
  LtsStructure target;
  Matrix matrix;
};

/// Verdicts "slot_antisymmetry", "cyclic", "derivation".
Report check_lts_axioms(const LtsStructure& a);

/// Verdicts "antisymmetry", "jacobi".
Report check_lie_axioms(const LieStructure& g);

/// [x,y,z] = [[x,y],z]. Throws NotALieAlgebra when Jacobi fails.
LtsStructure lie_to_lts(const LieStructure& g);

/// Verdict "morphism": f[x,y,z] = [fx,fy,fz]' on all basis triples.
Report check_lts_morphism(const AlgebraMorphism& m);

/// L(X)z = sum_{i<j} X_ij [e_i,e_j,z].
Vector adjoint_action(const LtsStructure& a, const Bivector& x, const Vector& z);

/// Matrix of z -> L(X)z.
Matrix adjoint_matrix(const LtsStructure& a, const Bivector& x);

}  // namespace triplekit
