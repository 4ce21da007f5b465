#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "triplekit/matrix.hpp"

namespace triplekit {

/// A linear subspace of Q^ambient_dim given by an independent basis.
///
/// Bases produced by this module are canonical: two calls describing the
/// same subspace through the same route return identical vectors.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Canonical basis of span(vectors).
  static Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  Matrix as_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace kernel_basis(const Matrix& m);
  friend Subspace image_basis(const Matrix& m);

  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  // Coordinate k of basis vector k is 1 and coordinate k of every other
  // basis vector is 0; lets contains() avoid elimination.
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;  // only the first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Row reduction. Elimination is fraction-free on the integer matrix
/// obtained by clearing row denominators, with each updated row divided by
/// its content; rows with a zero lead are skipped. The final back
/// substitution normalises to RREF.
Echelon reduced_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// {v : m v = 0}. Basis vector k has a 1 in the k-th free column and 0 in
/// every other free column.
Subspace kernel_basis(const Matrix& m);

/// Column space of m, basis taken from the nonzero rows of rref(m^T).
Subspace image_basis(const Matrix& m);

/// dim z - dim b. Throws AmbientMismatch, or NotContained when b is not a
/// subspace of z.
std::size_t quotient_dim(const Subspace& z, const Subspace& b);

/// Some x with m x = rhs (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace triplekit
