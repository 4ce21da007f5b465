#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "triplekit/lts.hpp"

namespace triplekit {

struct ThetaEntry {
  std::array<std::size_t, 2> pair;
  Matrix matrix;
};

/// theta: L x L -> End(V) on basis pairs. D(x,y) = theta(y,x) - theta(x,y)
/// is always derived.
///
/// The representation carries its algebra, so it doubles as the pair
/// (L, [.,.,.]; theta).
class LtsRepresentation {
 public:
  LtsRepresentation() = default;
  /// theta[i * n + j] is theta(e_i, e_j). Throws DimensionMismatch.
  LtsRepresentation(LtsStructure algebra, std::size_t module_dim, std::vector<Matrix> theta);
  /// Omitted pairs are zero. Throws InvalidInput on repeated pairs.
  static LtsRepresentation from_entries(LtsStructure algebra, std::size_t module_dim,
                                        const std::vector<ThetaEntry>& entries);
  static LtsRepresentation zero(LtsStructure algebra, std::size_t module_dim);

  const LtsStructure& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  std::size_t module_dim() const noexcept { return module_dim_; }

  const Matrix& theta(std::size_t i, std::size_t j) const { return theta_[i * dim() + j]; }
  const Matrix& D(std::size_t i, std::size_t j) const { return d_[i * dim() + j]; }
  Matrix theta(const Vector& x, const Vector& y) const;
  Matrix D(const Vector& x, const Vector& y) const;
  /// theta(x,y)u and D(x,y)u without forming the matrices.
  Vector theta_apply(const Vector& x, const Vector& y, const Vector& u) const;
  Vector D_apply(const Vector& x, const Vector& y, const Vector& u) const;

  /// Cached result of check_rep_axioms.
  bool axioms_hold() const;

  friend bool operator==(const LtsRepresentation& a, const LtsRepresentation& b) {
    return a.module_dim_ == b.module_dim_ && a.algebra_ == b.algebra_ && a.theta_ == b.theta_;
  }

 private:
  struct Cache;

  LtsStructure algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> theta_;
  std::vector<Matrix> d_;
  std::shared_ptr<Cache> cache_;
};

using LtsRepPair = LtsRepresentation;

/// Verdicts "rep1", "rep2" over all basis 4-tuples (x,y,z,t):
///   theta(z,t)theta(x,y) - theta(y,t)theta(x,z) - theta(x,[y,z,t]) + D(y,z)theta(x,t) = 0
///   theta(z,t)D(x,y) - D(x,y)theta(z,t) + theta([x,y,z],t) + theta(z,[x,y,t]) = 0
Report check_rep_axioms(const LtsRepresentation& r);

/// theta(x,y)z = [z,x,y]. Throws NotAnLts.
LtsRepresentation adjoint_rep(const LtsStructure& a);

Matrix derived_D(const LtsRepresentation& r, const Vector& x, const Vector& y);

/// D(X) = sum_{i<j} X_ij D(e_i,e_j).
Matrix bivector_D(const LtsRepresentation& r, const Bivector& x);

enum class Validation { Check, Skip };

/// Bracket on L + V (L coordinates first):
///   [x+u,y+v,z+w] = [x,y,z] + theta(y,z)u - theta(x,z)v + D(x,y)w.
/// With Validation::Check throws InvalidRepresentation when the rep axioms fail.
LtsStructure semidirect_product(const LtsRepPair& p, Validation validation = Validation::Check);

}  // namespace triplekit
