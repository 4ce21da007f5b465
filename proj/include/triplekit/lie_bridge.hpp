#pragma once

#include <cstddef>
#include <vector>

#include "triplekit/cohomology.hpp"
#include "triplekit/operators.hpp"

namespace triplekit {

/// rho: L -> gl(V) on basis elements; carries its Lie algebra.
class LieRepresentation {
 public:
  LieRepresentation() = default;
  /// rho[i] is rho(e_i). Throws DimensionMismatch.
  LieRepresentation(LieStructure algebra, std::size_t module_dim, std::vector<Matrix> rho);
  static LieRepresentation zero(LieStructure algebra, std::size_t module_dim);
  static LieRepresentation adjoint(LieStructure algebra);

  const LieStructure& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  std::size_t module_dim() const noexcept { return module_dim_; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  Matrix rho(const Vector& x) const;
  Vector rho_apply(const Vector& x, const Vector& u) const;

  friend bool operator==(const LieRepresentation&, const LieRepresentation&) = default;

 private:
  LieStructure algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> rho_;
};

using LieRepPair = LieRepresentation;

/// Alternating p-cochain on Q^source with values in Q^target. Values are
/// stored on strictly increasing index tuples in lexicographic order.
class LieCochain {
 public:
  LieCochain() = default;
  LieCochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim);
  LieCochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Vector values);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t source_dim() const noexcept { return source_dim_; }
  std::size_t target_dim() const noexcept { return target_dim_; }
  const Vector& values() const noexcept { return values_; }
  /// Number of increasing tuples times target_dim.
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at any basis tuple (sign from sorting; zero on repeats).
  Vector value(const std::vector<std::size_t>& args) const;
  void set_increasing(const std::vector<std::size_t>& increasing, const Vector& v);
  bool is_zero() const { return triplekit::is_zero(values_); }

  /// Full alternating tensor.
  Cochain to_cochain() const;
  /// Throws InvalidInput when f is not alternating.
  static LieCochain from_cochain(const Cochain& f);

  friend bool operator==(const LieCochain&, const LieCochain&) = default;

 private:
  std::size_t index(const std::vector<std::size_t>& increasing) const;
  std::size_t degree_ = 0;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  Vector values_;
};

/// Increasing tuples of {0..n-1} of length p, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t p);

/// Verdict "rep": rho([x,y]) = rho(x)rho(y) - rho(y)rho(x).
Report check_lie_rep(const LieRepPair& p);

/// Bracket on L + V (L first): [x+u,y+v] = [x,y] + rho(x)v - rho(y)u.
LieStructure lie_semidirect_product(const LieRepPair& p);

LieCochain ce_apply(const LieRepPair& p, const LieCochain& f);
/// Matrix of C^p -> C^{p+1} on compressed coordinates. Throws InvalidRepresentation.
CoboundaryMatrix ce_coboundary(const LieRepPair& p, std::size_t degree);

/// Verdict "o_identity": [Tu,Tv] = T(rho(Tu)v - rho(Tv)u).
Report check_lie_o_operator(const LieRepPair& p, const Matrix& t);

struct LieInduced {
  LieStructure bracket;    // [u,v]_T on V
  LieRepresentation rep;   // rho_T on L
};

/// Throws NotALieOOperator.
LieInduced lie_induced_structures(const LieRepPair& p, const Matrix& t);

/// d~_T from the displayed formula, built from [,], rho and T directly.
CoboundaryMatrix lie_o_coboundary(const LieRepPair& p, const Matrix& t, std::size_t degree);

/// theta(e_i,e_j) = rho(e_j)rho(e_i) over lie_to_lts. Throws InvalidRepresentation.
LtsRepPair lts_rep_from_lie(const LieRepPair& p);

/// Verdict "semidirect": semidirect_product(lts_rep_from_lie(p)) equals
/// lie_to_lts(lie_semidirect_product(p)).
Report check_semidirect_compatibility(const LieRepPair& p);

/// omega(x,y,z) = phi([x,y],z) - rho(z)phi(x,y).
Cochain lie_omega(const LieRepPair& p, const LieCochain& phi);

struct TransferredCochain {
  Cochain cochain;
  Report report;
};

/// Verdict "cocycle". Throws NotACocycle when the CE coboundary of f is nonzero.
TransferredCochain transfer_1cocycle(const LieRepPair& p, const LieCochain& f);
/// Verdicts "in_space", "cocycle". Throws NotACocycle.
TransferredCochain transfer_2cocycle(const LieRepPair& p, const LieCochain& phi);
/// Verdict "associated": delta^1(alpha) = omega built from the CE coboundary of alpha.
Report check_associated_identity(const LieRepPair& p, const LieCochain& alpha);

struct TransferredOperator {
  OOperator op;
  Report report;  // "o_identity", "two_route", "induced_rep"
};

/// Throws NotALieOOperator.
TransferredOperator transfer_o_operator(const LieRepPair& p, const Matrix& t);

/// f in ker d~^1_T, checked against delta^1_T. Verdict "cocycle"; throws NotACocycle.
TransferredCochain transfer_T_1cocycle(const LieRepPair& p, const Matrix& t, const LieCochain& f);
/// phi in ker d~^2_T; omega uses [,]_T and rho_T. Verdicts "in_space", "cocycle".
TransferredCochain transfer_T_2cocycle(const LieRepPair& p, const Matrix& t, const LieCochain& phi);

}  // namespace triplekit
