#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "triplekit/cohomology.hpp"
#include "triplekit/operators.hpp"

namespace triplekit {

/// T_t = T + sum_{i>=1} T_i t^i, truncated at order coefficients.size().
struct DeformationSeries {
  OOperator base;
  std::vector<Matrix> coefficients;
  std::size_t order() const noexcept { return coefficients.size(); }
  /// T_i, with T_0 = base.matrix and zero past the truncation order.
  Matrix coefficient(std::size_t i) const;
};

/// phi_t = Id + t[X,-] + sum_{i>=2} phi_i t^i, psi_t = Id + t D(X) + sum_{i>=2} psi_i t^i.
/// higher_phi[0] is phi_2.
struct EquivalencePair {
  Bivector X;
  std::vector<Matrix> higher_phi;
  std::vector<Matrix> higher_psi;
};

struct NijenhuisElementReport {
  Bivector X;
  Report report;  // "condition1", "condition2", "condition3"
  bool member() const { return report.passed(); }
};

/// Verdicts "order1", "order2", "order3": the coefficients of t, t^2, t^3 in
/// the O-identity for T + t T1. Throws DimensionMismatch.
Report check_infinitesimal(const OOperator& t, const Matrix& t1);

/// Verdicts "order0" .. "orderN" for the coefficient-wise O-identity.
Report check_formal(const DeformationSeries& d);

/// Order-s residual with T_s replaced by zero, as a degree-3 cochain V -> L.
/// Requires s <= order() + 1.
Cochain obstruction(const DeformationSeries& d, std::size_t s);

/// Matrix (n*m^3 x n*m) of T_s -> linear part of the order-s residual; the
/// same map for every s >= 1.
Matrix linearised_residual(const OOperator& t);

/// Some T_s making the order-s residual vanish, or nullopt.
std::optional<Matrix> solve_next_coefficient(const DeformationSeries& d, std::size_t s);

/// Verdicts "condition1", "condition2", "condition3".
NijenhuisElementReport check_nijenhuis_element(const OOperator& t, const Bivector& x);

/// Verdicts "condition1", "condition2", "defoo1", "defoo2", and
/// "difference" (T1 - T1' = d_T(X)). Throws BaseMismatch when the series do
/// not share the base T.
Report check_equivalence(const OOperator& t, const DeformationSeries& d1, const DeformationSeries& d2,
                         const Bivector& x);

struct RigidityCertificate {
  Report report;  // "span_equals_Z1", "span_in_nij"
  std::vector<std::size_t> members;  // indices into the candidate list
  std::size_t dim_cocycles = 0;
  std::size_t dim_span = 0;
  std::size_t codimension = 0;
  bool certified = false;
  std::string scope = "one-sided: sufficient condition for rigidity only";
};

/// Throws NotAnOOperator.
RigidityCertificate rigidity_certificate(const OOperator& t, const std::vector<Bivector>& candidates);

/// Coefficients 0..N of phi_t T_t psi_t^{-1}, with psi_t^{-1} the truncated
/// Neumann series.
std::vector<Matrix> conjugated_series(const DeformationSeries& d, const EquivalencePair& e);

/// Verdicts "order1" .. "orderN" (conjugated coefficient vanishes),
/// "cancellable" (T1 in im d_T) and "cancellation" (T1 = d_T(X) implies the
/// order-1 coefficient vanishes).
Report check_trivial_deformation(const OOperator& t, const DeformationSeries& d, const EquivalencePair& e);

}  // namespace triplekit
