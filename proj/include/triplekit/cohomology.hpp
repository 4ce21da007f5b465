#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triplekit/linalg.hpp"
#include "triplekit/operators.hpp"

namespace triplekit {

/// Multilinear map (Q^source)^degree -> Q^target as a flat value tensor:
/// the value at (x_1,...,x_p) occupies
/// values[(((x_1 s + x_2) s + ...) s + x_p) t + l].
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim);
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, std::vector<Scalar> values);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t source_dim() const noexcept { return source_dim_; }
  std::size_t target_dim() const noexcept { return target_dim_; }
  const std::vector<Scalar>& values() const noexcept { return values_; }
  std::vector<Scalar>& values() noexcept { return values_; }

  /// Flat offset of the value at args.
  std::size_t offset(const std::vector<std::size_t>& args) const;
  Vector value(const std::vector<std::size_t>& args) const;
  void set_value(const std::vector<std::size_t>& args, const Vector& v);
  /// Multilinear evaluation at arbitrary vectors.
  Vector evaluate(const std::vector<Vector>& args) const;

  bool is_zero() const;

  /// Degree-1 cochain of a target x source matrix.
  static Cochain from_matrix(const Matrix& m);
  /// Degree 1 only.
  Matrix as_matrix() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_ = 0;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::vector<Scalar> values_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Scalar& s, const Cochain& f);

/// C^{2n+1}: f(...,x,x,y) = 0 and the cyclic sum over the last three slots
/// vanishes. The constraints only touch the last three slots, so the space
/// is (Q^s)^{(2n-2)} x K x Q^t with K cut out of Q^{s^3}; degree 1 is
/// unconstrained.
///
/// Coordinates are ordered (prefix, k, l) lexicographically, k running over
/// the canonical kernel basis of K. The coordinate of a member cochain is
/// its value at the k-th free slot triple, so coordinates() is a lookup.
class CochainSpace {
 public:
  CochainSpace() = default;
  /// Throws EvenDegree.
  CochainSpace(std::size_t source_dim, std::size_t target_dim, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t source_dim() const noexcept { return source_dim_; }
  std::size_t target_dim() const noexcept { return target_dim_; }
  std::size_t dim() const noexcept { return prefix_count_ * block_.size() * target_dim_; }
  /// Size of the raw value tensor.
  std::size_t raw_dim() const noexcept { return raw_dim_; }

  Cochain basis_cochain(std::size_t k) const;
  Cochain from_coordinates(const Vector& coords) const;
  /// Assumes f is a member; use check_constraints first for foreign data.
  Vector coordinates(const Cochain& f) const;

  /// Verdicts "slot_antisymmetry" and "cyclic" (trivially passing in degree 1).
  Report check_constraints(const Cochain& f) const;
  /// Same answer as check_constraints(f).passed(), without witnesses.
  bool contains(const Cochain& f) const;

  /// The space as a subspace of the raw tensor space.
  Subspace as_subspace() const;

  friend bool operator==(const CochainSpace& a, const CochainSpace& b) {
    return a.degree_ == b.degree_ && a.source_dim_ == b.source_dim_ && a.target_dim_ == b.target_dim_;
  }

 private:
  std::size_t degree_ = 1;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::size_t prefix_count_ = 1;
  std::size_t block_size_ = 0;  // s^3, or s in degree 1
  std::size_t raw_dim_ = 0;
  std::vector<Vector> block_;          // basis of K inside Q^{block_size_}
  std::vector<std::size_t> free_;      // free slot (flattened) of each K vector
};

CochainSpace cochain_space(std::size_t source_dim, std::size_t target_dim, std::size_t degree);

/// Everything the coboundary formula reads: the bracket of the source on
/// basis triples, and theta, D on basis pairs acting on the target.
struct CoboundaryData {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<SparseVector> bracket;  // s^3 entries
  std::vector<Matrix> theta;          // s^2 entries
  std::vector<Matrix> D;              // s^2 entries

  friend bool operator==(const CoboundaryData&, const CoboundaryData&) = default;
};

CoboundaryData coboundary_data(const LtsRepPair& p);

/// delta^{2n-1} f on the raw tensor, literally:
///   theta(x_{2n},x_{2n+1}) f(x_1..x_{2n-1}) - theta(x_{2n-1},x_{2n+1}) f(x_1..x_{2n-2},x_{2n})
///   + sum_k (-1)^{n+k} D(x_{2k-1},x_{2k}) f(.. omit x_{2k-1},x_{2k} ..)
///   + sum_k sum_{j>2k} (-1)^{n+k+1} f(.. omit .., [x_{2k-1},x_{2k},x_j], ..)
Cochain yamaguti_delta(const CoboundaryData& data, const Cochain& f);
Cochain yamaguti_delta(const LtsRepPair& p, const Cochain& f);

struct CoboundaryMatrix {
  std::size_t degree_from = 0;
  std::size_t degree_to = 0;
  Matrix matrix;  // columns: images of domain basis cochains, in codomain coordinates
  /// Every image satisfied the codomain constraints.
  bool lands_in_codomain = true;
};

CoboundaryMatrix coboundary_matrix(const CoboundaryData& data, std::size_t degree_from);

/// Throws InvalidRepresentation, EvenDegree.
CoboundaryMatrix yamaguti_coboundary(const LtsRepPair& p, std::size_t degree_from);

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  Subspace cocycles;
  Subspace coboundaries;
  /// Which incoming map defines B.
  std::string convention;
};

/// Z = ker delta^{degree}; B = im delta^{degree-2}, with B^1 = 0.
CohomologyReport yamaguti_cohomology(const LtsRepPair& p, std::size_t degree);

/// Verdicts "in_space", "fast_path", "kernel", "agreement". The fast path
/// evaluates the displayed cocycle conditions in degrees 1 and 3 and the
/// raw coboundary otherwise; "kernel" is membership in ker of the matrix.
Report check_cocycle(const LtsRepPair& p, const Cochain& f);

// ---------------------------------------------------------------------------
// O-operator side

/// [u,v,w]_T = D(Tu,Tv)w + theta(Tv,Tw)u - theta(Tu,Tw)v. Throws NotAnOOperator.
LtsStructure induced_bracket(const OOperator& t);

/// Verdict "homomorphism": T[u,v,w]_T = [Tu,Tv,Tw].
Report check_induced_homomorphism(const OOperator& t);

/// theta_T(u,v)x = [x,Tu,Tv] + T(theta(x,Tv)u - D(x,Tu)v) on L. Throws NotAnOOperator.
LtsRepresentation induced_rep(const OOperator& t);

/// D_T(u,v)z = [Tu,Tv,z] - T(-theta(Tu,z)v + theta(Tv,z)u), built directly.
Matrix induced_D_display(const OOperator& t, std::size_t u, std::size_t v);

/// Verdict "D_display": the derived D of induced_rep equals induced_D_display.
Report check_induced_D(const OOperator& t);

/// v -> T D(X) v - [X, T v], a degree-1 cochain V -> L.
Cochain partial_T(const OOperator& t, const Bivector& x);

/// Columns: partial_T of the lexicographic bivector basis, in C^1 coordinates.
Matrix partial_T_matrix(const OOperator& t);

/// Coboundary data of the induced pair. Generic reads induced_rep with the
/// derived D; Direct uses the displayed formulas for [.,.,.]_T, theta_T and
/// D_T without going through the representation class.
enum class Route { Generic, Direct };
CoboundaryData o_coboundary_data(const OOperator& t, Route route);

CoboundaryMatrix o_operator_coboundary(const OOperator& t, std::size_t degree_from, Route route = Route::Generic);

/// Degree 1: Z = ker delta^1_T, B = im partial_T. Higher odd degrees: the
/// Yamaguti cohomology of the induced pair. Throws NotAnOOperator, EvenDegree.
CohomologyReport o_operator_cohomology(const OOperator& t, std::size_t degree);

/// The expanded degree-1 condition for f: V -> L,
///   D_T(v1,v2)f(v3) - theta_T(v1,v3)f(v2) + theta_T(v2,v3)f(v1) - f([v1,v2,v3]_T)
///   = [Tv1,Tv2,f(v3)] + [Tv1,f(v2),Tv3] + [f(v1),Tv2,Tv3]
///     - T(-D(f(v2),Tv1)v3 + D(f(v1),Tv2)v3 + theta(Tv2,f(v3))v1 + theta(f(v2),Tv3)v1
///         - theta(Tv1,f(v3))v2 - theta(f(v1),Tv3)v2)
///     - f(D(Tv1,Tv2)v3 + theta(Tv2,Tv3)v1 - theta(Tv1,Tv3)v2).
/// Verdicts "display" (right-hand side vanishes), "kernel" (f in ker
/// delta^1_T) and "agreement".
Report check_o_cocycle_degree1(const OOperator& t, const Cochain& f);

/// gamma(f) = phi o f o (psi^{-1} x ... x psi^{-1}); on bivectors
/// gamma(x ^ y) = phi x ^ phi y.
struct GammaMap {
  std::size_t degree = 0;
  Matrix matrix;
  /// "square": d_{T'} gamma = gamma d_T at this degree. For degree 1 also
  /// "cocycles_preserved" and "coboundaries_preserved".
  Report report;
};

/// Throws PsiNotInvertible, NotAMorphism.
GammaMap gamma_cochain_map(const OOperatorMorphism& m, std::size_t degree);

/// gamma applied to a single cochain (degree >= 1).
Cochain gamma_apply(const Matrix& phi, const Matrix& psi_inverse, const Cochain& f);

}  // namespace triplekit
