#pragma once

#include <cstddef>
#include <vector>

#include "triplekit/reps.hpp"

namespace triplekit {

/// T: V -> L, stored as an n x m matrix.
struct OOperator {
  LtsRepPair pair;
  Matrix matrix;
};

struct NijenhuisCandidate {
  LtsStructure algebra;
  Matrix matrix;
};

/// Ternary product {.,.,.} on Q^dim; mu(i,j,k,l) is the l-th coordinate of
/// {e_i,e_j,e_k}. No symmetry is imposed.
class PreLts {
 public:
  PreLts() = default;
  explicit PreLts(std::size_t dim) : dim_(dim), mu_(dim * dim * dim * dim) {}
  PreLts(std::size_t dim, std::vector<Scalar> mu);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& mu(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return mu_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const std::vector<Scalar>& tensor() const noexcept { return mu_; }

  Vector product(const Vector& x, const Vector& y, const Vector& z) const;
  /// {x,y,z}* = {z,y,x} - {z,x,y}
  Vector star(const Vector& x, const Vector& y, const Vector& z) const;
  /// [x,y,z]_C = {x,y,z}* + {x,y,z} - {y,x,z}
  Vector commutator(const Vector& x, const Vector& y, const Vector& z) const;

  friend bool operator==(const PreLts&, const PreLts&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> mu_;
};

struct OOperatorMorphism {
  OOperator source;
  OOperator target;
  Matrix phi;
  Matrix psi;
};

/// D(a,b)w + theta(b,c)u - theta(a,c)v, the common right-hand side of the
/// O-operator identity (with a = Tu, b = Tv, c = Tw).
Vector o_term(const LtsRepPair& p, const Vector& a, const Vector& b, const Vector& c, const Vector& u,
              const Vector& v, const Vector& w);

/// Verdict "rota_baxter": [Rx,Ry,Rz] = R([Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz]).
Report check_rota_baxter(const LtsStructure& a, const Matrix& r);

/// Verdict "o_identity" over all basis triples of V. Throws
/// InvalidRepresentation when the pair fails the rep axioms.
Report check_o_operator(const OOperator& t);

/// Verdict "graph_closed": the bracket of three graph generators (Te_a, e_a)
/// in the semidirect product lies in span{(Te_k, e_k)}.
Report check_graph_subalgebra(const OOperator& t);

/// (x,u) -> (Tu, 0), an (n+m) x (n+m) block matrix.
Matrix hat_lift(const OOperator& t);
/// Same matrix as hat_lift; used as the Nijenhuis lift.
Matrix bar_lift(const OOperator& t);

/// Verdict "nijenhuis":
///   [Nx,Ny,Nz] = N([Nx,Ny,z] + [x,Ny,Nz] + [Nx,y,Nz] - N([Nx,y,z] + [x,Ny,z] + [x,y,Nz] - N[x,y,z])).
Report check_nijenhuis_operator(const NijenhuisCandidate& nc);

/// [x,y,z]_N. Throws NotNijenhuis.
LtsStructure nijenhuis_deformed_bracket(const NijenhuisCandidate& nc);

/// {u,v,w} = theta(Tv,Tw)u. Throws NotAnOOperator.
PreLts induced_prelts(const OOperator& t);

/// Verdicts "cond1", "cond2" over all basis 5-tuples (x1,...,x5):
///   {x5,x1,[x2,x3,x4]_C} = {{x5,x1,x2},x3,x4} - {{x5,x1,x3},x2,x4} + {x2,x3,{x5,x1,x4}}*
///   {x1,x2,{x5,x3,x4}}* = {{x1,x2,x5}*,x3,x4} + {x5,[x1,x2,x3]_C,x4} + {x5,x3,[x1,x2,x4]_C}
Report check_prelts_axioms(const PreLts& p);

/// Throws NotAPreLts.
LtsStructure prelts_commutator(const PreLts& p);

/// Verdict "morphism": psi{u,v,w} = {psi u, psi v, psi w}'.
Report check_prelts_morphism(const PreLts& source, const PreLts& target, const Matrix& psi);

/// Verdicts:
///   "phi_morphism"  phi is an L.t.s morphism
///   "c1"            phi T = T' psi
///   "c2"            psi theta(x,y) = theta'(phi x, phi y) psi on basis pairs
///   "graph"         {(a, (phi + psi)a)} is a subalgebra of the direct sum of
///                   the two semidirect products
///   "graph_agreement"  graph verdict equals (phi_morphism and c2); the graph
///                   condition never sees T, so c1 is not part of it
Report check_o_morphism(const OOperatorMorphism& m);

}  // namespace triplekit
