#include <doctest.h>

#include "support.hpp"
#include "triplekit/error.hpp"

using namespace triplekit;
using support::e;
using support::vec;

namespace {

// delta^1 written out on basis triples, independent of the general builder.
Cochain delta1_by_hand(const LtsRepPair& p, const Cochain& f) {
  const std::size_t n = p.dim(), m = p.module_dim();
  Cochain out(3, n, m);
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& x) {
    Vector v = p.theta(x[1], x[2]).apply(f.value({x[0]}));
    v = v - p.theta(x[0], x[2]).apply(f.value({x[1]}));
    v = v + p.D(x[0], x[1]).apply(f.value({x[2]}));
    v = v - f.evaluate({p.algebra().bracket(e(n, x[0]), e(n, x[1]), e(n, x[2]))});
    out.set_value(x, v);
  });
  return out;
}

std::vector<OOperator> valid_operators() {
  return {support::dim2_operator(),
          {adjoint_rep(support::dim4()), support::dim4_family({0, 1, 0, 0, 0, 0, 0, 0, 0})},
          support::fixture("paper/dim4").o_operator(),
          {LtsRepresentation::zero(LtsStructure(2), 3), Matrix{{1, 0, 2}, {0, 1, -1}}}};
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("cochain space dimensions") {
  CHECK(cochain_space(3, 2, 1).dim() == 6);
  CHECK(cochain_space(2, 1, 3).dim() == 2);
  CHECK(cochain_space(1, 4, 3).dim() == 0);
  CHECK(cochain_space(2, 2, 5).dim() == 16);
  try {
    cochain_space(2, 2, 2);
    FAIL("expected EvenDegree");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::EvenDegree);
  }
}

TEST_CASE("degree 3, source 2, target 1 is fixed by f(0,1,0) and f(0,1,1)") {
  const CochainSpace s = cochain_space(2, 1, 3);
  REQUIRE(s.dim() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const Cochain f = s.basis_cochain(k);
    CHECK(s.check_constraints(f).passed());
    CHECK(s.coordinates(f) == e(2, k));
  }
  // the free slot is the later index of each antisymmetric pair
  CHECK(s.basis_cochain(0).value({1, 0, 0}) == vec({1}));
  CHECK(s.basis_cochain(0).value({0, 1, 0}) == vec({-1}));
  CHECK(s.basis_cochain(0).value({0, 1, 1}) == vec({0}));
  CHECK(s.basis_cochain(1).value({0, 1, 1}) == vec({-1}));
  CHECK(s.basis_cochain(1).value({0, 1, 0}) == vec({0}));
}

TEST_CASE("cochain space basis satisfies the constraints") {
  for (std::size_t degree : {1u, 3u, 5u}) {
    const CochainSpace s = cochain_space(3, 2, degree);
    support::Rng rng(degree);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const Cochain f = s.basis_cochain(k);
      CHECK(s.contains(f));
    }
    const Vector c = rng.vector(s.dim());
    const Cochain f = s.from_coordinates(c);
    CHECK(s.coordinates(f) == c);
    CHECK(s.as_subspace().contains(f.values()));
  }
  // a cochain violating each constraint
  const CochainSpace s = cochain_space(2, 1, 3);
  Cochain bad(3, 2, 1);
  bad.set_value({0, 0, 1}, vec({1}));
  CHECK_FALSE(s.check_constraints(bad).at("slot_antisymmetry").passed);
  CHECK_FALSE(s.contains(bad));
  const CochainSpace s3 = cochain_space(3, 1, 3);
  Cochain skew(3, 3, 1);
  skew.set_value({0, 1, 2}, vec({1}));
  skew.set_value({1, 0, 2}, vec({-1}));
  const Report r = s3.check_constraints(skew);
  CHECK(r.at("slot_antisymmetry").passed);
  CHECK_FALSE(r.at("cyclic").passed);
  CHECK_FALSE(s3.contains(skew));
}

TEST_CASE("coboundary of the zero pair vanishes") {
  const LtsRepPair p = LtsRepresentation::zero(LtsStructure(2), 2);
  CHECK(yamaguti_coboundary(p, 1).matrix.is_zero());
  CHECK(yamaguti_coboundary(p, 3).matrix.is_zero());
  const CohomologyReport h1 = yamaguti_cohomology(p, 1);
  CHECK(h1.dim_H == 4);
  CHECK(h1.convention == "B^1 = 0");
  const CohomologyReport h3 = yamaguti_cohomology(p, 3);
  CHECK(h3.dim_H == cochain_space(2, 2, 3).dim());
}

TEST_CASE("delta^1 matches the hand formula") {
  std::vector<LtsRepPair> pairs = {adjoint_rep(support::dim2()), adjoint_rep(support::dim4()),
                                   support::fixture("lie/sl2-rep").lts_pair()};
  for (const auto& p : pairs) {
    const CochainSpace c1 = cochain_space(p.dim(), p.module_dim(), 1);
    for (std::size_t k = 0; k < c1.dim(); ++k) {
      const Cochain f = c1.basis_cochain(k);
      CHECK(yamaguti_delta(p, f) == delta1_by_hand(p, f));
    }
  }
}

TEST_CASE("delta squares to zero") {
  std::vector<LtsRepPair> pairs = {adjoint_rep(support::dim2()),
                                   LtsRepresentation::zero(support::dim2(), 1),
                                   adjoint_rep(semidirect_product(adjoint_rep(support::dim2()))),
                                   support::fixture("lie/heisenberg-rep").lts_pair()};
  for (const auto& p : pairs) {
    const Matrix d1 = yamaguti_coboundary(p, 1).matrix;
    const CoboundaryMatrix d3 = yamaguti_coboundary(p, 3);
    CHECK(d3.lands_in_codomain);
    CHECK((d3.matrix * d1).is_zero());
  }
  const LtsRepPair p = adjoint_rep(support::dim2());
  CHECK((yamaguti_coboundary(p, 5).matrix * yamaguti_coboundary(p, 3).matrix).is_zero());
}

TEST_CASE("cohomology of the 2-dim example") {
  const LtsRepPair p = adjoint_rep(support::dim2());
  const CohomologyReport h1 = yamaguti_cohomology(p, 1);
  CHECK(h1.dim_cochains == 4);
  CHECK(h1.dim_cocycles == 2);
  CHECK(h1.dim_coboundaries == 0);
  CHECK(h1.dim_H == 2);
  const CohomologyReport h3 = yamaguti_cohomology(p, 3);
  CHECK(h3.dim_cochains == 4);
  CHECK(h3.dim_cocycles == 3);
  CHECK(h3.dim_coboundaries == 2);
  CHECK(h3.dim_H == 1);
  CHECK(h3.convention == "B = im delta^(d-2)");
  for (const auto& r : {h1, h3}) {
    CHECK(r.cocycles.contains(r.coboundaries));
    CHECK(r.dim_H == r.dim_cocycles - r.dim_coboundaries);
  }
  CHECK_THROWS_AS(yamaguti_cohomology(p, 4), Error);
}

TEST_CASE("check_cocycle") {
  const LtsRepPair p = adjoint_rep(support::dim2());
  CHECK(check_cocycle(p, Cochain(1, 2, 2)).passed());
  CHECK(check_cocycle(p, Cochain(3, 2, 2)).passed());

  support::Rng rng(4);
  const Cochain g = Cochain::from_matrix(rng.matrix(2, 2));
  CHECK(check_cocycle(p, yamaguti_delta(p, g)).passed());

  // Id is not a 1-cocycle of the adjoint pair: delta(Id)(x,y,z) = 2[x,y,z]
  const Report r = check_cocycle(p, Cochain::from_matrix(Matrix::identity(2)));
  CHECK_FALSE(r.at("fast_path").passed);
  CHECK_FALSE(r.at("kernel").passed);
  CHECK(r.at("agreement").passed);
  REQUIRE(r.at("fast_path").witness.has_value());
  CHECK(r.at("fast_path").witness->indices == std::vector<std::size_t>{0, 1, 1});

  for (int k = 0; k < 10; ++k) {
    const Cochain f = cochain_space(2, 2, 3).from_coordinates(rng.vector(4));
    CHECK(check_cocycle(p, f).at("agreement").passed);
  }
  Cochain outside(3, 2, 2);
  outside.set_value({0, 0, 1}, vec({1, 0}));
  CHECK_FALSE(check_cocycle(p, outside).at("in_space").passed);
}

TEST_CASE("induced structures of an O-operator") {
  const OOperator t = support::dim2_operator();
  const LtsStructure b = induced_bracket(t);
  CHECK(b.bracket(e(2, 0), e(2, 1), e(2, 1)) == vec({4, 0}));
  CHECK(check_induced_homomorphism(t).passed());

  const OOperator zero{t.pair, Matrix(2, 2)};
  CHECK(induced_bracket(zero).is_zero());
  CHECK(induced_rep(zero) == LtsRepresentation::zero(LtsStructure(2), 2));

  for (const auto& op : valid_operators()) {
    CHECK(check_lts_axioms(induced_bracket(op)).passed());
    CHECK(check_rep_axioms(induced_rep(op)).passed());
    CHECK(check_induced_homomorphism(op).passed());
    CHECK(check_induced_D(op).passed());
  }

  try {
    induced_bracket({t.pair, Matrix::identity(2)});
    FAIL("expected NotAnOOperator");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotAnOOperator);
  }
}

TEST_CASE("partial_T") {
  const OOperator t = support::dim2_operator();
  CHECK(partial_T(t, Bivector(2)).is_zero());
  const Cochain d = partial_T(t, Bivector::wedge(2, 0, 1));
  CHECK(d.value({1}) == vec({-2, 0}));
  CHECK(partial_T_matrix(t).cols() == 1);
  CHECK(partial_T_matrix(t).rows() == 4);

  support::Rng rng(12);
  for (const auto& op : valid_operators()) {
    const LtsRepresentation rep = induced_rep(op);
    for (int k = 0; k < 25; ++k) {
      const Cochain c = partial_T(op, rng.bivector(op.pair.dim()));
      CHECK(yamaguti_delta(rep, c).is_zero());
    }
    const Matrix d1 = o_operator_coboundary(op, 1).matrix;
    CHECK((d1 * partial_T_matrix(op)).is_zero());
  }
}

TEST_CASE("O-operator coboundary two ways") {
  for (const auto& op : valid_operators()) {
    CHECK(o_coboundary_data(op, Route::Generic) == o_coboundary_data(op, Route::Direct));
    CHECK(o_operator_coboundary(op, 1, Route::Generic).matrix == o_operator_coboundary(op, 1, Route::Direct).matrix);
  }
}

TEST_CASE("O-operator cohomology") {
  const OOperator zero{LtsRepresentation::zero(LtsStructure(2), 3), Matrix(2, 3)};
  const CohomologyReport z = o_operator_cohomology(zero, 1);
  CHECK(z.dim_H == 6);
  CHECK(z.convention == "B^1 = im partial_T");

  const CohomologyReport h1 = o_operator_cohomology(support::dim2_operator(), 1);
  CHECK(h1.dim_cochains == 4);
  CHECK(h1.dim_cocycles == 3);
  CHECK(h1.dim_coboundaries == 1);
  CHECK(h1.dim_H == 2);
  const CohomologyReport h3 = o_operator_cohomology(support::dim2_operator(), 3);
  CHECK(h3.dim_cocycles == 3);
  CHECK(h3.dim_coboundaries == 1);
  CHECK(h3.dim_H == 2);
}

TEST_CASE("degree-1 display agrees with the kernel") {
  support::Rng rng(33);
  for (const auto& op : valid_operators()) {
    const std::size_t n = op.pair.dim(), m = op.pair.module_dim();
    const Subspace z = o_operator_cohomology(op, 1).cocycles;
    for (int k = 0; k < 50; ++k) {
      // half the samples are cocycles
      const Vector c = (k % 2 == 0) ? rng.combination(z.basis(), n * m) : rng.vector(n * m);
      const Cochain f = cochain_space(m, n, 1).from_coordinates(c);
      const Report r = check_o_cocycle_degree1(op, f);
      CHECK(r.at("display_identity").passed);
      CHECK(r.at("agreement").passed);
      if (k % 2 == 0) CHECK(r.at("kernel").passed);
    }
  }
}

TEST_CASE("gamma cochain map") {
  const OOperator t = support::dim2_operator();
  for (std::size_t d : {0u, 1u, 3u}) {
    const GammaMap g = gamma_cochain_map({t, t, Matrix::identity(2), Matrix::identity(2)}, d);
    CHECK(g.report.passed());
    CHECK(g.matrix == Matrix::identity(g.matrix.rows()));
  }

  const Matrix phi{{2, 0}, {0, 1}};
  const OOperator t2{t.pair, Matrix{{0, 2}, {0, 2}}};
  for (std::size_t d : {0u, 1u, 3u}) {
    const GammaMap g = gamma_cochain_map({t, t2, phi, phi}, d);
    CHECK(g.report.passed());
    if (d == 1) {
      CHECK(g.report.at("cocycles_preserved").passed);
      CHECK(g.report.at("coboundaries_preserved").passed);
    }
  }

  try {
    gamma_cochain_map({t, OOperator{t.pair, Matrix(2, 2)}, Matrix(2, 2), Matrix(2, 2)}, 1);
    FAIL("expected PsiNotInvertible");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PsiNotInvertible);
  }
  try {
    gamma_cochain_map({t, t, phi, phi}, 1);
    FAIL("expected NotAMorphism");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotAMorphism);
  }
}

}  // TEST_SUITE
