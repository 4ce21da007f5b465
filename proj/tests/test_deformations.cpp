#include <doctest.h>

#include "support.hpp"
#include "triplekit/error.hpp"

using namespace triplekit;
using support::e;
using support::vec;

namespace {

Matrix e01(const Scalar& q) { return Matrix{{0, q}, {0, 0}}; }

Matrix unflatten(const Vector& c, std::size_t n, std::size_t m) {
  Matrix out(n, m);
  for (std::size_t k = 0; k < c.size(); ++k) out(k % n, k / n) = c[k];
  return out;
}

}  // namespace

TEST_SUITE("deformations") {

TEST_CASE("infinitesimal deformations") {
  const OOperator t = support::dim2_operator();
  CHECK(check_infinitesimal(t, Matrix(2, 2)).passed());
  CHECK(check_infinitesimal(t, t.matrix).passed());

  const Report id = check_infinitesimal(t, Matrix::identity(2));
  CHECK_FALSE(id.at("order2").passed);
  CHECK_FALSE(id.at("order3").passed);
  CHECK_THROWS_AS(check_infinitesimal(t, Matrix(2, 3)), Error);
}

TEST_CASE("order-1 solutions are 1-cocycles") {
  support::Rng rng(19);
  for (const auto& t : {support::dim2_operator(), support::fixture("paper/dim4").o_operator()}) {
    const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
    const Subspace sols = kernel_basis(linearised_residual(t));
    const Subspace z1 = o_operator_cohomology(t, 1).cocycles;
    CHECK(z1.contains(sols));
    for (int k = 0; k < 5; ++k) {
      const Matrix t1 = unflatten(rng.combination(sols.basis(), n * m), n, m);
      CHECK(check_infinitesimal(t, t1).at("order1").passed);
      CHECK(check_o_cocycle_degree1(t, Cochain::from_matrix(t1)).at("kernel").passed);
    }
  }
}

TEST_CASE("infinitesimal agrees with formal at order 3") {
  support::Rng rng(21);
  const OOperator t = support::dim2_operator();
  for (int k = 0; k < 10; ++k) {
    const Matrix t1 = rng.matrix(2, 2, 0.5);
    const bool inf = check_infinitesimal(t, t1).passed();
    const bool formal = check_formal({t, {t1, Matrix(2, 2), Matrix(2, 2)}}).passed();
    CHECK(inf == formal);
  }
}

TEST_CASE("formal deformations and obstructions") {
  const OOperator t = support::dim2_operator();
  const DeformationSeries constant{t, {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)}};
  const Report r = check_formal(constant);
  CHECK(r.passed());
  CHECK(r.verdicts().size() == 4);
  CHECK(obstruction(constant, 0).is_zero());
  CHECK(obstruction(constant, 1).is_zero());
  CHECK(obstruction(constant, 4).is_zero());
  CHECK_THROWS_AS(obstruction(constant, 5), Error);

  const DeformationSeries order1{t, {e01(1)}};
  CHECK(check_formal(order1).passed());

  // T1 = Id solves order 1; this T2 does not fix order 2
  const DeformationSeries bad{t, {Matrix::identity(2), Matrix{{1, 0}, {0, 0}}}};
  const Report rb = check_formal(bad);
  CHECK_FALSE(rb.passed());
  CHECK(rb.at("order1").passed);
  CHECK(rb.first_failure() == std::optional<std::string>("order2"));

  // (1+t)T is a deformation, so order 2 is solvable after T1 = T
  const DeformationSeries lin{t, {t.matrix}};
  const Cochain obs = obstruction(lin, 2);
  const auto t2 = solve_next_coefficient(lin, 2);
  REQUIRE(t2.has_value());
  CHECK(check_formal({t, {t.matrix, *t2}}).passed());

  // the residual with an arbitrary T2 is obstruction + linear part
  const Matrix arbitrary{{1, 2}, {3, 4}};
  Vector flat(4);
  for (std::size_t c = 0; c < 4; ++c) flat[c] = arbitrary(c % 2, c / 2);
  const Vector residual = obs.values() + linearised_residual(t).apply(flat);
  const bool order2_ok = check_formal({t, {t.matrix, arbitrary}}).at("order2").passed;
  CHECK(order2_ok == is_zero(residual));
  CHECK_FALSE(order2_ok);
}

TEST_CASE("Nijenhuis elements") {
  const OOperator t = support::dim2_operator();
  CHECK(check_nijenhuis_element(t, Bivector(2)).member());
  for (int alpha : {1, 2}) {
    const NijenhuisElementReport r = check_nijenhuis_element(t, Scalar(alpha) * Bivector::wedge(2, 0, 1));
    CHECK(r.member());
    CHECK(r.report.verdicts().size() == 3);
  }
  // central bivector on the 4-dim example
  const OOperator t4 = support::fixture("paper/dim4").o_operator();
  const Bivector central = Bivector::wedge(4, 2, 3);
  REQUIRE(adjoint_matrix(t4.pair.algebra(), central).is_zero());
  CHECK(check_nijenhuis_element(t4, central).member());
}

TEST_CASE("equivalent deformations") {
  const OOperator t = support::dim2_operator();
  const DeformationSeries d{t, {e01(1)}};
  CHECK(check_equivalence(t, d, d, Bivector(2)).passed());

  for (int alpha : {1, 2}) {
    const Bivector x = Scalar(alpha) * Bivector::wedge(2, 0, 1);
    const DeformationSeries d2{t, {e01(1 + 2 * alpha)}};
    const Report r = check_equivalence(t, d, d2, x);
    CHECK(r.passed());
    CHECK(d.coefficient(1) - d2.coefficient(1) == partial_T(t, x).as_matrix());
  }

  // wrong target coefficient
  const Report wrong = check_equivalence(t, d, DeformationSeries{t, {e01(5)}}, Bivector::wedge(2, 0, 1));
  CHECK_FALSE(wrong.passed());
  CHECK_FALSE(wrong.at("difference").passed);

  const OOperator other{t.pair, Matrix{{0, 2}, {0, 2}}};
  try {
    check_equivalence(t, d, DeformationSeries{other, {e01(1)}}, Bivector(2));
    FAIL("expected BaseMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::BaseMismatch);
  }
}

TEST_CASE("rigidity certificate") {
  const OOperator t = support::dim2_operator();
  const RigidityCertificate basis = rigidity_certificate(t, Bivector::basis(2));
  CHECK_FALSE(basis.certified);
  CHECK(basis.dim_cocycles == 3);
  CHECK(basis.dim_span == 1);
  CHECK(basis.codimension == 2);
  CHECK(basis.members == std::vector<std::size_t>{0});
  CHECK(basis.report.at("span_in_nij").passed);
  CHECK_FALSE(basis.report.at("span_equals_Z1").passed);
  CHECK(basis.scope == "one-sided: sufficient condition for rigidity only");

  const RigidityCertificate none = rigidity_certificate(t, {});
  CHECK_FALSE(none.certified);
  CHECK(none.codimension == 3);

  // Z^1_T = 0 when V = 0
  const OOperator empty{LtsRepresentation::zero(support::dim2(), 0), Matrix(2, 0)};
  const RigidityCertificate trivial = rigidity_certificate(empty, {});
  CHECK(trivial.dim_cocycles == 0);
  CHECK(trivial.certified);

  try {
    rigidity_certificate({t.pair, Matrix::identity(2)}, {});
    FAIL("expected NotAnOOperator");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotAnOOperator);
  }
}

TEST_CASE("trivial deformations") {
  const OOperator t = support::dim2_operator();
  const DeformationSeries constant{t, {Matrix(2, 2), Matrix(2, 2)}};
  CHECK(check_trivial_deformation(t, constant, EquivalencePair{Bivector(2), {}, {}}).passed());

  for (int alpha : {1, 2}) {
    const Bivector x = Scalar(alpha) * Bivector::wedge(2, 0, 1);
    const DeformationSeries d{t, {partial_T(t, x).as_matrix()}};
    const Report r = check_trivial_deformation(t, d, EquivalencePair{x, {}, {}});
    CHECK(r.at("order1").passed);
    CHECK(r.at("cancellable").passed);
    CHECK(r.at("cancellation").passed);
    const std::vector<Matrix> conj = conjugated_series(d, EquivalencePair{x, {}, {}});
    CHECK(conj[0] == t.matrix);
    CHECK(conj[1].is_zero());
  }

  // E10 is not in im partial_T, which is spanned by E01
  const DeformationSeries off{t, {Matrix{{0, 0}, {1, 0}}}};
  const Report r = check_trivial_deformation(t, off, EquivalencePair{Bivector::wedge(2, 0, 1), {}, {}});
  CHECK_FALSE(r.at("cancellable").passed);
  CHECK_FALSE(r.at("order1").passed);
}

TEST_CASE("conjugated series order-1 coefficient is T1 - partial_T(X)") {
  support::Rng rng(77);
  const OOperator t = support::fixture("paper/dim4").o_operator();
  for (int k = 0; k < 5; ++k) {
    const Bivector x = rng.bivector(4);
    const Matrix t1 = rng.matrix(4, 4);
    const std::vector<Matrix> conj = conjugated_series({t, {t1}}, EquivalencePair{x, {}, {}});
    CHECK(conj[1] == t1 - partial_T(t, x).as_matrix());
  }
}

}  // TEST_SUITE
