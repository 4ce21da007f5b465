#include <doctest.h>

#include "support.hpp"
#include "triplekit/error.hpp"

using namespace triplekit;
using support::e;
using support::vec;

namespace {

const std::vector<std::string>& operator_fixtures() {
  static const std::vector<std::string> names = {"lie/abelian2", "lie/heisenberg", "lie/sl2", "lie/solvable3"};
  return names;
}

LieCochain cochain_of(std::size_t degree, std::size_t s, std::size_t t, const Vector& coords) {
  return LieCochain(degree, s, t, coords);
}

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL("expected error");
  } catch (const Error& err) {
    CHECK(err.code() == code);
  }
}

}  // namespace

TEST_SUITE("lie_bridge") {

TEST_CASE("Lie representations") {
  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair p = support::fixture(name).lie_pair();
    CHECK(check_lie_rep(p).passed());
    CHECK(check_lie_rep(LieRepresentation::adjoint(p.algebra())).passed());
    CHECK(check_lie_rep(LieRepresentation::zero(p.algebra(), 2)).passed());
  }
  const LieStructure sl2 = support::fixture("lie/sl2").lie_algebra();
  support::Rng rng(3);
  std::vector<Matrix> rho;
  for (int i = 0; i < 3; ++i) rho.push_back(rng.matrix(2, 2));
  const Report r = check_lie_rep(LieRepresentation(sl2, 2, rho));
  CHECK_FALSE(r.passed());
  CHECK(r.at("rep").witness.has_value());
  CHECK_THROWS_AS(LieRepresentation(sl2, 2, {Matrix::identity(2)}), Error);
}

TEST_CASE("increasing tuples and alternating cochains") {
  CHECK(increasing_tuples(4, 2).size() == 6);
  CHECK(increasing_tuples(4, 2)[1] == std::vector<std::size_t>{0, 2});
  CHECK(increasing_tuples(3, 0).size() == 1);

  LieCochain f(2, 3, 1);
  f.set_increasing({0, 2}, vec({5}));
  CHECK(f.value({2, 0}) == vec({-5}));
  CHECK(f.value({1, 1}) == vec({0}));
  CHECK(LieCochain::from_cochain(f.to_cochain()) == f);

  Cochain bad(3, 2, 1);
  bad.set_value({0, 1, 0}, vec({1}));
  CHECK_THROWS_AS(LieCochain::from_cochain(bad), Error);
}

TEST_CASE("Chevalley-Eilenberg coboundary") {
  const LieRepPair p = support::fixture("lie/sl2-rep").lie_pair();
  // degree 0: d(v)(x) = rho(x)v
  const LieCochain v = cochain_of(0, 3, 2, vec({1, 2}));
  const LieCochain dv = ce_apply(p, v);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dv.value({i}) == p.rho(i).apply(vec({1, 2})));

  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair q = support::fixture(name).lie_pair();
    for (std::size_t d = 0; d < 3; ++d) {
      const Matrix a = ce_coboundary(q, d).matrix;
      const Matrix b = ce_coboundary(q, d + 1).matrix;
      CHECK((b * a).is_zero());
    }
  }

  const LieRepPair zero = LieRepresentation::zero(LieStructure(3), 2);
  for (std::size_t d = 0; d < 3; ++d) CHECK(ce_coboundary(zero, d).matrix.is_zero());

  // ce_apply agrees with the matrix
  support::Rng rng(14);
  const Vector c = rng.vector(ce_coboundary(p, 1).matrix.cols());
  CHECK(ce_apply(p, cochain_of(1, 3, 2, c)).values() == ce_coboundary(p, 1).matrix.apply(c));

  std::vector<Matrix> rho(3, Matrix::identity(2));
  expect_error(ErrorCode::InvalidRepresentation,
               [&] { ce_coboundary(LieRepresentation(p.algebra(), 2, rho), 1); });
}

TEST_CASE("Lie O-operators") {
  for (const auto& name : operator_fixtures()) {
    CAPTURE(name);
    const io::Document d = support::fixture(name);
    const LieRepPair p = d.lie_pair();
    CHECK(check_lie_o_operator(p, Matrix(p.dim(), p.module_dim())).passed());
    CHECK(check_lie_o_operator(p, d.matrix()).passed());
  }
  const LieRepPair sl2 = support::fixture("lie/sl2").lie_pair();
  CHECK_FALSE(check_lie_o_operator(sl2, Matrix::identity(3)).passed());
  expect_error(ErrorCode::NotALieOOperator, [&] { lie_induced_structures(sl2, Matrix::identity(3)); });
  expect_error(ErrorCode::NotALieOOperator, [&] { transfer_o_operator(sl2, Matrix::identity(3)); });
}

TEST_CASE("induced Lie structures") {
  for (const auto& name : operator_fixtures()) {
    CAPTURE(name);
    const io::Document d = support::fixture(name);
    const LieRepPair p = d.lie_pair();
    const LieInduced ind = lie_induced_structures(p, d.matrix());
    CHECK(check_lie_axioms(ind.bracket).passed());
    CHECK(check_lie_rep(ind.rep).passed());
    for (std::size_t deg = 0; deg < 2; ++deg) {
      const Matrix a = lie_o_coboundary(p, d.matrix(), deg).matrix;
      const Matrix b = lie_o_coboundary(p, d.matrix(), deg + 1).matrix;
      CHECK((b * a).is_zero());
    }
    const LieInduced zero = lie_induced_structures(p, Matrix(p.dim(), p.module_dim()));
    CHECK(zero.bracket == LieStructure(p.module_dim()));
    CHECK(zero.rep == LieRepresentation::zero(LieStructure(p.module_dim()), p.dim()));
  }
}

TEST_CASE("from Lie pairs to L.t.s pairs") {
  const LieStructure sl2 = support::fixture("lie/sl2").lie_algebra();
  const LtsRepPair zero = lts_rep_from_lie(LieRepresentation::zero(sl2, 2));
  CHECK(zero == LtsRepresentation::zero(lie_to_lts(sl2), 2));

  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair p = support::fixture(name).lie_pair();
    const LtsRepPair r = lts_rep_from_lie(p);
    CHECK(r.algebra() == lie_to_lts(p.algebra()));
    CHECK(check_rep_axioms(r).passed());
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) CHECK(r.theta(i, j) == p.rho(j) * p.rho(i));
    CHECK(check_semidirect_compatibility(p).passed());
  }

  // commuting rho on an abelian algebra
  const LieRepPair ab = support::fixture("lie/abelian2-rep").lie_pair();
  CHECK(lts_rep_from_lie(ab).algebra().is_zero());
}

TEST_CASE("transfer of 1-cocycles") {
  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair p = support::fixture(name).lie_pair();
    const std::size_t n = p.dim(), m = p.module_dim();
    CHECK(transfer_1cocycle(p, LieCochain(1, n, m)).report.passed());
    const Subspace z = kernel_basis(ce_coboundary(p, 1).matrix);
    for (const auto& b : z.basis()) {
      const TransferredCochain t = transfer_1cocycle(p, cochain_of(1, n, m, b));
      CHECK(t.report.passed());
      CHECK(yamaguti_delta(lts_rep_from_lie(p), t.cochain).is_zero());
    }
    // coboundaries of 0-cochains
    for (std::size_t k = 0; k < m; ++k) {
      const LieCochain dv = ce_apply(p, cochain_of(0, n, m, e(m, k)));
      CHECK(transfer_1cocycle(p, dv).report.passed());
    }
  }
  const LieRepPair p = support::fixture("lie/sl2").lie_pair();
  expect_error(ErrorCode::NotACocycle, [&] { transfer_1cocycle(p, cochain_of(1, 3, 3, e(9, 0))); });
}

TEST_CASE("transfer of 2-cocycles") {
  support::Rng rng(44);
  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair p = support::fixture(name).lie_pair();
    const LtsRepPair r = lts_rep_from_lie(p);
    const std::size_t n = p.dim(), m = p.module_dim();
    CHECK(transfer_2cocycle(p, LieCochain(2, n, m)).cochain.is_zero());
    const Subspace z = kernel_basis(ce_coboundary(p, 2).matrix);
    for (const auto& b : z.basis()) {
      const TransferredCochain t = transfer_2cocycle(p, cochain_of(2, n, m, b));
      CHECK(t.report.passed());
      CHECK(yamaguti_delta(r, t.cochain).is_zero());
    }
    // phi = d(alpha) gives omega = delta^1(alpha); cohomologous phis differ by delta^1
    const LieCochain alpha = cochain_of(1, n, m, rng.vector(n * m));
    const LieCochain dalpha = ce_apply(p, alpha);
    CHECK(transfer_2cocycle(p, dalpha).cochain == yamaguti_delta(r, alpha.to_cochain()));
    if (z.dim() > 0) {
      const LieCochain phi = cochain_of(2, n, m, z.basis()[0]);
      const LieCochain phi2(2, n, m, phi.values() + dalpha.values());
      CHECK(transfer_2cocycle(p, phi2).cochain - transfer_2cocycle(p, phi).cochain ==
            yamaguti_delta(r, alpha.to_cochain()));
    }
  }
  const LieRepPair p = support::fixture("lie/sl2").lie_pair();
  expect_error(ErrorCode::NotACocycle, [&] { transfer_2cocycle(p, cochain_of(2, 3, 3, e(9, 0))); });
}

TEST_CASE("associated identity on a basis") {
  for (const auto& name : support::lie_fixtures()) {
    CAPTURE(name);
    const LieRepPair p = support::fixture(name).lie_pair();
    const std::size_t n = p.dim(), m = p.module_dim();
    for (std::size_t k = 0; k < n * m; ++k) CHECK(check_associated_identity(p, cochain_of(1, n, m, e(n * m, k))).passed());
  }
}

TEST_CASE("transfer of O-operators") {
  for (const auto& name : operator_fixtures()) {
    CAPTURE(name);
    const io::Document d = support::fixture(name);
    const LieRepPair p = d.lie_pair();
    const TransferredOperator t = transfer_o_operator(p, d.matrix());
    CHECK(t.report.passed());
    CHECK(check_o_operator(t.op).passed());
    CHECK(induced_bracket(t.op) == lie_to_lts(lie_induced_structures(p, d.matrix()).bracket));
    CHECK(transfer_o_operator(p, Matrix(p.dim(), p.module_dim())).report.passed());
  }
}

TEST_CASE("transfer of O-operator cocycles") {
  support::Rng rng(8);
  for (const auto& name : operator_fixtures()) {
    CAPTURE(name);
    const io::Document d = support::fixture(name);
    const LieRepPair p = d.lie_pair();
    const Matrix t = d.matrix();
    const std::size_t n = p.dim(), m = p.module_dim();
    const OOperator op = transfer_o_operator(p, t).op;
    const CoboundaryData data = o_coboundary_data(op, Route::Direct);

    CHECK(transfer_T_1cocycle(p, t, LieCochain(1, m, n)).report.passed());
    CHECK(transfer_T_2cocycle(p, t, LieCochain(2, m, n)).report.passed());
    const Subspace z1 = kernel_basis(lie_o_coboundary(p, t, 1).matrix);
    for (const auto& b : z1.basis()) {
      const TransferredCochain tc = transfer_T_1cocycle(p, t, cochain_of(1, m, n, b));
      CHECK(tc.report.passed());
      CHECK(yamaguti_delta(data, tc.cochain).is_zero());
    }
    const Subspace z2 = kernel_basis(lie_o_coboundary(p, t, 2).matrix);
    for (const auto& b : z2.basis()) {
      const TransferredCochain tc = transfer_T_2cocycle(p, t, cochain_of(2, m, n, b));
      CHECK(tc.report.passed());
      CHECK(yamaguti_delta(data, tc.cochain).is_zero());
    }
    const LieCochain alpha = cochain_of(1, m, n, rng.vector(n * m));
    const LieCochain dalpha(2, m, n, lie_o_coboundary(p, t, 1).matrix.apply(alpha.values()));
    CHECK(transfer_T_2cocycle(p, t, dalpha).cochain == yamaguti_delta(data, alpha.to_cochain()));
  }
}

}  // TEST_SUITE
