#include <doctest.h>

#include "support.hpp"
#include "triplekit/error.hpp"
#include "triplekit/linalg.hpp"

using namespace triplekit;

TEST_SUITE("exactla") {

TEST_CASE("scalar text form") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-4") == -4);
  CHECK(parse_scalar("+2/3") == Scalar(2, 3));
  CHECK(format_scalar(Scalar(-6, 4)) == "-3/2");
  CHECK(format_scalar(Scalar(4, 2)) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("1.5"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::identity(2)).dim() == 0);
  CHECK(kernel_basis(Matrix(1, 2)).dim() == 2);

  const Matrix m{{1, 2}, {2, 4}};
  const Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == support::vec({-2, 1}));
}

TEST_CASE("kernel basis is canonical on free columns") {
  const Matrix m{{1, 0, 2, 0, 1}, {0, 1, 3, 0, 0}, {1, 1, 5, 0, 1}};
  const Subspace k = kernel_basis(m);
  REQUIRE(k.dim() == 3);
  // free columns 2, 3, 4
  CHECK(k.basis()[0] == support::vec({-2, -3, 1, 0, 0}));
  CHECK(k.basis()[1] == support::vec({0, 0, 0, 1, 0}));
  CHECK(k.basis()[2] == support::vec({-1, 0, 0, 0, 1}));
  for (const auto& b : k.basis()) CHECK(is_zero(m.apply(b)));
}

TEST_CASE("image_basis") {
  CHECK(image_basis(Matrix(3, 3)).dim() == 0);
  CHECK(image_basis(Matrix::identity(4)).dim() == 4);
  const Subspace im = image_basis(Matrix{{1, 2}, {2, 4}});
  REQUIRE(im.dim() == 1);
  CHECK(im.contains(support::vec({3, 6})));
  CHECK_FALSE(im.contains(support::vec({1, 0})));
}

TEST_CASE("quotient_dim") {
  const Subspace whole = Subspace::whole(2);
  CHECK(quotient_dim(whole, Subspace(2)) == 2);
  CHECK(quotient_dim(whole, whole) == 0);

  const Subspace z = Subspace::span_of(4, {support::e(4, 0), support::e(4, 1), support::e(4, 2)});
  const Subspace b = Subspace::span_of(4, {support::vec({1, 1, 1, 0})});
  CHECK(quotient_dim(z, b) == 2);

  const Subspace outside = Subspace::span_of(4, {support::e(4, 3)});
  try {
    quotient_dim(z, outside);
    FAIL("expected NotContained");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotContained);
  }
  try {
    quotient_dim(z, Subspace(3));
    FAIL("expected AmbientMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::AmbientMismatch);
  }
}

TEST_CASE("solve") {
  const auto x = solve(Matrix::identity(2), support::e(2, 0));
  REQUIRE(x.has_value());
  CHECK(*x == support::e(2, 0));
  CHECK_FALSE(solve(Matrix(2, 2), support::vec({1, 0})).has_value());
  CHECK_FALSE(solve(Matrix{{1, 2}, {2, 4}}, support::vec({1, 3})).has_value());
}

TEST_CASE("inverse") {
  const Matrix m{{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("reduced echelon on rational input") {
  const Matrix m{{Scalar(1, 2), Scalar(1, 3)}, {Scalar(1, 4), Scalar(1, 6)}, {0, Scalar(-2, 7)}};
  const Echelon ech = reduced_echelon(m);
  CHECK(ech.rank() == 2);
  CHECK(ech.pivots == std::vector<std::size_t>{0, 1});
  CHECK(ech.rref.rows() == 3);
  CHECK(ech.rref.row(0) == support::vec({1, 0}));
  CHECK(ech.rref.row(1) == support::vec({0, 1}));
  CHECK(is_zero(ech.rref.row(2)));
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
  support::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.index(6), c = 1 + rng.index(6);
    Matrix m = rng.matrix(r, c, 0.5);
    // force some dependent rows
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);
    }
    const Subspace k = kernel_basis(m);
    const Subspace im = image_basis(m);
    CHECK(k.dim() + im.dim() == c);
    CHECK(rank(m) == im.dim());
    for (const auto& b : k.basis()) CHECK(is_zero(m.apply(b)));
    for (std::size_t j = 0; j < c; ++j) CHECK(im.contains(m.column(j)));

    const Vector x = rng.vector(c);
    const Vector rhs = m.apply(x);
    const auto y = solve(m, rhs);
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == rhs);
  }
}

TEST_CASE("deterministic output") {
  support::Rng a(5), b(5);
  const Matrix m1 = a.matrix(5, 7), m2 = b.matrix(5, 7);
  REQUIRE(m1 == m2);
  CHECK(kernel_basis(m1) == kernel_basis(m2));
  CHECK(image_basis(m1) == image_basis(m2));
}

TEST_CASE("span_of and containment") {
  const Subspace s = Subspace::span_of(3, {support::vec({1, 1, 0}), support::vec({2, 2, 0}), support::vec({0, 1, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(support::vec({1, 0, -1})));
  CHECK_FALSE(s.contains(support::vec({0, 0, 1})));
  CHECK(Subspace::whole(3).contains(s));
  CHECK_FALSE(s.contains(Subspace::whole(3)));
}

}  // TEST_SUITE
