#pragma once

#include <random>
#include <string>
#include <vector>

#include "triplekit/cohomology.hpp"
#include "triplekit/deformations.hpp"
#include "triplekit/io.hpp"
#include "triplekit/lie_bridge.hpp"

namespace support {

using namespace triplekit;

inline io::Document fixture(const std::string& name) {
  return io::Document{io::Workspace(std::nullopt).load(name)};
}

inline const std::vector<std::string>& lie_fixtures() {
  static const std::vector<std::string> names = {
      "lie/abelian2", "lie/abelian2-rep", "lie/heisenberg", "lie/heisenberg-rep",
      "lie/sl2",      "lie/sl2-rep",      "lie/solvable3",  "lie/solvable3-rep"};
  return names;
}

inline Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

/// 2-dim: [e0,e1,e1] = e0.
inline LtsStructure dim2() {
  return LtsStructure::from_brackets(2, {{{0, 1, 1}, {1, 0}}});
}

/// 4-dim: [e0,e1,e0] = e3.
inline LtsStructure dim4() {
  return LtsStructure::from_brackets(4, {{{0, 1, 0}, {0, 0, 0, 1}}});
}

inline Matrix dim4_family(const std::vector<Scalar>& p) {
  // a b c d e f g h k
  return Matrix{{0, p[0], 0, 0}, {0, 0, 0, 0}, {p[1], p[2], p[3], p[4]}, {p[5], p[6], p[7], p[8]}};
}

inline OOperator dim2_operator() { return OOperator{adjoint_rep(dim2()), Matrix{{0, 1}, {0, 2}}}; }

/// Seeded source of small rationals.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Scalar rational(int num = 5, int den = 4) {
    std::uniform_int_distribution<int> n(-num, num), d(1, den);
    const int a = n(gen_);
    const int b = d(gen_);
    Scalar s{mpz_class(a), mpz_class(b)};
    s.canonicalize();
    return s;
  }
  Scalar integer(int lo, int hi) { return Scalar(std::uniform_int_distribution<int>(lo, hi)(gen_)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, double density = 1.0) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(density)) m(i, j) = rational();
    return m;
  }
  Bivector bivector(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rational();
    return Bivector::from_upper(m);
  }
  Vector combination(const std::vector<Vector>& basis, std::size_t dim) {
    Vector v = zero_vector(dim);
    for (const auto& b : basis) axpy(v, rational(), b);
    return v;
  }

 private:
  std::mt19937 gen_;
};

}  // namespace support
