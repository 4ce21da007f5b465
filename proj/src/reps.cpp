#include "triplekit/reps.hpp"

#include <mutex>
#include <optional>
#include <string>

#include "triplekit/error.hpp"

namespace triplekit {

struct LtsRepresentation::Cache {
  std::once_flag once;
  bool axioms = false;
};

LtsRepresentation::LtsRepresentation(LtsStructure algebra, std::size_t module_dim, std::vector<Matrix> theta)
    : algebra_(std::move(algebra)), module_dim_(module_dim), theta_(std::move(theta)),
      cache_(std::make_shared<Cache>()) {
  const std::size_t n = algebra_.dim();
  if (theta_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "theta needs dim^2 matrices");
  for (const auto& m : theta_) {
    if (m.rows() != module_dim_ || m.cols() != module_dim_) {
      throw Error(ErrorCode::DimensionMismatch, "theta matrices must be module_dim x module_dim");
    }
  }
  d_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d_[i * n + j] = theta_[j * n + i] - theta_[i * n + j];
}

LtsRepresentation LtsRepresentation::from_entries(LtsStructure algebra, std::size_t module_dim,
                                                  const std::vector<ThetaEntry>& entries) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> theta(n * n, Matrix(module_dim, module_dim));
  std::vector<bool> seen(n * n, false);
  for (const auto& e : entries) {
    const auto [i, j] = e.pair;
    if (i >= n || j >= n) throw Error(ErrorCode::InvalidInput, "theta pair index out of range");
    if (seen[i * n + j]) {
      throw Error(ErrorCode::InvalidInput,
                  "theta pair (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice");
    }
    seen[i * n + j] = true;
    theta[i * n + j] = e.matrix;
  }
  return LtsRepresentation(std::move(algebra), module_dim, std::move(theta));
}

LtsRepresentation LtsRepresentation::zero(LtsStructure algebra, std::size_t module_dim) {
  const std::size_t n = algebra.dim();
  return LtsRepresentation(std::move(algebra), module_dim, std::vector<Matrix>(n * n, Matrix(module_dim, module_dim)));
}

Matrix LtsRepresentation::theta(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "theta arguments");
  Matrix out(module_dim_, module_dim_);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      out += (x[i] * y[j]) * theta(i, j);
    }
  }
  return out;
}

Matrix LtsRepresentation::D(const Vector& x, const Vector& y) const { return theta(y, x) - theta(x, y); }

Vector LtsRepresentation::theta_apply(const Vector& x, const Vector& y, const Vector& u) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n || u.size() != module_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "theta arguments");
  }
  Vector out(module_dim_);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      theta(i, j).apply_add(x[i] * y[j], u, out);
    }
  }
  return out;
}

Vector LtsRepresentation::D_apply(const Vector& x, const Vector& y, const Vector& u) const {
  return theta_apply(y, x, u) - theta_apply(x, y, u);
}

bool LtsRepresentation::axioms_hold() const {
  if (!cache_) return check_rep_axioms(*this).passed();
  std::call_once(cache_->once, [this] { cache_->axioms = check_rep_axioms(*this).passed(); });
  return cache_->axioms;
}

namespace {

Matrix theta_of_sparse(const LtsRepresentation& r, const SparseVector& x, std::size_t j, bool x_first) {
  Matrix out(r.module_dim(), r.module_dim());
  for (const auto& [p, v] : x) out += v * (x_first ? r.theta(p, j) : r.theta(j, p));
  return out;
}

}  // namespace

Report check_rep_axioms(const LtsRepresentation& r) {
  const std::size_t n = r.dim();
  const LtsStructure& a = r.algebra();
  Report report("rep_axioms");
  Verdict& rep1 = report.add("rep1");
  Verdict& rep2 = report.add("rep2");
  const Matrix zero(r.module_dim(), r.module_dim());
  for_each_tuple(n, 4, [&](const std::vector<std::size_t>& t) {
    const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
    Matrix r1 = r.theta(z, w) * r.theta(x, y);
    r1 -= r.theta(y, w) * r.theta(x, z);
    r1 -= theta_of_sparse(r, a.basis_bracket(y, z, w), x, false);
    r1 += r.D(y, z) * r.theta(x, w);
    rep1.record(t, r1.entries(), zero.entries());

    Matrix r2 = r.theta(z, w) * r.D(x, y);
    r2 -= r.D(x, y) * r.theta(z, w);
    r2 += theta_of_sparse(r, a.basis_bracket(x, y, z), w, true);
    r2 += theta_of_sparse(r, a.basis_bracket(x, y, w), z, false);
    rep2.record(t, r2.entries(), zero.entries());
  });
  return report;
}

LtsRepresentation adjoint_rep(const LtsStructure& a) {
  if (!check_lts_axioms(a).passed()) throw Error(ErrorCode::NotAnLts, "adjoint representation needs an L.t.s");
  const std::size_t n = a.dim();
  std::vector<Matrix> theta(n * n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, v] : a.basis_bracket(k, i, j)) theta[i * n + j](l, k) = v;
  return LtsRepresentation(a, n, std::move(theta));
}

Matrix derived_D(const LtsRepresentation& r, const Vector& x, const Vector& y) { return r.D(x, y); }

Matrix bivector_D(const LtsRepresentation& r, const Bivector& x) {
  const std::size_t n = r.dim();
  if (x.dim() != n) throw Error(ErrorCode::DimensionMismatch, "bivector dimension differs from algebra");
  Matrix out(r.module_dim(), r.module_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar& c = x.coeffs()(i, j);
      if (sgn(c) != 0) out += c * r.D(i, j);
    }
  return out;
}

LtsStructure semidirect_product(const LtsRepPair& p, Validation validation) {
  if (validation == Validation::Check && !p.axioms_hold()) {
    throw Error(ErrorCode::InvalidRepresentation, "representation axioms fail");
  }
  const std::size_t n = p.dim();
  const std::size_t m = p.module_dim();
  const std::size_t N = n + m;
  std::vector<Scalar> c(N * N * N * N);
  auto at = [N, &c](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Scalar& {
    return c[((i * N + j) * N + k) * N + l];
  };
  // [x,y,z]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, v] : p.algebra().basis_bracket(i, j, k)) at(i, j, k, l) = v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t l = 0; l < m; ++l) {
          // [u, y, z] = theta(y,z)u and [x, u, z] = -theta(x,z)u
          at(n + u, i, j, n + l) = p.theta(i, j)(l, u);
          at(i, n + u, j, n + l) = -p.theta(i, j)(l, u);
          // [x, y, w] = D(x,y)w
          at(i, j, n + u, n + l) = p.D(i, j)(l, u);
        }
  return LtsStructure(N, std::move(c));
}

}  // namespace triplekit
