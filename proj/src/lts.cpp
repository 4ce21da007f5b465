#include "triplekit/lts.hpp"

#include <string>

#include "triplekit/error.hpp"

namespace triplekit {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require_len(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected length " + std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LtsStructure

LtsStructure::LtsStructure(std::size_t dim) : dim_(dim), constants_(dim * dim * dim * dim) { build_sparse(); }

LtsStructure::LtsStructure(std::size_t dim, std::vector<Scalar> constants)
    : dim_(dim), constants_(std::move(constants)) {
  if (constants_.size() != dim * dim * dim * dim) {
    throw Error(ErrorCode::DimensionMismatch, "structure tensor must have dim^4 entries");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          if (constant(i, j, k, l) != -constant(j, i, k, l)) {
            throw Error(ErrorCode::InvalidInput, "bracket not antisymmetric in the first two slots at " +
                                                     triple_str(i, j, k) + " component " + std::to_string(l));
          }
        }
  build_sparse();
}

LtsStructure LtsStructure::from_brackets(std::size_t dim, const std::vector<TernaryBracketEntry>& entries) {
  std::vector<Scalar> c(dim * dim * dim * dim);
  std::vector<bool> set(dim * dim * dim, false);
  auto idx = [dim](std::size_t i, std::size_t j, std::size_t k) { return (i * dim + j) * dim + k; };
  auto assign = [&](std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
    const std::size_t t = idx(i, j, k);
    for (std::size_t l = 0; l < dim; ++l) {
      Scalar& slot = c[t * dim + l];
      if (set[t] && slot != value[l]) {
        throw Error(ErrorCode::InvalidInput, "conflicting values for bracket " + triple_str(i, j, k));
      }
      slot = value[l];
    }
    set[t] = true;
  };
  for (const auto& e : entries) {
    const auto [i, j, k] = e.args;
    if (i >= dim || j >= dim || k >= dim) {
      throw Error(ErrorCode::InvalidInput, "bracket index out of range " + triple_str(i, j, k));
    }
    if (e.value.size() != dim) throw Error(ErrorCode::InvalidInput, "bracket value has wrong length");
    if (i == j) {
      if (!triplekit::is_zero(e.value)) {
        throw Error(ErrorCode::InvalidInput, "bracket " + triple_str(i, j, k) + " must vanish");
      }
      continue;
    }
    assign(i, j, k, e.value);
    assign(j, i, k, Scalar(-1) * e.value);
  }
  return LtsStructure(dim, std::move(c));
}

void LtsStructure::build_sparse() {
  sparse_.assign(dim_ * dim_ * dim_, {});
  for (std::size_t t = 0; t < sparse_.size(); ++t) {
    for (std::size_t l = 0; l < dim_; ++l) {
      const Scalar& v = constants_[t * dim_ + l];
      if (sgn(v) != 0) sparse_[t].emplace_back(l, v);
    }
  }
}

Vector LtsStructure::bracket(const Vector& x, const Vector& y, const Vector& z) const {
  require_len(x, dim_, "bracket x");
  require_len(y, dim_, "bracket y");
  require_len(z, dim_, "bracket z");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(z[k]) == 0) continue;
        const Scalar xyz = xy * z[k];
        for (const auto& [l, v] : basis_bracket(i, j, k)) out[l] += xyz * v;
      }
    }
  }
  return out;
}

bool LtsStructure::is_zero() const {
  for (const auto& s : sparse_) {
    if (!s.empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LieStructure

LieStructure::LieStructure(std::size_t dim) : dim_(dim), constants_(dim * dim * dim) { build_sparse(); }

LieStructure::LieStructure(std::size_t dim, std::vector<Scalar> constants)
    : dim_(dim), constants_(std::move(constants)) {
  if (constants_.size() != dim * dim * dim) {
    throw Error(ErrorCode::DimensionMismatch, "Lie structure tensor must have dim^3 entries");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        if (constant(i, j, k) != -constant(j, i, k)) {
          throw Error(ErrorCode::InvalidInput, "Lie bracket not antisymmetric at (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ")");
        }
      }
  build_sparse();
}

LieStructure LieStructure::from_brackets(std::size_t dim, const std::vector<BinaryBracketEntry>& entries) {
  std::vector<Scalar> b(dim * dim * dim);
  std::vector<bool> set(dim * dim, false);
  auto assign = [&](std::size_t i, std::size_t j, const Vector& value) {
    const std::size_t t = i * dim + j;
    for (std::size_t k = 0; k < dim; ++k) {
      Scalar& slot = b[t * dim + k];
      if (set[t] && slot != value[k]) {
        throw Error(ErrorCode::InvalidInput,
                    "conflicting values for bracket (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      slot = value[k];
    }
    set[t] = true;
  };
  for (const auto& e : entries) {
    const auto [i, j] = e.args;
    if (i >= dim || j >= dim) throw Error(ErrorCode::InvalidInput, "Lie bracket index out of range");
    if (e.value.size() != dim) throw Error(ErrorCode::InvalidInput, "Lie bracket value has wrong length");
    if (i == j) {
      if (!triplekit::is_zero(e.value)) throw Error(ErrorCode::InvalidInput, "[e_i,e_i] must vanish");
      continue;
    }
    assign(i, j, e.value);
    assign(j, i, Scalar(-1) * e.value);
  }
  return LieStructure(dim, std::move(b));
}

void LieStructure::build_sparse() {
  sparse_.assign(dim_ * dim_, {});
  for (std::size_t t = 0; t < sparse_.size(); ++t) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Scalar& v = constants_[t * dim_ + k];
      if (sgn(v) != 0) sparse_[t].emplace_back(k, v);
    }
  }
}

Vector LieStructure::bracket(const Vector& x, const Vector& y) const {
  require_len(x, dim_, "Lie bracket x");
  require_len(y, dim_, "Lie bracket y");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, v] : basis_bracket(i, j)) out[k] += xy * v;
    }
  }
  return out;
}

Matrix LieStructure::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [k, v] : basis_bracket(i, j)) m(k, j) = v;
  return m;
}

// ---------------------------------------------------------------------------
// Bivector

Bivector Bivector::from_upper(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "bivector matrix must be square");
  Bivector x(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      x.coeffs_(i, j) = m(i, j);
      x.coeffs_(j, i) = -m(i, j);
    }
  return x;
}

Bivector Bivector::from_antisymmetric(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "bivector matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) throw Error(ErrorCode::InvalidInput, "bivector coefficients must be antisymmetric");
    }
  Bivector x(m.rows());
  x.coeffs_ = m;
  return x;
}

Bivector Bivector::wedge(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw Error(ErrorCode::DimensionMismatch, "wedge index out of range");
  Bivector x(dim);
  if (i == j) return x;
  x.coeffs_(i, j) = 1;
  x.coeffs_(j, i) = -1;
  return x;
}

std::vector<Bivector> Bivector::basis(std::size_t dim) {
  std::vector<Bivector> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) out.push_back(wedge(dim, i, j));
  return out;
}

Bivector Bivector::wedge(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "wedge of vectors of different length");
  const std::size_t n = x.size();
  Bivector b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar c = x[i] * y[j] - x[j] * y[i];
      b.coeffs_(i, j) = c;
      b.coeffs_(j, i) = -c;
    }
  return b;
}

Vector Bivector::coordinates() const {
  Vector v;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) v.push_back(coeffs_(i, j));
  return v;
}

Bivector Bivector::from_coordinates(std::size_t dim, const Vector& coords) {
  if (coords.size() != dim * (dim - (dim > 0 ? 1 : 0)) / 2) {
    throw Error(ErrorCode::DimensionMismatch, "bivector coordinate count");
  }
  Bivector x(dim);
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++t) {
      x.coeffs_(i, j) = coords[t];
      x.coeffs_(j, i) = -coords[t];
    }
  return x;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
  return Bivector::from_antisymmetric(a.coeffs() + b.coeffs());
}

Bivector operator*(const Scalar& s, const Bivector& x) { return Bivector::from_antisymmetric(s * x.coeffs()); }

// ---------------------------------------------------------------------------
// Checks

Report check_lts_axioms(const LtsStructure& a) {
  const std::size_t n = a.dim();
  Report report("lts_axioms");
  Verdict& anti = report.add("slot_antisymmetry");
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& t) {
    const Vector xyz = a.bracket(unit_vector(n, t[0]), unit_vector(n, t[1]), unit_vector(n, t[2]));
    const Vector yxz = a.bracket(unit_vector(n, t[1]), unit_vector(n, t[0]), unit_vector(n, t[2]));
    anti.record(t, xyz, Scalar(-1) * yxz);
  });

  Verdict& cyclic = report.add("cyclic");
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& t) {
    const Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]), z = unit_vector(n, t[2]);
    const Vector sum = a.bracket(x, y, z) + a.bracket(y, z, x) + a.bracket(z, x, y);
    cyclic.record(t, sum, Vector(n));
  });

  // [x,y,[z,t,e]] = [[x,y,z],t,e] + [z,[x,y,t],e] + [z,t,[x,y,e]]
  Verdict& derivation = report.add("derivation");
  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vector(n, i);
  for_each_tuple(n, 5, [&](const std::vector<std::size_t>& t) {
    const Vector &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &u = e[t[3]], &w = e[t[4]];
    const Vector lhs = a.bracket(x, y, a.bracket(z, u, w));
    const Vector rhs = a.bracket(a.bracket(x, y, z), u, w) + a.bracket(z, a.bracket(x, y, u), w) +
                       a.bracket(z, u, a.bracket(x, y, w));
    derivation.record(t, lhs, rhs);
  });
  return report;
}

Report check_lie_axioms(const LieStructure& g) {
  const std::size_t n = g.dim();
  Report report("lie_axioms");
  Verdict& anti = report.add("antisymmetry");
  for_each_tuple(n, 2, [&](const std::vector<std::size_t>& t) {
    const Vector xy = g.bracket(unit_vector(n, t[0]), unit_vector(n, t[1]));
    const Vector yx = g.bracket(unit_vector(n, t[1]), unit_vector(n, t[0]));
    anti.record(t, xy, Scalar(-1) * yx);
  });
  Verdict& jacobi = report.add("jacobi");
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& t) {
    const Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]), z = unit_vector(n, t[2]);
    const Vector sum = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
    jacobi.record(t, sum, Vector(n));
  });
  return report;
}

LtsStructure lie_to_lts(const LieStructure& g) {
  const Report r = check_lie_axioms(g);
  if (!r.passed()) throw Error(ErrorCode::NotALieAlgebra, "Jacobi identity fails");
  const std::size_t n = g.dim();
  std::vector<Scalar> c(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [p, bp] : g.basis_bracket(i, j))
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& [l, v] : g.basis_bracket(p, k)) c[((i * n + j) * n + k) * n + l] += bp * v;
  return LtsStructure(n, std::move(c));
}

Report check_lts_morphism(const AlgebraMorphism& m) {
  const std::size_t n = m.source.dim();
  const std::size_t n2 = m.target.dim();
  if (m.matrix.rows() != n2 || m.matrix.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix must be target.dim x source.dim");
  }
  Report report("lts_morphism");
  Verdict& v = report.add("morphism");
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& t) {
    const Vector lhs = m.matrix.apply(m.source.bracket(unit_vector(n, t[0]), unit_vector(n, t[1]), unit_vector(n, t[2])));
    const Vector rhs = m.target.bracket(m.matrix.column(t[0]), m.matrix.column(t[1]), m.matrix.column(t[2]));
    v.record(t, lhs, rhs);
  });
  return report;
}

Vector adjoint_action(const LtsStructure& a, const Bivector& x, const Vector& z) {
  if (x.dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "bivector dimension differs from algebra");
  require_len(z, a.dim(), "adjoint_action z");
  const std::size_t n = a.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar& c = x.coeffs()(i, j);
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(z[k]) == 0) continue;
        const Scalar ck = c * z[k];
        for (const auto& [l, v] : a.basis_bracket(i, j, k)) out[l] += ck * v;
      }
    }
  return out;
}

Matrix adjoint_matrix(const LtsStructure& a, const Bivector& x) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set_column(k, adjoint_action(a, x, unit_vector(n, k)));
  return m;
}

}  // namespace triplekit
