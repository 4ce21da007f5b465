#include "triplekit/linalg.hpp"

#include <utility>

#include "triplekit/error.hpp"

namespace triplekit {

namespace {

// Integer matrix with each rational row scaled by the lcm of its denominators.
std::vector<mpz_class> clear_denominators(const Matrix& m) {
  std::vector<mpz_class> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& den = m(r, c).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      if (sgn(x) == 0) continue;
      a[r * m.cols() + c] = x.get_num() * (l / x.get_den());
    }
  }
  return a;
}

}  // namespace

namespace {

// Divides a row by the gcd of its entries and makes the entry at `lead` positive.
void make_primitive(mpz_class* row, std::size_t from, std::size_t cols, std::size_t lead) {
  mpz_class g = 0;
  for (std::size_t j = from; j < cols; ++j) {
    if (sgn(row[j]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = sgn(row[lead]) < 0;
  if (g == 0 || (g == 1 && !flip)) return;
  if (flip) g = -g;
  for (std::size_t j = from; j < cols; ++j)
    if (sgn(row[j]) != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Echelon reduced_echelon(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<mpz_class> all = clear_denominators(m);
  // Zero rows never carry a pivot; drop them up front.
  std::vector<mpz_class> a;
  std::size_t rows = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < cols && !nonzero; ++c) nonzero = sgn(all[r * cols + c]) != 0;
    if (!nonzero) continue;
    for (std::size_t c = 0; c < cols; ++c) a.push_back(std::move(all[r * cols + c]));
    ++rows;
  }
  auto row = [&a, cols](std::size_t r) { return a.data() + r * cols; };

  // Fraction-free elimination: row_i <- piv * row_i - lead_i * row_r, then
  // divide out the row content. Rows with a zero lead are left untouched.
  Echelon out;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(row(p)[c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(row(p)[j], row(r)[j]);
    }
    make_primitive(row(r), c, cols, c);
    const mpz_class* pr = row(r);
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(pr[j]) != 0) support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class* ri = row(i);
      if (sgn(ri[c]) == 0) continue;
      const mpz_class lead = ri[c];
      if (pr[c] != 1) {
        for (std::size_t j = c + 1; j < cols; ++j)
          if (sgn(ri[j]) != 0) ri[j] *= pr[c];
      }
      for (auto j : support) {
        t = lead * pr[j];
        ri[j] -= t;
      }
      ri[c] = 0;
      std::size_t first = c + 1;
      while (first < cols && sgn(ri[first]) == 0) ++first;
      if (first < cols) make_primitive(ri, first, cols, first);
    }
    out.pivots.push_back(c);
    ++r;
  }

  // Back substitution, still over the integers.
  const std::size_t rank = out.pivots.size();
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    const mpz_class* pk = row(k);
    std::vector<std::size_t> support;
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (sgn(pk[j]) != 0) support.push_back(j);
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class* ri = row(i);
      if (sgn(ri[pc]) == 0) continue;
      const mpz_class f = ri[pc];
      const std::size_t own = out.pivots[i];
      if (pk[pc] != 1) {
        for (std::size_t j = own; j < cols; ++j)
          if (sgn(ri[j]) != 0) ri[j] *= pk[pc];
      }
      for (auto j : support) {
        t = f * pk[j];
        ri[j] -= t;
      }
      ri[pc] = 0;
      make_primitive(ri, own, cols, own);
    }
  }

  out.rref = Matrix(m.rows(), cols);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t pc = out.pivots[i];
    const mpz_class& piv = row(i)[pc];
    for (std::size_t j = pc; j < cols; ++j) {
      if (sgn(row(i)[j]) == 0) continue;
      out.rref(i, j) = Scalar(row(i)[j], piv);
      out.rref(i, j).canonicalize();
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).rank(); }

Subspace kernel_basis(const Matrix& m) {
  const Echelon e = reduced_echelon(m);
  Subspace s(m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vector v(m.cols());
    v[j] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.rref(k, j);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(j);
  }
  return s;
}

Subspace image_basis(const Matrix& m) {
  const Echelon e = reduced_echelon(m.transpose());
  Subspace s(m.rows());
  for (std::size_t k = 0; k < e.rank(); ++k) s.basis_.push_back(e.rref.row(k));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dim");
  }
  return image_basis(Matrix::from_columns(ambient_dim, vectors));
}

Subspace Subspace::whole(std::size_t ambient_dim) { return image_basis(Matrix::identity(ambient_dim)); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::AmbientMismatch, "membership test length mismatch");
  if (triplekit::is_zero(v)) return true;
  if (basis_.empty()) return false;
  if (pivots_.size() == basis_.size()) {
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar c = v[pivots_[k]];
      if (sgn(c) != 0) axpy(r, -c, basis_[k]);
    }
    return triplekit::is_zero(r);
  }
  return solve(as_columns(), v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorCode::AmbientMismatch, "subspace ambient mismatch");
  if (other.basis_.empty()) return true;
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return rank(Matrix::from_columns(ambient_dim_, all)) == basis_.size();
}

Matrix Subspace::as_columns() const { return Matrix::from_columns(ambient_dim_, basis_); }

std::size_t quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "quotient of subspaces in different ambient spaces");
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!z.contains(b.basis()[i])) {
      throw Error(ErrorCode::NotContained, "basis vector " + std::to_string(i) + " of the denominator is not in the numerator");
    }
  }
  return z.dim() - b.dim();
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length differs from row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const Echelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivots[k]] = e.rref(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = reduced_echelon(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.rref(r, n + c);
  return out;
}

}  // namespace triplekit
