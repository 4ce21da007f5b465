#include "triplekit/cohomology.hpp"

#include <string>

#include "triplekit/error.hpp"

namespace triplekit {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_odd(std::size_t degree) {
  if (degree % 2 == 0) {
    throw Error(ErrorCode::EvenDegree, "odd degrees only, got " + std::to_string(degree));
  }
}

std::vector<Vector> units(std::size_t n) {
  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vector(n, i);
  return e;
}


Vector from_sparse(std::size_t n, const SparseVector& s) {
  Vector v(n);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim),
      values_(ipow(source_dim, degree) * target_dim) {}

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, std::vector<Scalar> values)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim), values_(std::move(values)) {
  if (values_.size() != ipow(source_dim, degree) * target_dim) {
    throw Error(ErrorCode::DimensionMismatch, "cochain value tensor has the wrong size");
  }
}

std::size_t Cochain::offset(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw Error(ErrorCode::DimensionMismatch, "cochain argument count");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= source_dim_) throw Error(ErrorCode::DimensionMismatch, "cochain argument index");
    idx = idx * source_dim_ + a;
  }
  return idx * target_dim_;
}

Vector Cochain::value(const std::vector<std::size_t>& args) const {
  const std::size_t off = offset(args);
  return Vector(values_.begin() + off, values_.begin() + off + target_dim_);
}

void Cochain::set_value(const std::vector<std::size_t>& args, const Vector& v) {
  if (v.size() != target_dim_) throw Error(ErrorCode::DimensionMismatch, "cochain value length");
  const std::size_t off = offset(args);
  for (std::size_t l = 0; l < target_dim_; ++l) values_[off + l] = v[l];
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != degree_) throw Error(ErrorCode::DimensionMismatch, "cochain argument count");
  for (const auto& a : args)
    if (a.size() != source_dim_) throw Error(ErrorCode::DimensionMismatch, "cochain argument length");
  Vector out(target_dim_);
  std::vector<std::size_t> idx(degree_);
  // Depth-first over nonzero coordinates.
  auto rec = [&](auto&& self, std::size_t slot, std::size_t flat, const Scalar& coef) -> void {
    if (slot == degree_) {
      const std::size_t off = flat * target_dim_;
      for (std::size_t l = 0; l < target_dim_; ++l)
        if (sgn(values_[off + l]) != 0) out[l] += coef * values_[off + l];
      return;
    }
    for (std::size_t a = 0; a < source_dim_; ++a) {
      if (sgn(args[slot][a]) == 0) continue;
      self(self, slot + 1, flat * source_dim_ + a, coef * args[slot][a]);
    }
  };
  rec(rec, 0, 0, Scalar(1));
  return out;
}

bool Cochain::is_zero() const { return triplekit::is_zero(values_); }

Cochain Cochain::from_matrix(const Matrix& m) {
  Cochain f(1, m.cols(), m.rows());
  for (std::size_t x = 0; x < m.cols(); ++x)
    for (std::size_t l = 0; l < m.rows(); ++l) f.values_[x * m.rows() + l] = m(l, x);
  return f;
}

Matrix Cochain::as_matrix() const {
  if (degree_ != 1) throw Error(ErrorCode::InvalidInput, "only degree-1 cochains are matrices");
  Matrix m(target_dim_, source_dim_);
  for (std::size_t x = 0; x < source_dim_; ++x)
    for (std::size_t l = 0; l < target_dim_; ++l) m(l, x) = values_[x * target_dim_ + l];
  return m;
}

namespace {

void require_same_shape(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || a.source_dim() != b.source_dim() || a.target_dim() != b.target_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "cochains of different shape");
  }
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  return Cochain(a.degree(), a.source_dim(), a.target_dim(), a.values() + b.values());
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require_same_shape(a, b);
  return Cochain(a.degree(), a.source_dim(), a.target_dim(), a.values() - b.values());
}

Cochain operator*(const Scalar& s, const Cochain& f) {
  return Cochain(f.degree(), f.source_dim(), f.target_dim(), s * f.values());
}

// ---------------------------------------------------------------------------
// CochainSpace

CochainSpace::CochainSpace(std::size_t source_dim, std::size_t target_dim, std::size_t degree)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim) {
  require_odd(degree);
  const std::size_t s = source_dim;
  raw_dim_ = ipow(s, degree) * target_dim;
  if (degree == 1) {
    prefix_count_ = 1;
    block_size_ = s;
    block_ = units(s);
    for (std::size_t i = 0; i < s; ++i) free_.push_back(i);
    return;
  }
  prefix_count_ = ipow(s, degree - 3);
  block_size_ = s * s * s;
  auto idx = [s](std::size_t x, std::size_t y, std::size_t z) { return (x * s + y) * s + z; };
  Matrix constraints(2 * block_size_, block_size_);
  std::size_t row = 0;
  for_each_tuple(s, 3, [&](const std::vector<std::size_t>& t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    constraints(row, idx(x, y, z)) += 1;
    constraints(row, idx(y, x, z)) += 1;
    ++row;
    constraints(row, idx(x, y, z)) += 1;
    constraints(row, idx(y, z, x)) += 1;
    constraints(row, idx(z, x, y)) += 1;
    ++row;
  });
  const Echelon e = reduced_echelon(constraints);
  std::vector<bool> pivot(block_size_, false);
  for (auto p : e.pivots) pivot[p] = true;
  const Subspace k = kernel_basis(constraints);
  block_ = k.basis();
  for (std::size_t c = 0; c < block_size_; ++c)
    if (!pivot[c]) free_.push_back(c);
}

Cochain CochainSpace::basis_cochain(std::size_t k) const {
  if (k >= dim()) throw Error(ErrorCode::DimensionMismatch, "cochain basis index out of range");
  const std::size_t kd = block_.size();
  const std::size_t l = k % target_dim_;
  const std::size_t kk = (k / target_dim_) % kd;
  const std::size_t pre = k / (target_dim_ * kd);
  Cochain f(degree_, source_dim_, target_dim_);
  for (std::size_t c = 0; c < block_size_; ++c) {
    const Scalar& v = block_[kk][c];
    if (sgn(v) != 0) f.values()[(pre * block_size_ + c) * target_dim_ + l] = v;
  }
  return f;
}

Cochain CochainSpace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "cochain coordinate count");
  Cochain f(degree_, source_dim_, target_dim_);
  const std::size_t kd = block_.size();
  for (std::size_t pre = 0; pre < prefix_count_; ++pre)
    for (std::size_t kk = 0; kk < kd; ++kk)
      for (std::size_t l = 0; l < target_dim_; ++l) {
        const Scalar& a = coords[(pre * kd + kk) * target_dim_ + l];
        if (sgn(a) == 0) continue;
        for (std::size_t c = 0; c < block_size_; ++c) {
          const Scalar& v = block_[kk][c];
          if (sgn(v) != 0) f.values()[(pre * block_size_ + c) * target_dim_ + l] += a * v;
        }
      }
  return f;
}

Vector CochainSpace::coordinates(const Cochain& f) const {
  if (f.degree() != degree_ || f.source_dim() != source_dim_ || f.target_dim() != target_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "cochain does not belong to this space");
  }
  const std::size_t kd = block_.size();
  Vector coords(dim());
  for (std::size_t pre = 0; pre < prefix_count_; ++pre)
    for (std::size_t kk = 0; kk < kd; ++kk)
      for (std::size_t l = 0; l < target_dim_; ++l)
        coords[(pre * kd + kk) * target_dim_ + l] = f.values()[(pre * block_size_ + free_[kk]) * target_dim_ + l];
  return coords;
}

Report CochainSpace::check_constraints(const Cochain& f) const {
  if (f.degree() != degree_ || f.source_dim() != source_dim_ || f.target_dim() != target_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "cochain does not belong to this space");
  }
  Report report("cochain_constraints");
  Verdict& anti = report.add("slot_antisymmetry");
  Verdict& cyclic = report.add("cyclic");
  if (degree_ == 1) return report;
  const std::size_t p = degree_;
  for_each_tuple(source_dim_, p, [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> a = t;
    const Vector xyz = f.value(a);
    std::swap(a[p - 3], a[p - 2]);
    const Vector yxz = f.value(a);
    anti.record(t, xyz, Scalar(-1) * yxz);
    a = t;
    a[p - 3] = t[p - 2];
    a[p - 2] = t[p - 1];
    a[p - 1] = t[p - 3];
    const Vector yzx = f.value(a);
    a[p - 3] = t[p - 1];
    a[p - 2] = t[p - 3];
    a[p - 1] = t[p - 2];
    const Vector zxy = f.value(a);
    cyclic.record(t, xyz + yzx + zxy, Vector(target_dim_));
  });
  return report;
}

bool CochainSpace::contains(const Cochain& f) const {
  if (f.degree() != degree_ || f.source_dim() != source_dim_ || f.target_dim() != target_dim_) return false;
  if (degree_ == 1) return true;
  const std::size_t s = source_dim_, t = target_dim_;
  const auto& v = f.values();
  auto at = [&](std::size_t pre, std::size_t x, std::size_t y, std::size_t z, std::size_t l) -> const Scalar& {
    return v[(pre * block_size_ + (x * s + y) * s + z) * t + l];
  };
  for (std::size_t pre = 0; pre < prefix_count_; ++pre)
    for (std::size_t x = 0; x < s; ++x)
      for (std::size_t y = 0; y < s; ++y)
        for (std::size_t z = 0; z < s; ++z)
          for (std::size_t l = 0; l < t; ++l) {
            const Scalar& a = at(pre, x, y, z, l);
            if (a + at(pre, y, x, z, l) != 0) return false;
            if (a + at(pre, y, z, x, l) + at(pre, z, x, y, l) != 0) return false;
          }
  return true;
}

Subspace CochainSpace::as_subspace() const {
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < dim(); ++k) cols.push_back(basis_cochain(k).values());
  return Subspace::span_of(raw_dim_, cols);
}

CochainSpace cochain_space(std::size_t source_dim, std::size_t target_dim, std::size_t degree) {
  return CochainSpace(source_dim, target_dim, degree);
}

// ---------------------------------------------------------------------------
// Yamaguti coboundary

CoboundaryData coboundary_data(const LtsRepPair& p) {
  const std::size_t n = p.dim();
  CoboundaryData d;
  d.source_dim = n;
  d.target_dim = p.module_dim();
  d.bracket.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.bracket.push_back(p.algebra().basis_bracket(i, j, k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.theta.push_back(p.theta(i, j));
      d.D.push_back(p.D(i, j));
    }
  return d;
}

Cochain yamaguti_delta(const CoboundaryData& data, const Cochain& f) {
  const std::size_t s = data.source_dim;
  const std::size_t t = data.target_dim;
  if (f.source_dim() != s || f.target_dim() != t) {
    throw Error(ErrorCode::DimensionMismatch, "cochain shape differs from the pair");
  }
  const std::size_t p = f.degree();
  require_odd(p);
  const std::size_t n = (p + 1) / 2;
  const std::size_t q = p + 2;
  Cochain g(q, s, t);
  const auto& fv = f.values();
  Vector acc(t);
  std::vector<std::size_t> rest(p);

  auto flat = [s, t](const std::vector<std::size_t>& args) {
    std::size_t idx = 0;
    for (auto a : args) idx = idx * s + a;
    return idx * t;
  };
  // acc += sign * m * f-value at off
  auto add_matrix = [&](const Matrix& m, int sign, std::size_t off) {
    for (std::size_t c = 0; c < t; ++c) {
      const Scalar& v = fv[off + c];
      if (sgn(v) == 0) continue;
      for (std::size_t r = 0; r < t; ++r) {
        const Scalar& e = m(r, c);
        if (sgn(e) == 0) continue;
        if (sign > 0) acc[r] += e * v;
        else acc[r] -= e * v;
      }
    }
  };
  auto add_value = [&](const Scalar& coef, std::size_t off) {
    for (std::size_t c = 0; c < t; ++c) {
      const Scalar& v = fv[off + c];
      if (sgn(v) != 0) acc[c] += coef * v;
    }
  };

  std::size_t out_flat = 0;
  for_each_tuple(s, q, [&](const std::vector<std::size_t>& x) {
    for (auto& a : acc) a = 0;
    // theta(x_{2n}, x_{2n+1}) f(x_1 .. x_{2n-1})
    for (std::size_t i = 0; i < p; ++i) rest[i] = x[i];
    add_matrix(data.theta[x[q - 2] * s + x[q - 1]], +1, flat(rest));
    // - theta(x_{2n-1}, x_{2n+1}) f(x_1 .. x_{2n-2}, x_{2n})
    rest[p - 1] = x[q - 2];
    add_matrix(data.theta[x[q - 3] * s + x[q - 1]], -1, flat(rest));
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t a = 2 * k - 2, b = 2 * k - 1;
      std::size_t r = 0;
      for (std::size_t i = 0; i < q; ++i)
        if (i != a && i != b) rest[r++] = x[i];
      const int sign_d = ((n + k) % 2 == 0) ? 1 : -1;
      add_matrix(data.D[x[a] * s + x[b]], sign_d, flat(rest));
      const int sign_i = -sign_d;
      for (std::size_t j = 2 * k; j < q; ++j) {
        const std::size_t pos = j - 2;
        const std::size_t saved = rest[pos];
        for (const auto& [l, c] : data.bracket[(x[a] * s + x[b]) * s + x[j]]) {
          rest[pos] = l;
          add_value(sign_i > 0 ? c : Scalar(-c), flat(rest));
        }
        rest[pos] = saved;
      }
    }
    for (std::size_t l = 0; l < t; ++l) g.values()[out_flat + l] = acc[l];
    out_flat += t;
  });
  return g;
}

Cochain yamaguti_delta(const LtsRepPair& p, const Cochain& f) { return yamaguti_delta(coboundary_data(p), f); }

CoboundaryMatrix coboundary_matrix(const CoboundaryData& data, std::size_t degree_from) {
  const CochainSpace dom(data.source_dim, data.target_dim, degree_from);
  const CochainSpace cod(data.source_dim, data.target_dim, degree_from + 2);
  CoboundaryMatrix out;
  out.degree_from = degree_from;
  out.degree_to = degree_from + 2;
  out.matrix = Matrix(cod.dim(), dom.dim());
  for (std::size_t k = 0; k < dom.dim(); ++k) {
    const Cochain g = yamaguti_delta(data, dom.basis_cochain(k));
    if (!cod.contains(g)) out.lands_in_codomain = false;
    out.matrix.set_column(k, cod.coordinates(g));
  }
  return out;
}

CoboundaryMatrix yamaguti_coboundary(const LtsRepPair& p, std::size_t degree_from) {
  require_odd(degree_from);
  if (!p.axioms_hold()) throw Error(ErrorCode::InvalidRepresentation, "representation axioms fail");
  return coboundary_matrix(coboundary_data(p), degree_from);
}

namespace {

CohomologyReport cohomology_from(const Matrix& outgoing, const Subspace& b, std::size_t degree, std::size_t dim_c,
                                 std::string convention) {
  CohomologyReport r;
  r.degree = degree;
  r.dim_cochains = dim_c;
  r.cocycles = kernel_basis(outgoing);
  r.coboundaries = b;
  r.dim_cocycles = r.cocycles.dim();
  r.dim_coboundaries = b.dim();
  r.dim_H = quotient_dim(r.cocycles, r.coboundaries);
  r.convention = std::move(convention);
  return r;
}

}  // namespace

CohomologyReport yamaguti_cohomology(const LtsRepPair& p, std::size_t degree) {
  require_odd(degree);
  const CoboundaryMatrix out = yamaguti_coboundary(p, degree);
  const std::size_t dim_c = out.matrix.cols();
  if (degree == 1) return cohomology_from(out.matrix, Subspace(dim_c), degree, dim_c, "B^1 = 0");
  const CoboundaryMatrix in = yamaguti_coboundary(p, degree - 2);
  return cohomology_from(out.matrix, image_basis(in.matrix), degree, dim_c, "B = im delta^(d-2)");
}

namespace {

// f evaluated with slot `pos` replaced by the vector v.
Vector eval_with(const Cochain& f, std::vector<std::size_t> args, std::size_t pos, const SparseVector& v) {
  Vector out(f.target_dim());
  for (const auto& [l, c] : v) {
    args[pos] = l;
    axpy(out, c, f.value(args));
  }
  return out;
}

}  // namespace

Report check_cocycle(const LtsRepPair& p, const Cochain& f) {
  const CochainSpace space(p.dim(), p.module_dim(), f.degree());
  Report report("cocycle");
  Verdict& in_space = report.add("in_space");
  in_space.record({}, space.contains(f));
  Verdict& fast = report.add("fast_path");
  const LtsStructure& a = p.algebra();
  const std::size_t n = p.dim();
  if (f.degree() == 1) {
    for_each_tuple(n, 3, [&](const std::vector<std::size_t>& x) {
      Vector lhs = p.D(x[0], x[1]).apply(f.value({x[2]}));
      axpy(lhs, -1, p.theta(x[0], x[2]).apply(f.value({x[1]})));
      axpy(lhs, 1, p.theta(x[1], x[2]).apply(f.value({x[0]})));
      axpy(lhs, -1, eval_with(f, {0}, 0, a.basis_bracket(x[0], x[1], x[2])));
      fast.record(x, lhs, Vector(p.module_dim()));
    });
  } else if (f.degree() == 3) {
    for_each_tuple(n, 5, [&](const std::vector<std::size_t>& x) {
      const std::size_t x1 = x[0], x2 = x[1], y1 = x[2], y2 = x[3], y3 = x[4];
      Vector lhs = eval_with(f, {x1, x2, 0}, 2, a.basis_bracket(y1, y2, y3));
      axpy(lhs, 1, p.D(x1, x2).apply(f.value({y1, y2, y3})));
      Vector rhs = eval_with(f, {0, y2, y3}, 0, a.basis_bracket(x1, x2, y1));
      axpy(rhs, 1, eval_with(f, {y1, 0, y3}, 1, a.basis_bracket(x1, x2, y2)));
      axpy(rhs, 1, eval_with(f, {y1, y2, 0}, 2, a.basis_bracket(x1, x2, y3)));
      axpy(rhs, 1, p.theta(y2, y3).apply(f.value({x1, x2, y1})));
      axpy(rhs, -1, p.theta(y1, y3).apply(f.value({x1, x2, y2})));
      axpy(rhs, 1, p.D(y1, y2).apply(f.value({x1, x2, y3})));
      fast.record(x, lhs, rhs);
    });
  } else {
    fast.record({}, yamaguti_delta(p, f).is_zero());
  }
  Verdict& kernel = report.add("kernel");
  const CoboundaryMatrix d = yamaguti_coboundary(p, f.degree());
  kernel.record({}, triplekit::is_zero(d.matrix.apply(space.coordinates(f))));
  Verdict& agree = report.add("agreement");
  agree.record({}, fast.passed == kernel.passed);
  return report;
}

// ---------------------------------------------------------------------------
// O-operator side

namespace {

void require_o(const OOperator& t) {
  if (!check_o_operator(t).passed()) throw Error(ErrorCode::NotAnOOperator, "O-operator identity fails");
}

std::vector<Vector> t_columns(const OOperator& t) {
  std::vector<Vector> c(t.matrix.cols());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = t.matrix.column(i);
  return c;
}

std::vector<Scalar> bracket_tensor_unchecked(const OOperator& t) {
  const std::size_t m = t.pair.module_dim();
  const auto e = units(m);
  const auto te = t_columns(t);
  std::vector<Scalar> c(m * m * m * m);
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const Vector b = o_term(t.pair, te[k[0]], te[k[1]], te[k[2]], e[k[0]], e[k[1]], e[k[2]]);
    const std::size_t base = ((k[0] * m + k[1]) * m + k[2]) * m;
    for (std::size_t l = 0; l < m; ++l) c[base + l] = b[l];
  });
  return c;
}

// theta_T(u,v) on L, straight from the displayed formula.
Matrix induced_theta(const OOperator& t, std::size_t u, std::size_t v) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  const Vector tu = t.matrix.column(u), tv = t.matrix.column(v);
  const Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
  Matrix out(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = unit_vector(n, x);
    Vector col = t.pair.algebra().bracket(ex, tu, tv);
    axpy(col, 1, t.matrix.apply(t.pair.theta_apply(ex, tv, eu) - t.pair.D_apply(ex, tu, ev)));
    out.set_column(x, col);
  }
  return out;
}

Matrix induced_D_unchecked(const OOperator& t, std::size_t u, std::size_t v) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  const Vector tu = t.matrix.column(u), tv = t.matrix.column(v);
  const Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
  Matrix out(n, n);
  for (std::size_t z = 0; z < n; ++z) {
    const Vector ez = unit_vector(n, z);
    Vector col = t.pair.algebra().bracket(tu, tv, ez);
    const Vector inner = t.pair.theta_apply(tv, ez, eu) - t.pair.theta_apply(tu, ez, ev);
    axpy(col, -1, t.matrix.apply(inner));
    out.set_column(z, col);
  }
  return out;
}

}  // namespace

LtsStructure induced_bracket(const OOperator& t) {
  require_o(t);
  return LtsStructure(t.pair.module_dim(), bracket_tensor_unchecked(t));
}

Report check_induced_homomorphism(const OOperator& t) {
  const LtsStructure b = induced_bracket(t);
  const std::size_t m = t.pair.module_dim();
  const auto te = t_columns(t);
  Report report("induced_homomorphism");
  Verdict& v = report.add("homomorphism");
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const Vector lhs = t.matrix.apply(from_sparse(m, b.basis_bracket(k[0], k[1], k[2])));
    v.record(k, lhs, t.pair.algebra().bracket(te[k[0]], te[k[1]], te[k[2]]));
  });
  return report;
}

LtsRepresentation induced_rep(const OOperator& t) {
  LtsStructure b = induced_bracket(t);
  const std::size_t m = t.pair.module_dim();
  std::vector<Matrix> theta;
  theta.reserve(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) theta.push_back(induced_theta(t, u, v));
  return LtsRepresentation(std::move(b), t.pair.dim(), std::move(theta));
}

Matrix induced_D_display(const OOperator& t, std::size_t u, std::size_t v) {
  require_o(t);
  return induced_D_unchecked(t, u, v);
}

Report check_induced_D(const OOperator& t) {
  const LtsRepresentation r = induced_rep(t);
  const std::size_t m = t.pair.module_dim();
  Report report("induced_D");
  Verdict& v = report.add("D_display");
  for_each_tuple(m, 2, [&](const std::vector<std::size_t>& k) {
    v.record(k, r.D(k[0], k[1]).entries(), induced_D_unchecked(t, k[0], k[1]).entries());
  });
  return report;
}

Cochain partial_T(const OOperator& t, const Bivector& x) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  if (t.matrix.rows() != n || t.matrix.cols() != m) throw Error(ErrorCode::DimensionMismatch, "O-operator shape");
  if (x.dim() != n) throw Error(ErrorCode::DimensionMismatch, "bivector dimension differs from algebra");
  const Matrix dx = bivector_D(t.pair, x);
  Matrix out(n, m);
  for (std::size_t v = 0; v < m; ++v) {
    const Vector col = t.matrix.apply(dx.column(v)) - adjoint_action(t.pair.algebra(), x, t.matrix.column(v));
    out.set_column(v, col);
  }
  return Cochain::from_matrix(out);
}

Matrix partial_T_matrix(const OOperator& t) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  const auto basis = Bivector::basis(n);
  Matrix out(n * m, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out.set_column(k, partial_T(t, basis[k]).values());
  return out;
}

CoboundaryData o_coboundary_data(const OOperator& t, Route route) {
  if (route == Route::Generic) return coboundary_data(induced_rep(t));
  require_o(t);
  const std::size_t m = t.pair.module_dim();
  CoboundaryData d;
  d.source_dim = m;
  d.target_dim = t.pair.dim();
  const std::vector<Scalar> c = bracket_tensor_unchecked(t);
  for (std::size_t idx = 0; idx < m * m * m; ++idx) {
    SparseVector sv;
    for (std::size_t l = 0; l < m; ++l)
      if (sgn(c[idx * m + l]) != 0) sv.emplace_back(l, c[idx * m + l]);
    d.bracket.push_back(std::move(sv));
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      d.theta.push_back(induced_theta(t, u, v));
      d.D.push_back(induced_D_unchecked(t, u, v));
    }
  return d;
}

CoboundaryMatrix o_operator_coboundary(const OOperator& t, std::size_t degree_from, Route route) {
  require_odd(degree_from);
  return coboundary_matrix(o_coboundary_data(t, route), degree_from);
}

CohomologyReport o_operator_cohomology(const OOperator& t, std::size_t degree) {
  require_odd(degree);
  const LtsRepresentation r = induced_rep(t);
  if (degree == 1) {
    const CoboundaryMatrix out = coboundary_matrix(coboundary_data(r), 1);
    return cohomology_from(out.matrix, image_basis(partial_T_matrix(t)), 1, out.matrix.cols(), "B^1 = im partial_T");
  }
  CohomologyReport rep = yamaguti_cohomology(r, degree);
  rep.convention = "B = im delta_T^(d-2)";
  return rep;
}

Report check_o_cocycle_degree1(const OOperator& t, const Cochain& f) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  if (f.degree() != 1 || f.source_dim() != m || f.target_dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected a degree-1 cochain V -> L");
  }
  const LtsRepresentation r = induced_rep(t);
  const LtsStructure& a = t.pair.algebra();
  const auto e = units(m);
  const auto te = t_columns(t);
  std::vector<Vector> fe(m);
  for (std::size_t i = 0; i < m; ++i) fe[i] = f.value({i});
  const Matrix& tm = t.matrix;
  const LtsRepPair& p = t.pair;

  Report report("o_cocycle_degree1");
  Verdict& identity = report.add("display_identity");
  Verdict& display = report.add("display");
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const std::size_t v1 = k[0], v2 = k[1], v3 = k[2];
    Vector lhs = r.D(v1, v2).apply(fe[v3]);
    axpy(lhs, -1, r.theta(v1, v3).apply(fe[v2]));
    axpy(lhs, 1, r.theta(v2, v3).apply(fe[v1]));
    axpy(lhs, -1, f.evaluate({from_sparse(m, r.algebra().basis_bracket(v1, v2, v3))}));

    Vector rhs = a.bracket(te[v1], te[v2], fe[v3]);
    axpy(rhs, 1, a.bracket(te[v1], fe[v2], te[v3]));
    axpy(rhs, 1, a.bracket(fe[v1], te[v2], te[v3]));
    Vector inner = Scalar(-1) * p.D_apply(fe[v2], te[v1], e[v3]);
    axpy(inner, 1, p.D_apply(fe[v1], te[v2], e[v3]));
    axpy(inner, 1, p.theta_apply(te[v2], fe[v3], e[v1]));
    axpy(inner, 1, p.theta_apply(fe[v2], te[v3], e[v1]));
    axpy(inner, -1, p.theta_apply(te[v1], fe[v3], e[v2]));
    axpy(inner, -1, p.theta_apply(fe[v1], te[v3], e[v2]));
    axpy(rhs, -1, tm.apply(inner));
    axpy(rhs, -1, f.evaluate({o_term(p, te[v1], te[v2], te[v3], e[v1], e[v2], e[v3])}));

    identity.record(k, lhs, rhs);
    display.record(k, rhs, Vector(n));
  });
  Verdict& kernel = report.add("kernel");
  const CoboundaryMatrix d = coboundary_matrix(coboundary_data(r), 1);
  kernel.record({}, triplekit::is_zero(d.matrix.apply(f.values())));
  Verdict& agree = report.add("agreement");
  agree.record({}, display.passed == kernel.passed);
  return report;
}

// ---------------------------------------------------------------------------
// gamma

Cochain gamma_apply(const Matrix& phi, const Matrix& psi_inverse, const Cochain& f) {
  const std::size_t p = f.degree();
  const std::size_t m = f.source_dim();
  const std::size_t m2 = psi_inverse.cols();
  if (psi_inverse.rows() != m || phi.cols() != f.target_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "gamma shapes");
  }
  const std::size_t t = f.target_dim();
  // Contract one slot at a time: shape [A, d, B] -> [A, m2, B].
  std::vector<Scalar> cur = f.values();
  for (std::size_t slot = 0; slot < p; ++slot) {
    const std::size_t A = ipow(m2, slot);
    const std::size_t B = ipow(m, p - slot - 1) * t;
    std::vector<Scalar> next(A * m2 * B);
    for (std::size_t a = 0; a < A; ++a)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t b = 0; b < B; ++b) {
          const Scalar& v = cur[(a * m + k) * B + b];
          if (sgn(v) == 0) continue;
          for (std::size_t u = 0; u < m2; ++u) {
            const Scalar& c = psi_inverse(k, u);
            if (sgn(c) != 0) next[(a * m2 + u) * B + b] += c * v;
          }
        }
    cur = std::move(next);
  }
  const std::size_t t2 = phi.rows();
  const std::size_t count = ipow(m2, p);
  std::vector<Scalar> out(count * t2);
  for (std::size_t i = 0; i < count; ++i) {
    Vector val(cur.begin() + i * t, cur.begin() + (i + 1) * t);
    const Vector img = phi.apply(val);
    for (std::size_t l = 0; l < t2; ++l) out[i * t2 + l] = img[l];
  }
  return Cochain(p, m2, t2, std::move(out));
}

namespace {

Matrix gamma_matrix(const Matrix& phi, const Matrix& psi_inv, std::size_t m, std::size_t n, std::size_t m2,
                    std::size_t n2, std::size_t degree) {
  const CochainSpace dom(m, n, degree);
  const CochainSpace cod(m2, n2, degree);
  Matrix out(cod.dim(), dom.dim());
  for (std::size_t k = 0; k < dom.dim(); ++k) out.set_column(k, cod.coordinates(gamma_apply(phi, psi_inv, dom.basis_cochain(k))));
  return out;
}

Matrix wedge_matrix(const Matrix& phi) {
  const std::size_t n = phi.cols(), n2 = phi.rows();
  const auto basis = Bivector::basis(n);
  Matrix out(n2 * (n2 - (n2 > 0 ? 1 : 0)) / 2, basis.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) out.set_column(k, Bivector::wedge(phi.column(i), phi.column(j)).coordinates());
  return out;
}

}  // namespace

GammaMap gamma_cochain_map(const OOperatorMorphism& mor, std::size_t degree) {
  if (degree != 0) require_odd(degree);
  const Report mr = check_o_morphism(mor);
  if (!mr.at("phi_morphism").passed || !mr.at("c1").passed || !mr.at("c2").passed) {
    throw Error(ErrorCode::NotAMorphism, "(phi, psi) is not a morphism of O-operators");
  }
  const auto psi_inv = inverse(mor.psi);
  if (!psi_inv) throw Error(ErrorCode::PsiNotInvertible, "psi is singular");
  const OOperator& s = mor.source;
  const OOperator& t = mor.target;
  const std::size_t n = s.pair.dim(), m = s.pair.module_dim();
  const std::size_t n2 = t.pair.dim(), m2 = t.pair.module_dim();

  GammaMap g;
  g.degree = degree;
  g.report = Report("gamma");
  Verdict& square = g.report.add("square");
  if (degree == 0) {
    g.matrix = wedge_matrix(mor.phi);
    const Matrix g1 = gamma_matrix(mor.phi, *psi_inv, m, n, m2, n2, 1);
    const Matrix lhs = partial_T_matrix(t) * g.matrix;
    const Matrix rhs = g1 * partial_T_matrix(s);
    square.record({0}, lhs.entries(), rhs.entries());
    return g;
  }
  g.matrix = gamma_matrix(mor.phi, *psi_inv, m, n, m2, n2, degree);
  const Matrix next = gamma_matrix(mor.phi, *psi_inv, m, n, m2, n2, degree + 2);
  const Matrix lhs = o_operator_coboundary(t, degree).matrix * g.matrix;
  const Matrix rhs = next * o_operator_coboundary(s, degree).matrix;
  square.record({degree}, lhs.entries(), rhs.entries());
  if (degree == 1) {
    const CohomologyReport hs = o_operator_cohomology(s, 1);
    const CohomologyReport ht = o_operator_cohomology(t, 1);
    Verdict& z = g.report.add("cocycles_preserved");
    for (std::size_t k = 0; k < hs.cocycles.dim(); ++k) z.record({k}, ht.cocycles.contains(g.matrix.apply(hs.cocycles.basis()[k])));
    Verdict& b = g.report.add("coboundaries_preserved");
    for (std::size_t k = 0; k < hs.coboundaries.dim(); ++k)
      b.record({k}, ht.coboundaries.contains(g.matrix.apply(hs.coboundaries.basis()[k])));
  }
  return g;
}

}  // namespace triplekit
