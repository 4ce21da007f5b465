#include "triplekit/deformations.hpp"

#include <string>

#include "triplekit/error.hpp"
#include "triplekit/linalg.hpp"

namespace triplekit {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " shape");
}

bool same_operator(const OOperator& a, const OOperator& b) { return a.pair == b.pair && a.matrix == b.matrix; }

// sum_{i+j+k=s} [T_i u,T_j v,T_k w] - T_i(o_term(T_j, T_k)) at (u,v,w) = basis triple.
Vector residual(const LtsRepPair& p, const std::vector<Matrix>& ts, std::size_t s, const std::vector<std::size_t>& k) {
  const std::size_t n = p.dim(), m = p.module_dim();
  const Vector eu = unit_vector(m, k[0]), ev = unit_vector(m, k[1]), ew = unit_vector(m, k[2]);
  Vector out(n);
  for (std::size_t i = 0; i <= s; ++i) {
    if (i >= ts.size() || ts[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= s; ++j) {
      const std::size_t l = s - i - j;
      if (j >= ts.size() || l >= ts.size()) continue;
      const Vector a = ts[i].column(k[0]), b = ts[j].column(k[1]), c = ts[l].column(k[2]);
      axpy(out, 1, p.algebra().bracket(a, b, c));
      const Vector ti = ts[j].column(k[0]), tj = ts[l].column(k[1]);
      // T_i(D(T_j u,T_l v)w + theta(T_j v,T_l w)u - theta(T_j u,T_l w)v)
      Vector inner = p.D_apply(ti, tj, ew);
      axpy(inner, 1, p.theta_apply(ts[j].column(k[1]), ts[l].column(k[2]), eu));
      axpy(inner, -1, p.theta_apply(ts[j].column(k[0]), ts[l].column(k[2]), ev));
      axpy(out, -1, ts[i].apply(inner));
    }
  }
  return out;
}

Report residual_report(const LtsRepPair& p, const std::vector<Matrix>& ts, std::size_t from, std::size_t to) {
  Report report("deformation");
  const std::size_t n = p.dim(), m = p.module_dim();
  for (std::size_t s = from; s <= to; ++s) {
    Verdict& v = report.add("order" + std::to_string(s));
    for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) { v.record(k, residual(p, ts, s, k), Vector(n)); });
  }
  return report;
}

std::vector<Matrix> series_list(const DeformationSeries& d) {
  std::vector<Matrix> ts{d.base.matrix};
  for (const auto& c : d.coefficients) ts.push_back(c);
  return ts;
}

void require_series_shapes(const DeformationSeries& d) {
  const std::size_t n = d.base.pair.dim(), m = d.base.pair.module_dim();
  require_shape(d.base.matrix, n, m, "base operator");
  for (const auto& c : d.coefficients) require_shape(c, n, m, "deformation coefficient");
}

}  // namespace

Matrix DeformationSeries::coefficient(std::size_t i) const {
  if (i == 0) return base.matrix;
  if (i <= coefficients.size()) return coefficients[i - 1];
  return Matrix(base.matrix.rows(), base.matrix.cols());
}

Report check_infinitesimal(const OOperator& t, const Matrix& t1) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  require_shape(t.matrix, n, m, "O-operator");
  require_shape(t1, n, m, "T1");
  return residual_report(t.pair, {t.matrix, t1}, 1, 3);
}

Report check_formal(const DeformationSeries& d) {
  require_series_shapes(d);
  return residual_report(d.base.pair, series_list(d), 0, d.order());
}

Cochain obstruction(const DeformationSeries& d, std::size_t s) {
  require_series_shapes(d);
  if (s > d.order() + 1) throw Error(ErrorCode::InvalidInput, "obstruction order exceeds truncation + 1");
  std::vector<Matrix> ts;
  for (std::size_t i = 0; i < s; ++i) ts.push_back(d.coefficient(i));
  if (s > 0) ts.push_back(Matrix(d.base.matrix.rows(), d.base.matrix.cols()));
  const std::size_t n = d.base.pair.dim(), m = d.base.pair.module_dim();
  Cochain out(3, m, n);
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) { out.set_value(k, residual(d.base.pair, ts, s, k)); });
  return out;
}

Matrix linearised_residual(const OOperator& t) {
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  require_shape(t.matrix, n, m, "O-operator");
  Matrix out(m * m * m * n, n * m);
  const Matrix zero(n, m);
  for (std::size_t c = 0; c < n * m; ++c) {
    // Unknown coordinate c is entry (c % n, c / n), matching degree-1 cochain layout.
    Matrix e(n, m);
    e(c % n, c / n) = 1;
    Vector col;
    col.reserve(m * m * m * n);
    for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
      const Vector r = residual(t.pair, {t.matrix, e}, 1, k);
      col.insert(col.end(), r.begin(), r.end());
    });
    out.set_column(c, col);
  }
  return out;
}

std::optional<Matrix> solve_next_coefficient(const DeformationSeries& d, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidInput, "order 0 is the base operator");
  const Cochain defect = obstruction(d, s);
  const auto x = solve(linearised_residual(d.base), Scalar(-1) * defect.values());
  if (!x) return std::nullopt;
  return Cochain(1, d.base.pair.module_dim(), d.base.pair.dim(), *x).as_matrix();
}

NijenhuisElementReport check_nijenhuis_element(const OOperator& t, const Bivector& x) {
  const LtsRepPair& p = t.pair;
  const LtsStructure& a = p.algebra();
  const std::size_t n = p.dim(), m = p.module_dim();
  require_shape(t.matrix, n, m, "O-operator");
  if (x.dim() != n) throw Error(ErrorCode::DimensionMismatch, "bivector dimension");
  const Matrix lx = adjoint_matrix(a, x);
  const Matrix dx = bivector_D(p, x);
  std::vector<Vector> z(n), xz(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = unit_vector(n, i);
    xz[i] = lx.column(i);
  }
  NijenhuisElementReport out{x, Report("nijenhuis_element")};
  Verdict& c1 = out.report.add("condition1");
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    Vector line = a.bracket(z[k[0]], xz[k[1]], xz[k[2]]);
    axpy(line, 1, a.bracket(xz[k[0]], z[k[1]], xz[k[2]]));
    axpy(line, 1, a.bracket(xz[k[0]], xz[k[1]], z[k[2]]));
    Vector both = line;
    const Vector cube = a.bracket(xz[k[0]], xz[k[1]], xz[k[2]]);
    both.insert(both.end(), cube.begin(), cube.end());
    c1.record(k, both, Vector(2 * n));
  });
  Verdict& c2 = out.report.add("condition2");
  for_each_tuple(n, 2, [&](const std::vector<std::size_t>& k) {
    const Matrix txx = p.theta(xz[k[0]], xz[k[1]]);
    const Matrix line1 = p.theta(z[k[0]], xz[k[1]]) * dx + p.theta(xz[k[0]], z[k[1]]) * dx + txx;
    const Matrix line2 = txx * dx;
    Vector both = line1.entries();
    both.insert(both.end(), line2.entries().begin(), line2.entries().end());
    c2.record(k, both, Vector(2 * m * m));
  });
  Verdict& c3 = out.report.add("condition3");
  for (std::size_t u = 0; u < m; ++u) {
    const Vector tu = t.matrix.column(u);
    const Vector inner = t.matrix.apply(dx.column(u)) - lx.apply(tu);
    c3.record({u}, lx.apply(inner), Vector(n));
  }
  return out;
}

Report check_equivalence(const OOperator& t, const DeformationSeries& d1, const DeformationSeries& d2,
                         const Bivector& x) {
  if (!same_operator(d1.base, t) || !same_operator(d2.base, t)) {
    throw Error(ErrorCode::BaseMismatch, "deformations do not share the base operator");
  }
  require_series_shapes(d1);
  require_series_shapes(d2);
  const std::size_t m = t.pair.module_dim();
  const NijenhuisElementReport nij = check_nijenhuis_element(t, x);
  Report report("equivalence");
  report.add("condition1") = nij.report.at("condition1");
  report.add("condition2") = nij.report.at("condition2");
  const Matrix lx = adjoint_matrix(t.pair.algebra(), x);
  const Matrix dx = bivector_D(t.pair, x);
  const Matrix t1 = d1.coefficient(1), t1p = d2.coefficient(1);
  const Matrix line1_l = t1 + lx * t.matrix, line1_r = t.matrix * dx + t1p;
  const Matrix line2_l = lx * t1, line2_r = t1p * dx;
  Verdict& e1 = report.add("defoo1");
  Verdict& e2 = report.add("defoo2");
  for (std::size_t u = 0; u < m; ++u) {
    e1.record({u}, line1_l.column(u), line1_r.column(u));
    e2.record({u}, line2_l.column(u), line2_r.column(u));
  }
  Verdict& diff = report.add("difference");
  const Matrix dt = partial_T(t, x).as_matrix();
  for (std::size_t u = 0; u < m; ++u) diff.record({u}, (t1 - t1p).column(u), dt.column(u));
  return report;
}

namespace {

bool member(const OOperator& t, const Bivector& x) { return check_nijenhuis_element(t, x).member(); }

}  // namespace

RigidityCertificate rigidity_certificate(const OOperator& t, const std::vector<Bivector>& candidates) {
  if (!check_o_operator(t).passed()) throw Error(ErrorCode::NotAnOOperator, "O-operator identity fails");
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  RigidityCertificate cert;
  cert.report = Report("rigidity");
  std::vector<Vector> images;
  std::vector<Bivector> basis;  // independent members
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!member(t, candidates[i])) continue;
    cert.members.push_back(i);
    images.push_back(partial_T(t, candidates[i]).values());
    coords.push_back(candidates[i].coordinates());
    if (rank(Matrix::from_columns(n * (n - 1) / 2, coords)) > basis.size()) basis.push_back(candidates[i]);
    else coords.pop_back();
  }
  const Subspace span = Subspace::span_of(n * m, images);
  const CohomologyReport h1 = o_operator_cohomology(t, 1);
  cert.dim_cocycles = h1.dim_cocycles;
  cert.dim_span = span.dim();
  cert.codimension = h1.dim_cocycles - span.dim();
  Verdict& eq = cert.report.add("span_equals_Z1");
  eq.record({}, span.dim() == h1.dim_cocycles && h1.cocycles.contains(span));
  // The defining conditions are homogeneous of degree 2 and 3, so the span
  // lies in Nij(T) once all sums X_a +- X_b and X_a + X_b + X_c are members.
  Verdict& closed = cert.report.add("span_in_nij");
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      closed.record({a, b}, member(t, basis[a] + basis[b]) && member(t, basis[a] + Scalar(-1) * basis[b]));
      for (std::size_t c = b + 1; c < basis.size(); ++c) closed.record({a, b, c}, member(t, basis[a] + basis[b] + basis[c]));
    }
  cert.certified = cert.report.passed();
  return cert;
}

std::vector<Matrix> conjugated_series(const DeformationSeries& d, const EquivalencePair& e) {
  require_series_shapes(d);
  const std::size_t n = d.base.pair.dim(), m = d.base.pair.module_dim();
  const std::size_t order = d.order();
  std::vector<Matrix> phi{Matrix::identity(n), adjoint_matrix(d.base.pair.algebra(), e.X)};
  std::vector<Matrix> psi{Matrix::identity(m), bivector_D(d.base.pair, e.X)};
  for (const auto& f : e.higher_phi) {
    require_shape(f, n, n, "phi_i");
    phi.push_back(f);
  }
  for (const auto& g : e.higher_psi) {
    require_shape(g, m, m, "psi_i");
    psi.push_back(g);
  }
  // inv_k = -sum_{i=1..k} psi_i inv_{k-i}
  std::vector<Matrix> inv{Matrix::identity(m)};
  for (std::size_t k = 1; k <= order; ++k) {
    Matrix acc(m, m);
    for (std::size_t i = 1; i <= k && i < psi.size(); ++i) acc -= psi[i] * inv[k - i];
    inv.push_back(acc);
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= order; ++k) {
    Matrix acc(n, m);
    for (std::size_t a = 0; a <= k && a < phi.size(); ++a)
      for (std::size_t b = 0; a + b <= k; ++b) {
        const Matrix tb = d.coefficient(b);
        if (tb.is_zero()) continue;
        acc += phi[a] * tb * inv[k - a - b];
      }
    out.push_back(acc);
  }
  return out;
}

Report check_trivial_deformation(const OOperator& t, const DeformationSeries& d, const EquivalencePair& e) {
  if (!same_operator(d.base, t)) throw Error(ErrorCode::BaseMismatch, "series base differs from T");
  const std::vector<Matrix> conj = conjugated_series(d, e);
  const std::size_t n = t.pair.dim(), m = t.pair.module_dim();
  Report report("trivial_deformation");
  for (std::size_t k = 1; k < conj.size(); ++k) {
    Verdict& v = report.add("order" + std::to_string(k));
    for (std::size_t u = 0; u < m; ++u) v.record({u}, conj[k].column(u), Vector(n));
  }
  const Matrix t1 = d.coefficient(1);
  Verdict& cancellable = report.add("cancellable");
  cancellable.record({}, image_basis(partial_T_matrix(t)).contains(Cochain::from_matrix(t1).values()));
  Verdict& cancel = report.add("cancellation");
  const Matrix dt = partial_T(t, e.X).as_matrix();
  if (t1 == dt) {
    for (std::size_t u = 0; u < m; ++u) cancel.record({u}, conj.size() > 1 ? conj[1].column(u) : Vector(n), Vector(n));
  }
  return report;
}

}  // namespace triplekit
