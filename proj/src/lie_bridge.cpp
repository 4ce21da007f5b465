#include "triplekit/lie_bridge.hpp"

#include <algorithm>
#include <string>

#include "triplekit/error.hpp"

namespace triplekit {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " shape");
}

// Sum_l v_l f(e_l, rest...).
Vector eval_first(const LieCochain& f, const Vector& v, std::vector<std::size_t> rest) {
  Vector out(f.target_dim());
  rest.insert(rest.begin(), 0);
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (sgn(v[l]) == 0) continue;
    rest[0] = l;
    axpy(out, v[l], f.value(rest));
  }
  return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& x, std::size_t i, std::size_t j) {
  std::vector<std::size_t> r;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (k != i && k != j) r.push_back(x[k]);
  return r;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& x, std::size_t i) { return without(x, i, i); }

template <typename Apply>
CoboundaryMatrix compressed_matrix(std::size_t degree, std::size_t source, std::size_t target, Apply&& apply) {
  const LieCochain probe(degree, source, target);
  const LieCochain next(degree + 1, source, target);
  CoboundaryMatrix out;
  out.degree_from = degree;
  out.degree_to = degree + 1;
  out.matrix = Matrix(next.size(), probe.size());
  for (std::size_t c = 0; c < probe.size(); ++c) {
    Vector e(probe.size());
    e[c] = 1;
    out.matrix.set_column(c, apply(LieCochain(degree, source, target, e)).values());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LieRepresentation::LieRepresentation(LieStructure algebra, std::size_t module_dim, std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), module_dim_(module_dim), rho_(std::move(rho)) {
  if (rho_.size() != algebra_.dim()) throw Error(ErrorCode::DimensionMismatch, "one rho matrix per basis element");
  for (const auto& r : rho_) require_shape(r, module_dim_, module_dim_, "rho");
}

LieRepresentation LieRepresentation::zero(LieStructure algebra, std::size_t module_dim) {
  const std::size_t n = algebra.dim();
  return LieRepresentation(std::move(algebra), module_dim, std::vector<Matrix>(n, Matrix(module_dim, module_dim)));
}

LieRepresentation LieRepresentation::adjoint(LieStructure algebra) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < algebra.dim(); ++i) rho.push_back(algebra.ad(i));
  const std::size_t n = algebra.dim();
  return LieRepresentation(std::move(algebra), n, std::move(rho));
}

Matrix LieRepresentation::rho(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "rho argument");
  Matrix out(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out += x[i] * rho_[i];
  return out;
}

Vector LieRepresentation::rho_apply(const Vector& x, const Vector& u) const {
  if (x.size() != dim() || u.size() != module_dim_) throw Error(ErrorCode::DimensionMismatch, "rho arguments");
  Vector out(module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) rho_[i].apply_add(x[i], u, out);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> c(p);
  for (std::size_t i = 0; i < p; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = p;
    while (i > 0 && c[i - 1] == n - p + i - 1) --i;
    if (i == 0) return out;
    ++c[i - 1];
    for (std::size_t j = i; j < p; ++j) c[j] = c[j - 1] + 1;
  }
}

LieCochain::LieCochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim),
      values_(binom(source_dim, degree) * target_dim) {}

LieCochain::LieCochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Vector values)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim), values_(std::move(values)) {
  if (values_.size() != binom(source_dim, degree) * target_dim) {
    throw Error(ErrorCode::DimensionMismatch, "alternating cochain size");
  }
}

std::size_t LieCochain::index(const std::vector<std::size_t>& c) const {
  std::size_t r = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = start; j < c[i]; ++j) r += binom(source_dim_ - 1 - j, degree_ - 1 - i);
    start = c[i] + 1;
  }
  return r;
}

Vector LieCochain::value(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw Error(ErrorCode::DimensionMismatch, "alternating cochain argument count");
  std::vector<std::size_t> s = args;
  bool odd = false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        odd = !odd;
      }
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return Vector(target_dim_);
  for (auto a : s)
    if (a >= source_dim_) throw Error(ErrorCode::DimensionMismatch, "alternating cochain argument index");
  const std::size_t off = index(s) * target_dim_;
  Vector v(values_.begin() + off, values_.begin() + off + target_dim_);
  return odd ? Scalar(-1) * v : v;
}

void LieCochain::set_increasing(const std::vector<std::size_t>& c, const Vector& v) {
  if (c.size() != degree_ || v.size() != target_dim_) throw Error(ErrorCode::DimensionMismatch, "alternating cochain entry");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] >= source_dim_ || (i > 0 && c[i - 1] >= c[i])) throw Error(ErrorCode::InvalidInput, "tuple is not increasing");
  const std::size_t off = index(c) * target_dim_;
  for (std::size_t l = 0; l < target_dim_; ++l) values_[off + l] = v[l];
}

Cochain LieCochain::to_cochain() const {
  Cochain f(degree_, source_dim_, target_dim_);
  for_each_tuple(source_dim_, degree_, [&](const std::vector<std::size_t>& t) { f.set_value(t, value(t)); });
  return f;
}

LieCochain LieCochain::from_cochain(const Cochain& f) {
  LieCochain out(f.degree(), f.source_dim(), f.target_dim());
  for (const auto& c : increasing_tuples(f.source_dim(), f.degree())) out.set_increasing(c, f.value(c));
  if (!(out.to_cochain() == f)) throw Error(ErrorCode::InvalidInput, "cochain is not alternating");
  return out;
}

// ---------------------------------------------------------------------------

Report check_lie_rep(const LieRepPair& p) {
  const std::size_t n = p.dim(), m = p.module_dim();
  Report report("lie_representation");
  Verdict& v = report.add("rep");
  for_each_tuple(n, 2, [&](const std::vector<std::size_t>& k) {
    Matrix lhs(m, m);
    for (const auto& [l, c] : p.algebra().basis_bracket(k[0], k[1])) lhs += c * p.rho(l);
    const Matrix rhs = p.rho(k[0]) * p.rho(k[1]) - p.rho(k[1]) * p.rho(k[0]);
    v.record(k, lhs.entries(), rhs.entries());
  });
  return report;
}

LieStructure lie_semidirect_product(const LieRepPair& p) {
  const std::size_t n = p.dim(), m = p.module_dim(), d = n + m;
  std::vector<Scalar> c(d * d * d);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * d + j) * d + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = p.algebra().constant(i, j, k);
  // [x, v] = rho(x)v and [v, x] = -rho(x)v
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        at(i, n + v, n + w) = p.rho(i)(w, v);
        at(n + v, i, n + w) = -p.rho(i)(w, v);
      }
  return LieStructure(d, std::move(c));
}

LieCochain ce_apply(const LieRepPair& p, const LieCochain& f) {
  const std::size_t n = p.dim(), m = p.module_dim();
  if (f.source_dim() != n || f.target_dim() != m) throw Error(ErrorCode::DimensionMismatch, "cochain shape differs from the pair");
  const std::size_t q = f.degree() + 1;
  LieCochain out(q, n, m);
  for (const auto& x : increasing_tuples(n, q)) {
    Vector acc(m);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = i + 1; j < q; ++j) {
        const Scalar sign = ((i + j) % 2 == 0) ? 1 : -1;
        const auto rest = without(x, i, j);
        std::vector<std::size_t> args(rest);
        args.insert(args.begin(), 0);
        for (const auto& [l, c] : p.algebra().basis_bracket(x[i], x[j])) {
          args[0] = l;
          axpy(acc, sign * c, f.value(args));
        }
      }
      const Scalar sign = (i % 2 == 0) ? 1 : -1;
      p.rho(x[i]).apply_add(sign, f.value(without(x, i)), acc);
    }
    out.set_increasing(x, acc);
  }
  return out;
}

CoboundaryMatrix ce_coboundary(const LieRepPair& p, std::size_t degree) {
  if (!check_lie_rep(p).passed()) throw Error(ErrorCode::InvalidRepresentation, "rho is not a representation");
  return compressed_matrix(degree, p.dim(), p.module_dim(), [&](const LieCochain& f) { return ce_apply(p, f); });
}

Report check_lie_o_operator(const LieRepPair& p, const Matrix& t) {
  const std::size_t n = p.dim(), m = p.module_dim();
  require_shape(t, n, m, "Lie O-operator");
  Report report("lie_o_operator");
  Verdict& v = report.add("o_identity");
  for_each_tuple(m, 2, [&](const std::vector<std::size_t>& k) {
    const Vector tu = t.column(k[0]), tv = t.column(k[1]);
    const Vector inner = p.rho_apply(tu, unit_vector(m, k[1])) - p.rho_apply(tv, unit_vector(m, k[0]));
    v.record(k, p.algebra().bracket(tu, tv), t.apply(inner));
  });
  return report;
}

LieInduced lie_induced_structures(const LieRepPair& p, const Matrix& t) {
  if (!check_lie_o_operator(p, t).passed()) throw Error(ErrorCode::NotALieOOperator, "Lie O-operator identity fails");
  const std::size_t n = p.dim(), m = p.module_dim();
  std::vector<Scalar> c(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector v = p.rho_apply(t.column(a), unit_vector(m, b)) - p.rho_apply(t.column(b), unit_vector(m, a));
      for (std::size_t l = 0; l < m; ++l) c[(a * m + b) * m + l] = v[l];
    }
  LieStructure bracket(m, std::move(c));
  std::vector<Matrix> rho;
  for (std::size_t a = 0; a < m; ++a) {
    Matrix r(n, n);
    const Vector ta = t.column(a);
    for (std::size_t x = 0; x < n; ++x) {
      const Vector ex = unit_vector(n, x);
      r.set_column(x, p.algebra().bracket(ta, ex) + t.apply(p.rho_apply(ex, unit_vector(m, a))));
    }
    rho.push_back(std::move(r));
  }
  LieRepresentation rep(bracket, n, std::move(rho));
  return {std::move(bracket), std::move(rep)};
}

CoboundaryMatrix lie_o_coboundary(const LieRepPair& p, const Matrix& t, std::size_t degree) {
  if (!check_lie_o_operator(p, t).passed()) throw Error(ErrorCode::NotALieOOperator, "Lie O-operator identity fails");
  const std::size_t n = p.dim(), m = p.module_dim();
  auto apply = [&](const LieCochain& f) {
    const std::size_t q = f.degree() + 1;
    LieCochain out(q, m, n);
    for (const auto& u : increasing_tuples(m, q)) {
      Vector acc(n);
      for (std::size_t i = 0; i < q; ++i) {
        const Vector ui = unit_vector(m, u[i]);
        const Vector tui = t.column(u[i]);
        for (std::size_t j = i + 1; j < q; ++j) {
          const Scalar sign = ((i + j) % 2 == 0) ? 1 : -1;
          const Vector uj = unit_vector(m, u[j]);
          const Vector arg = p.rho_apply(tui, uj) - p.rho_apply(t.column(u[j]), ui);
          axpy(acc, sign, eval_first(f, arg, without(u, i, j)));
        }
        const Scalar sign = (i % 2 == 0) ? 1 : -1;
        const Vector fv = f.value(without(u, i));
        Vector term = p.algebra().bracket(tui, fv);
        axpy(term, 1, t.apply(p.rho_apply(fv, ui)));
        axpy(acc, sign, term);
      }
      out.set_increasing(u, acc);
    }
    return out;
  };
  return compressed_matrix(degree, m, n, apply);
}

LtsRepPair lts_rep_from_lie(const LieRepPair& p) {
  if (!check_lie_rep(p).passed()) throw Error(ErrorCode::InvalidRepresentation, "rho is not a representation");
  const std::size_t n = p.dim();
  std::vector<Matrix> theta;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta.push_back(p.rho(j) * p.rho(i));
  return LtsRepresentation(lie_to_lts(p.algebra()), p.module_dim(), std::move(theta));
}

Report check_semidirect_compatibility(const LieRepPair& p) {
  Report report("semidirect_compatibility");
  Verdict& v = report.add("semidirect");
  const LtsStructure a = semidirect_product(lts_rep_from_lie(p), Validation::Skip);
  const LtsStructure b = lie_to_lts(lie_semidirect_product(p));
  v.record({}, a.constants(), b.constants());
  return report;
}

Cochain lie_omega(const LieRepPair& p, const LieCochain& phi) {
  const std::size_t n = p.dim(), m = p.module_dim();
  if (phi.degree() != 2 || phi.source_dim() != n || phi.target_dim() != m) {
    throw Error(ErrorCode::DimensionMismatch, "expected a 2-cochain on the pair");
  }
  Cochain w(3, n, m);
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    Vector v(m);
    for (const auto& [l, c] : p.algebra().basis_bracket(k[0], k[1])) axpy(v, c, phi.value({l, k[2]}));
    p.rho(k[2]).apply_add(-1, phi.value({k[0], k[1]}), v);
    w.set_value(k, v);
  });
  return w;
}

namespace {

void require_ce_cocycle(const LieRepPair& p, const LieCochain& f) {
  if (!ce_apply(p, f).is_zero()) throw Error(ErrorCode::NotACocycle, "CE coboundary is nonzero");
}

}  // namespace

TransferredCochain transfer_1cocycle(const LieRepPair& p, const LieCochain& f) {
  if (f.degree() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a 1-cochain");
  require_ce_cocycle(p, f);
  TransferredCochain out{f.to_cochain(), Report("transfer_1cocycle")};
  out.report.add("cocycle").record({}, yamaguti_delta(lts_rep_from_lie(p), out.cochain).is_zero());
  return out;
}

TransferredCochain transfer_2cocycle(const LieRepPair& p, const LieCochain& phi) {
  require_ce_cocycle(p, phi);
  TransferredCochain out{lie_omega(p, phi), Report("transfer_2cocycle")};
  out.report.add("in_space").record({}, cochain_space(p.dim(), p.module_dim(), 3).contains(out.cochain));
  out.report.add("cocycle").record({}, yamaguti_delta(lts_rep_from_lie(p), out.cochain).is_zero());
  return out;
}

Report check_associated_identity(const LieRepPair& p, const LieCochain& alpha) {
  if (alpha.degree() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a 1-cochain");
  Report report("associated_identity");
  const Cochain lhs = yamaguti_delta(lts_rep_from_lie(p), alpha.to_cochain());
  const Cochain rhs = lie_omega(p, ce_apply(p, alpha));
  report.add("associated").record({}, lhs.values(), rhs.values());
  return report;
}

TransferredOperator transfer_o_operator(const LieRepPair& p, const Matrix& t) {
  const LieInduced ind = lie_induced_structures(p, t);
  TransferredOperator out{OOperator{lts_rep_from_lie(p), t}, Report("transfer_o_operator")};
  Verdict& o = out.report.add("o_identity");
  o.record({}, check_o_operator(out.op).passed());
  Verdict& two = out.report.add("two_route");
  Verdict& rep = out.report.add("induced_rep");
  if (o.passed) {
    two.record({}, induced_bracket(out.op).constants(), lie_to_lts(ind.bracket).constants());
    rep.record({}, induced_rep(out.op) == lts_rep_from_lie(ind.rep));
  } else {
    two.record({}, false);
    rep.record({}, false);
  }
  return out;
}

TransferredCochain transfer_T_1cocycle(const LieRepPair& p, const Matrix& t, const LieCochain& f) {
  if (f.degree() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a 1-cochain");
  const LieInduced ind = lie_induced_structures(p, t);
  require_ce_cocycle(ind.rep, f);
  const OOperator op{lts_rep_from_lie(p), t};
  TransferredCochain out{f.to_cochain(), Report("transfer_T_1cocycle")};
  out.report.add("cocycle").record({}, yamaguti_delta(o_coboundary_data(op, Route::Direct), out.cochain).is_zero());
  return out;
}

TransferredCochain transfer_T_2cocycle(const LieRepPair& p, const Matrix& t, const LieCochain& phi) {
  const LieInduced ind = lie_induced_structures(p, t);
  require_ce_cocycle(ind.rep, phi);
  const OOperator op{lts_rep_from_lie(p), t};
  TransferredCochain out{lie_omega(ind.rep, phi), Report("transfer_T_2cocycle")};
  out.report.add("in_space").record({}, cochain_space(p.module_dim(), p.dim(), 3).contains(out.cochain));
  out.report.add("cocycle").record({}, yamaguti_delta(o_coboundary_data(op, Route::Direct), out.cochain).is_zero());
  return out;
}

}  // namespace triplekit
