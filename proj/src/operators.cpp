#include "triplekit/operators.hpp"

#include "triplekit/error.hpp"
#include "triplekit/linalg.hpp"

namespace triplekit {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + ", got " + std::to_string(m.rows()) +
                                                  "x" + std::to_string(m.cols()));
  }
}

void require_o_shape(const OOperator& t) {
  require_shape(t.matrix, t.pair.dim(), t.pair.module_dim(), "O-operator");
}

std::vector<Vector> units(std::size_t n) {
  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vector(n, i);
  return e;
}

// Residual-free check of the O-identity on basis triples.
void o_identity(const LtsRepPair& p, const Matrix& t, Verdict& verdict) {
  const std::size_t m = p.module_dim();
  const auto e = units(m);
  std::vector<Vector> te(m);
  for (std::size_t i = 0; i < m; ++i) te[i] = t.column(i);
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const Vector lhs = p.algebra().bracket(te[k[0]], te[k[1]], te[k[2]]);
    const Vector rhs = t.apply(o_term(p, te[k[0]], te[k[1]], te[k[2]], e[k[0]], e[k[1]], e[k[2]]));
    verdict.record(k, lhs, rhs);
  });
}

}  // namespace

PreLts::PreLts(std::size_t dim, std::vector<Scalar> mu) : dim_(dim), mu_(std::move(mu)) {
  if (mu_.size() != dim * dim * dim * dim) throw Error(ErrorCode::DimensionMismatch, "pre-L.t.s tensor size");
}

Vector PreLts::product(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "pre-L.t.s product arguments");
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(z[k]) == 0) continue;
        const Scalar xyz = xy * z[k];
        const std::size_t base = ((i * dim_ + j) * dim_ + k) * dim_;
        for (std::size_t l = 0; l < dim_; ++l) {
          if (sgn(mu_[base + l]) != 0) out[l] += xyz * mu_[base + l];
        }
      }
    }
  }
  return out;
}

Vector PreLts::star(const Vector& x, const Vector& y, const Vector& z) const {
  return product(z, y, x) - product(z, x, y);
}

Vector PreLts::commutator(const Vector& x, const Vector& y, const Vector& z) const {
  return star(x, y, z) + product(x, y, z) - product(y, x, z);
}

Vector o_term(const LtsRepPair& p, const Vector& a, const Vector& b, const Vector& c, const Vector& u,
              const Vector& v, const Vector& w) {
  Vector out = p.D_apply(a, b, w);
  axpy(out, 1, p.theta_apply(b, c, u));
  axpy(out, -1, p.theta_apply(a, c, v));
  return out;
}

Report check_rota_baxter(const LtsStructure& a, const Matrix& r) {
  const std::size_t n = a.dim();
  require_shape(r, n, n, "Rota-Baxter operator");
  Report report("rota_baxter");
  Verdict& v = report.add("rota_baxter");
  const auto e = units(n);
  std::vector<Vector> re(n);
  for (std::size_t i = 0; i < n; ++i) re[i] = r.column(i);
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    const Vector &x = e[k[0]], &y = e[k[1]], &z = e[k[2]];
    const Vector &rx = re[k[0]], &ry = re[k[1]], &rz = re[k[2]];
    const Vector lhs = a.bracket(rx, ry, rz);
    const Vector rhs = r.apply(a.bracket(rx, ry, z) + a.bracket(rx, y, rz) + a.bracket(x, ry, rz));
    v.record(k, lhs, rhs);
  });
  return report;
}

Report check_o_operator(const OOperator& t) {
  require_o_shape(t);
  if (!t.pair.axioms_hold()) throw Error(ErrorCode::InvalidRepresentation, "representation axioms fail");
  Report report("o_operator");
  o_identity(t.pair, t.matrix, report.add("o_identity"));
  return report;
}

Report check_graph_subalgebra(const OOperator& t) {
  require_o_shape(t);
  const LtsStructure s = semidirect_product(t.pair);
  const std::size_t n = t.pair.dim();
  const std::size_t m = t.pair.module_dim();
  std::vector<Vector> gens(m);
  for (std::size_t k = 0; k < m; ++k) {
    Vector g(n + m);
    const Vector tk = t.matrix.column(k);
    for (std::size_t i = 0; i < n; ++i) g[i] = tk[i];
    g[n + k] = 1;
    gens[k] = std::move(g);
  }
  const Subspace graph = Subspace::span_of(n + m, gens);
  Report report("graph_subalgebra");
  Verdict& v = report.add("graph_closed");
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    v.record(k, graph.contains(s.bracket(gens[k[0]], gens[k[1]], gens[k[2]])));
  });
  return report;
}

Matrix hat_lift(const OOperator& t) {
  require_o_shape(t);
  const std::size_t n = t.pair.dim();
  const std::size_t m = t.pair.module_dim();
  return block(Matrix(n, n), t.matrix, Matrix(m, n), Matrix(m, m));
}

Matrix bar_lift(const OOperator& t) { return hat_lift(t); }

namespace {

// A - N(B - N c) for the three families of the Nijenhuis identity.
Vector nijenhuis_bracket(const LtsStructure& a, const Matrix& nm, const Vector& x, const Vector& y, const Vector& z,
                         const Vector& nx, const Vector& ny, const Vector& nz) {
  const Vector outer = a.bracket(nx, ny, z) + a.bracket(x, ny, nz) + a.bracket(nx, y, nz);
  const Vector inner = a.bracket(nx, y, z) + a.bracket(x, ny, z) + a.bracket(x, y, nz) - nm.apply(a.bracket(x, y, z));
  return outer - nm.apply(inner);
}

}  // namespace

Report check_nijenhuis_operator(const NijenhuisCandidate& nc) {
  const std::size_t n = nc.algebra.dim();
  require_shape(nc.matrix, n, n, "Nijenhuis candidate");
  Report report("nijenhuis_operator");
  Verdict& v = report.add("nijenhuis");
  const auto e = units(n);
  std::vector<Vector> ne(n);
  for (std::size_t i = 0; i < n; ++i) ne[i] = nc.matrix.column(i);
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    const Vector lhs = nc.algebra.bracket(ne[k[0]], ne[k[1]], ne[k[2]]);
    const Vector rhs =
        nc.matrix.apply(nijenhuis_bracket(nc.algebra, nc.matrix, e[k[0]], e[k[1]], e[k[2]], ne[k[0]], ne[k[1]], ne[k[2]]));
    v.record(k, lhs, rhs);
  });
  return report;
}

LtsStructure nijenhuis_deformed_bracket(const NijenhuisCandidate& nc) {
  if (!check_nijenhuis_operator(nc).passed()) throw Error(ErrorCode::NotNijenhuis, "Nijenhuis identity fails");
  const std::size_t n = nc.algebra.dim();
  const auto e = units(n);
  std::vector<Vector> ne(n);
  for (std::size_t i = 0; i < n; ++i) ne[i] = nc.matrix.column(i);
  std::vector<Scalar> c(n * n * n * n);
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    const Vector b = nijenhuis_bracket(nc.algebra, nc.matrix, e[k[0]], e[k[1]], e[k[2]], ne[k[0]], ne[k[1]], ne[k[2]]);
    const std::size_t base = ((k[0] * n + k[1]) * n + k[2]) * n;
    for (std::size_t l = 0; l < n; ++l) c[base + l] = b[l];
  });
  return LtsStructure(n, std::move(c));
}

PreLts induced_prelts(const OOperator& t) {
  if (!check_o_operator(t).passed()) throw Error(ErrorCode::NotAnOOperator, "O-operator identity fails");
  const std::size_t m = t.pair.module_dim();
  const auto e = units(m);
  std::vector<Scalar> mu(m * m * m * m);
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const Vector val = t.pair.theta_apply(t.matrix.column(k[1]), t.matrix.column(k[2]), e[k[0]]);
    const std::size_t base = ((k[0] * m + k[1]) * m + k[2]) * m;
    for (std::size_t l = 0; l < m; ++l) mu[base + l] = val[l];
  });
  return PreLts(m, std::move(mu));
}

Report check_prelts_axioms(const PreLts& p) {
  const std::size_t m = p.dim();
  const auto e = units(m);
  Report report("prelts_axioms");
  Verdict& c1 = report.add("cond1");
  Verdict& c2 = report.add("cond2");
  for_each_tuple(m, 5, [&](const std::vector<std::size_t>& k) {
    const Vector &x1 = e[k[0]], &x2 = e[k[1]], &x3 = e[k[2]], &x4 = e[k[3]], &x5 = e[k[4]];
    {
      const Vector lhs = p.product(x5, x1, p.commutator(x2, x3, x4));
      const Vector rhs = p.product(p.product(x5, x1, x2), x3, x4) - p.product(p.product(x5, x1, x3), x2, x4) +
                         p.star(x2, x3, p.product(x5, x1, x4));
      c1.record(k, lhs, rhs);
    }
    {
      const Vector lhs = p.star(x1, x2, p.product(x5, x3, x4));
      const Vector rhs = p.product(p.star(x1, x2, x5), x3, x4) + p.product(x5, p.commutator(x1, x2, x3), x4) +
                         p.product(x5, x3, p.commutator(x1, x2, x4));
      c2.record(k, lhs, rhs);
    }
  });
  return report;
}

LtsStructure prelts_commutator(const PreLts& p) {
  if (!check_prelts_axioms(p).passed()) throw Error(ErrorCode::NotAPreLts, "pre-L.t.s axioms fail");
  const std::size_t m = p.dim();
  const auto e = units(m);
  std::vector<Scalar> c(m * m * m * m);
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    const Vector b = p.commutator(e[k[0]], e[k[1]], e[k[2]]);
    const std::size_t base = ((k[0] * m + k[1]) * m + k[2]) * m;
    for (std::size_t l = 0; l < m; ++l) c[base + l] = b[l];
  });
  return LtsStructure(m, std::move(c));
}

Report check_prelts_morphism(const PreLts& source, const PreLts& target, const Matrix& psi) {
  require_shape(psi, target.dim(), source.dim(), "pre-L.t.s morphism");
  const std::size_t m = source.dim();
  const auto e = units(m);
  Report report("prelts_morphism");
  Verdict& v = report.add("morphism");
  for_each_tuple(m, 3, [&](const std::vector<std::size_t>& k) {
    v.record(k, psi.apply(source.product(e[k[0]], e[k[1]], e[k[2]])),
             target.product(psi.column(k[0]), psi.column(k[1]), psi.column(k[2])));
  });
  return report;
}

Report check_o_morphism(const OOperatorMorphism& mor) {
  const OOperator& s = mor.source;
  const OOperator& t = mor.target;
  require_o_shape(s);
  require_o_shape(t);
  const std::size_t n = s.pair.dim(), m = s.pair.module_dim();
  const std::size_t n2 = t.pair.dim(), m2 = t.pair.module_dim();
  require_shape(mor.phi, n2, n, "phi");
  require_shape(mor.psi, m2, m, "psi");

  Report report("o_morphism");
  const Report phi_report = check_lts_morphism({s.pair.algebra(), t.pair.algebra(), mor.phi});
  Verdict& phi_ok = report.add("phi_morphism");
  phi_ok = phi_report.at("morphism");
  phi_ok.name = "phi_morphism";

  Verdict& c1 = report.add("c1");
  const Matrix lhs1 = mor.phi * s.matrix;
  const Matrix rhs1 = t.matrix * mor.psi;
  for (std::size_t k = 0; k < m; ++k) c1.record({k}, lhs1.column(k), rhs1.column(k));

  Verdict& c2 = report.add("c2");
  for_each_tuple(n, 2, [&](const std::vector<std::size_t>& k) {
    const Matrix lhs = mor.psi * s.pair.theta(k[0], k[1]);
    const Matrix rhs = t.pair.theta(mor.phi.column(k[0]), mor.phi.column(k[1])) * mor.psi;
    c2.record(k, lhs.entries(), rhs.entries());
  });

  // Graph of phi + psi inside (L + V) + (L' + V').
  const LtsStructure a = semidirect_product(s.pair, Validation::Skip);
  const LtsStructure b = semidirect_product(t.pair, Validation::Skip);
  const std::size_t N = n + m, N2 = n2 + m2;
  const Matrix big = block(mor.phi, Matrix(n2, m), Matrix(m2, n), mor.psi);
  std::vector<Vector> gens(N);
  for (std::size_t k = 0; k < N; ++k) {
    Vector g(N + N2);
    g[k] = 1;
    const Vector img = big.column(k);
    for (std::size_t i = 0; i < N2; ++i) g[N + i] = img[i];
    gens[k] = std::move(g);
  }
  const Subspace graph = Subspace::span_of(N + N2, gens);
  Verdict& gv = report.add("graph");
  for_each_tuple(N, 3, [&](const std::vector<std::size_t>& k) {
    const Vector x = a.bracket(unit_vector(N, k[0]), unit_vector(N, k[1]), unit_vector(N, k[2]));
    const Vector y = b.bracket(big.column(k[0]), big.column(k[1]), big.column(k[2]));
    Vector w(N + N2);
    for (std::size_t i = 0; i < N; ++i) w[i] = x[i];
    for (std::size_t i = 0; i < N2; ++i) w[N + i] = y[i];
    gv.record(k, graph.contains(w));
  });

  Verdict& agree = report.add("graph_agreement");
  agree.record({}, report.at("graph").passed == (report.at("phi_morphism").passed && report.at("c2").passed));
  return report;
}

}  // namespace triplekit
