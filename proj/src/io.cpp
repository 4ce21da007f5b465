#include "triplekit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "triplekit/error.hpp"

namespace triplekit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& j, std::size_t len, std::size_t bound, const char* what) {
  if (!j.is_array() || j.size() != len) bad(std::string(what) + ": expected " + std::to_string(len) + " indices");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= bound) {
      bad(std::string(what) + ": index out of range");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

Json args_json(const std::vector<std::size_t>& a) {
  Json j = Json::array();
  for (auto i : a) j.push_back(i);
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  bad("rational must be a \"p/q\" string or an integer");
}

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const Json* entries = &j;
  std::optional<std::size_t> rows, cols;
  if (j.is_object()) {
    entries = &field(j, "entries");
    rows = size_field(j, "rows");
    cols = size_field(j, "cols");
  }
  if (!entries->is_array()) bad("matrix entries must be an array of rows");
  const std::size_t r = rows.value_or(entries->size());
  if (entries->size() != r) bad("matrix has " + std::to_string(entries->size()) + " rows, expected " + std::to_string(r));
  std::size_t c = cols.value_or(r == 0 ? 0 : (*entries)[0].size());
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = (*entries)[i];
    if (!row.is_array() || row.size() != c) bad("matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(row[k]);
  }
  return m;
}

Json sparse_to_json(const Vector& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) j[std::to_string(i)] = to_json(v[i]);
  return j;
}

Vector sparse_from_json(const Json& j, std::size_t dim) {
  Vector v(dim);
  if (j.is_array()) {
    if (j.size() != dim) bad("dense vector has the wrong length");
    for (std::size_t i = 0; i < dim; ++i) v[i] = scalar_from_json(j[i]);
    return v;
  }
  if (!j.is_object()) bad("vector must be an object {\"index\": value} or an array");
  for (const auto& [k, val] : j.items()) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad("vector key \"" + k + "\" is not an index");
    }
    if (idx >= dim) bad("vector index " + k + " out of range");
    v[idx] = scalar_from_json(val);
  }
  return v;
}

Json to_json(const LtsStructure& a) {
  const std::size_t n = a.dim();
  Json brackets = Json::array();
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    if (k[0] >= k[1]) return;
    const auto& sv = a.basis_bracket(k[0], k[1], k[2]);
    if (sv.empty()) return;
    Vector v(n);
    for (const auto& [l, c] : sv) v[l] = c;
    brackets.push_back(Json{{"args", args_json(k)}, {"value", sparse_to_json(v)}});
  });
  return Json{{"type", "lts"}, {"dim", n}, {"brackets", std::move(brackets)}};
}

Json to_json(const LieStructure& g) {
  const std::size_t n = g.dim();
  Json brackets = Json::array();
  for_each_tuple(n, 2, [&](const std::vector<std::size_t>& k) {
    if (k[0] >= k[1]) return;
    const auto& sv = g.basis_bracket(k[0], k[1]);
    if (sv.empty()) return;
    Vector v(n);
    for (const auto& [l, c] : sv) v[l] = c;
    brackets.push_back(Json{{"args", args_json(k)}, {"value", sparse_to_json(v)}});
  });
  return Json{{"type", "lie"}, {"dim", n}, {"brackets", std::move(brackets)}};
}

bool is_lie_algebra(const Json& j) {
  if (!j.is_object()) bad("algebra must be an object");
  if (!j.contains("type")) return false;
  const Json& t = j.at("type");
  if (t == "lie") return true;
  if (t == "lts") return false;
  bad("algebra type must be \"lts\" or \"lie\"");
}

LtsStructure lts_from_json(const Json& j) {
  if (is_lie_algebra(j)) return lie_to_lts(lie_from_json(j));
  const std::size_t n = size_field(j, "dim");
  std::vector<TernaryBracketEntry> entries;
  const Json& list = j.contains("brackets") ? j.at("brackets") : Json::array();
  if (!list.is_array()) bad("\"brackets\" must be an array");
  for (const auto& b : list) {
    const auto a = index_list(field(b, "args"), 3, n, "bracket args");
    entries.push_back({{a[0], a[1], a[2]}, sparse_from_json(field(b, "value"), n)});
  }
  try {
    return LtsStructure::from_brackets(n, entries);
  } catch (const Error& e) {
    bad(e.what());
  }
}

LieStructure lie_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  std::vector<BinaryBracketEntry> entries;
  const Json& list = j.contains("brackets") ? j.at("brackets") : Json::array();
  if (!list.is_array()) bad("\"brackets\" must be an array");
  for (const auto& b : list) {
    const auto a = index_list(field(b, "args"), 2, n, "bracket args");
    entries.push_back({{a[0], a[1]}, sparse_from_json(field(b, "value"), n)});
  }
  try {
    return LieStructure::from_brackets(n, entries);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const LtsRepresentation& r) {
  Json theta = Json::array();
  for_each_tuple(r.dim(), 2, [&](const std::vector<std::size_t>& k) {
    const Matrix& m = r.theta(k[0], k[1]);
    if (!m.is_zero()) theta.push_back(Json{{"pair", args_json(k)}, {"matrix", to_json(m)}});
  });
  return Json{{"module_dim", r.module_dim()}, {"theta", std::move(theta)}};
}

LtsRepresentation lts_rep_from_json(const LtsStructure& a, const Json& j) {
  const std::size_t m = size_field(j, "module_dim");
  std::vector<ThetaEntry> entries;
  const Json& list = j.contains("theta") ? j.at("theta") : Json::array();
  if (!list.is_array()) bad("\"theta\" must be an array");
  for (const auto& t : list) {
    const auto p = index_list(field(t, "pair"), 2, a.dim(), "theta pair");
    Matrix mat = matrix_from_json(field(t, "matrix"));
    if (mat.rows() != m || mat.cols() != m) bad("theta matrix must be module_dim x module_dim");
    entries.push_back({{p[0], p[1]}, std::move(mat)});
  }
  try {
    return LtsRepresentation::from_entries(a, m, entries);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const LieRepresentation& r) {
  Json rho = Json::array();
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (!r.rho(i).is_zero()) rho.push_back(Json{{"index", i}, {"matrix", to_json(r.rho(i))}});
  return Json{{"module_dim", r.module_dim()}, {"rho", std::move(rho)}};
}

LieRepresentation lie_rep_from_json(const LieStructure& g, const Json& j) {
  const std::size_t m = size_field(j, "module_dim");
  std::vector<Matrix> rho(g.dim(), Matrix(m, m));
  std::vector<bool> seen(g.dim(), false);
  const Json& list = j.contains("rho") ? j.at("rho") : Json::array();
  if (!list.is_array()) bad("\"rho\" must be an array");
  for (const auto& t : list) {
    const std::size_t i = index_list(Json::array({field(t, "index")}), 1, g.dim(), "rho index")[0];
    if (seen[i]) bad("rho index " + std::to_string(i) + " listed twice");
    seen[i] = true;
    rho[i] = matrix_from_json(field(t, "matrix"));
    if (rho[i].rows() != m || rho[i].cols() != m) bad("rho matrix must be module_dim x module_dim");
  }
  return LieRepresentation(g, m, std::move(rho));
}

Json to_json(const Bivector& x) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = i + 1; j < x.dim(); ++j)
      if (sgn(x.coeffs()(i, j)) != 0) entries.push_back(Json{{"pair", {i, j}}, {"value", to_json(x.coeffs()(i, j))}});
  return Json{{"dim", x.dim()}, {"entries", std::move(entries)}};
}

Bivector bivector_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  Matrix m(n, n);
  const Json& list = j.contains("entries") ? j.at("entries") : Json::array();
  if (!list.is_array()) bad("\"entries\" must be an array");
  for (const auto& e : list) {
    const auto p = index_list(field(e, "pair"), 2, n, "bivector pair");
    if (p[0] == p[1]) bad("bivector pair must have distinct indices");
    const Scalar v = scalar_from_json(field(e, "value"));
    m(p[0], p[1]) += v;
    m(p[1], p[0]) -= v;
  }
  return Bivector::from_antisymmetric(m);
}

Json to_json(const Cochain& f) {
  Json values = Json::array();
  for_each_tuple(f.source_dim(), f.degree(), [&](const std::vector<std::size_t>& k) {
    const Vector v = f.value(k);
    if (!is_zero(v)) values.push_back(Json{{"args", args_json(k)}, {"value", sparse_to_json(v)}});
  });
  return Json{{"degree", f.degree()}, {"source_dim", f.source_dim()}, {"target_dim", f.target_dim()},
              {"values", std::move(values)}};
}

Cochain cochain_from_json(const Json& j) {
  if (j.contains("alternating") && j.at("alternating") == true) return lie_cochain_from_json(j).to_cochain();
  const std::size_t p = size_field(j, "degree"), s = size_field(j, "source_dim"), t = size_field(j, "target_dim");
  Cochain f(p, s, t);
  const Json& list = j.contains("values") ? j.at("values") : Json::array();
  if (!list.is_array()) bad("\"values\" must be an array");
  for (const auto& e : list) f.set_value(index_list(field(e, "args"), p, s, "cochain args"), sparse_from_json(field(e, "value"), t));
  return f;
}

Json to_json(const LieCochain& f) {
  Json values = Json::array();
  for (const auto& c : increasing_tuples(f.source_dim(), f.degree())) {
    const Vector v = f.value(c);
    if (!is_zero(v)) values.push_back(Json{{"args", args_json(c)}, {"value", sparse_to_json(v)}});
  }
  return Json{{"alternating", true}, {"degree", f.degree()}, {"source_dim", f.source_dim()},
              {"target_dim", f.target_dim()}, {"values", std::move(values)}};
}

LieCochain lie_cochain_from_json(const Json& j) {
  const std::size_t p = size_field(j, "degree"), s = size_field(j, "source_dim"), t = size_field(j, "target_dim");
  LieCochain f(p, s, t);
  const Json& list = j.contains("values") ? j.at("values") : Json::array();
  if (!list.is_array()) bad("\"values\" must be an array");
  for (const auto& e : list) {
    try {
      f.set_increasing(index_list(field(e, "args"), p, s, "cochain args"), sparse_from_json(field(e, "value"), t));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::ParseError) throw;
      bad(err.what());
    }
  }
  return f;
}

Json to_json(const PreLts& p) {
  const std::size_t n = p.dim();
  Json products = Json::array();
  for_each_tuple(n, 3, [&](const std::vector<std::size_t>& k) {
    Vector v(n);
    for (std::size_t l = 0; l < n; ++l) v[l] = p.mu(k[0], k[1], k[2], l);
    if (!is_zero(v)) products.push_back(Json{{"args", args_json(k)}, {"value", sparse_to_json(v)}});
  });
  return Json{{"dim", n}, {"products", std::move(products)}};
}

PreLts prelts_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  std::vector<Scalar> mu(n * n * n * n);
  const Json& list = j.contains("products") ? j.at("products") : Json::array();
  if (!list.is_array()) bad("\"products\" must be an array");
  for (const auto& e : list) {
    const auto a = index_list(field(e, "args"), 3, n, "product args");
    const Vector v = sparse_from_json(field(e, "value"), n);
    for (std::size_t l = 0; l < n; ++l) mu[((a[0] * n + a[1]) * n + a[2]) * n + l] = v[l];
  }
  return PreLts(n, std::move(mu));
}

Json to_json(const Report& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts()) {
    Json j{{"name", v.name}, {"passed", v.passed}, {"checked", v.checked}};
    if (v.witness) {
      Json lhs = Json::array(), rhs = Json::array();
      for (const auto& s : v.witness->lhs) lhs.push_back(to_json(s));
      for (const auto& s : v.witness->rhs) rhs.push_back(to_json(s));
      j["witness"] = Json{{"indices", args_json(v.witness->indices)}, {"lhs", lhs}, {"rhs", rhs}};
    }
    verdicts.push_back(std::move(j));
  }
  return Json{{"subject", r.subject()}, {"passed", r.passed()}, {"verdicts", std::move(verdicts)}};
}

Json to_json(const CohomologyReport& r) {
  return Json{{"degree", r.degree},
              {"dim_cochains", r.dim_cochains},
              {"dim_cocycles", r.dim_cocycles},
              {"dim_coboundaries", r.dim_coboundaries},
              {"dim_H", r.dim_H},
              {"convention", r.convention}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    bad(origin + ": malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + " (byte " +
        std::to_string(e.byte) + ")");
  }
}

// ---------------------------------------------------------------------------
// Built-in fixtures

namespace {

LtsStructure dim2_algebra() { return LtsStructure::from_brackets(2, {{{0, 1, 1}, {1, 0}}}); }

LtsStructure dim4_algebra() { return LtsStructure::from_brackets(4, {{{0, 1, 0}, {0, 0, 0, 1}}}); }

LieStructure abelian2() { return LieStructure(2); }

LieStructure heisenberg() { return LieStructure::from_brackets(3, {{{0, 1}, {0, 0, 1}}}); }

// h = e_0, e = e_1, f = e_2
LieStructure sl2() {
  return LieStructure::from_brackets(3, {{{0, 1}, {0, 2, 0}}, {{0, 2}, {0, 0, -2}}, {{1, 2}, {1, 0, 0}}});
}

LieStructure solvable3() { return LieStructure::from_brackets(3, {{{0, 1}, {0, 1, 0}}, {{0, 2}, {0, 0, 2}}}); }

Matrix unit_matrix(std::size_t r, std::size_t c, std::size_t i, std::size_t j) {
  Matrix m(r, c);
  m(i, j) = 1;
  return m;
}

Json lie_doc(const LieStructure& g, const std::optional<Matrix>& op, const std::optional<LieRepresentation>& rep) {
  Json j{{"algebra", to_json(g)}};
  if (rep) j["representation"] = to_json(*rep);
  if (op) j["operator"] = to_json(*op);
  return j;
}

std::map<std::string, Json> build_fixtures() {
  std::map<std::string, Json> f;
  f["paper/dim2"] = Json{{"algebra", to_json(dim2_algebra())},
                         {"operator", to_json(Matrix{{0, 1}, {0, 2}})},
                         {"bivector", to_json(Bivector::wedge(2, 0, 1))}};
  f["paper/dim4"] = Json{
      {"algebra", to_json(dim4_algebra())},
      {"operator", to_json(Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {2, -1, Scalar(1, 2), 3}, {1, -2, Scalar(1, 3), 1}})}};
  f["lts/zero2"] = Json{{"algebra", to_json(LtsStructure(2))},
                        {"representation", to_json(LtsRepresentation::zero(LtsStructure(2), 2))},
                        {"operator", to_json(Matrix(2, 2))}};
  f["lts/non-cyclic3"] = Json{{"algebra", to_json(LtsStructure::from_brackets(3, {{{0, 1, 2}, {1, 0, 0}}}))}};

  f["lie/abelian2"] = lie_doc(abelian2(), Matrix{{1, 2}, {3, 4}}, std::nullopt);
  f["lie/abelian2-rep"] = lie_doc(abelian2(), std::nullopt,
                                  LieRepresentation(abelian2(), 2, {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, 1}}}));
  f["lie/heisenberg"] = lie_doc(heisenberg(), unit_matrix(3, 3, 2, 0), std::nullopt);
  f["lie/heisenberg-rep"] = lie_doc(
      heisenberg(), std::nullopt,
      LieRepresentation(heisenberg(), 3, {unit_matrix(3, 3, 0, 1), unit_matrix(3, 3, 1, 2), unit_matrix(3, 3, 0, 2)}));
  f["lie/sl2"] = lie_doc(sl2(), Matrix{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}}, std::nullopt);
  f["lie/sl2-rep"] = lie_doc(
      sl2(), std::nullopt,
      LieRepresentation(sl2(), 2, {Matrix{{1, 0}, {0, -1}}, unit_matrix(2, 2, 0, 1), unit_matrix(2, 2, 1, 0)}));
  f["lie/solvable3"] = lie_doc(solvable3(), unit_matrix(3, 3, 1, 2), std::nullopt);
  f["lie/solvable3-rep"] = lie_doc(
      solvable3(), std::nullopt,
      LieRepresentation(solvable3(), 2, {Matrix{{1, 0}, {0, 0}}, unit_matrix(2, 2, 0, 1), Matrix(2, 2)}));
  return f;
}

const std::map<std::string, Json>& fixtures() {
  static const std::map<std::string, Json> f = build_fixtures();
  return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : fixtures()) out.push_back(k);
  return out;
}

std::optional<Json> builtin_fixture(const std::string& name) {
  const auto it = fixtures().find(name);
  if (it == fixtures().end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace() {
  if (const char* dir = std::getenv("TRIPLEKIT_FIXTURES"); dir != nullptr && *dir != '\0') extra_dir_ = dir;
}

Workspace::Workspace(std::optional<std::filesystem::path> extra_dir) : extra_dir_(std::move(extra_dir)) {}

Json Workspace::load_raw(const std::string& ref) const {
  if (auto f = builtin_fixture(ref)) return *f;
  std::filesystem::path path(ref);
  if (!std::filesystem::exists(path) && extra_dir_) {
    const auto candidate = *extra_dir_ / (ref + ".json");
    if (std::filesystem::exists(candidate)) path = candidate;
    else if (std::filesystem::exists(*extra_dir_ / ref)) path = *extra_dir_ / ref;
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot resolve document \"" + ref + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

Json Workspace::resolve(Json doc, int depth) const {
  if (depth > 8) throw Error(ErrorCode::InvalidInput, "document references nest too deeply");
  if (!doc.is_object()) bad("document must be a JSON object");
  for (const char* key : {"algebra", "representation", "operator", "target", "bivector"}) {
    if (doc.contains(key) && doc.at(key).is_string()) {
      const Json other = resolve(load_raw(doc.at(key).get<std::string>()), depth + 1);
      if (!other.contains(key)) {
        throw Error(ErrorCode::InvalidInput, "referenced document has no \"" + std::string(key) + "\"");
      }
      doc[key] = other.at(key);
    }
  }
  if (doc.contains("target") && doc.at("target").is_object()) doc["target"] = resolve(doc.at("target"), depth + 1);
  return doc;
}

Json Workspace::load(const std::string& ref) const { return resolve(load_raw(ref)); }

// ---------------------------------------------------------------------------
// Document

bool Document::lie() const { return is_lie_algebra(field(json, "algebra")); }

LtsStructure Document::lts() const { return lts_from_json(field(json, "algebra")); }

LieStructure Document::lie_algebra() const {
  if (!lie()) throw Error(ErrorCode::InvalidInput, "document algebra is not a Lie algebra");
  return lie_from_json(field(json, "algebra"));
}

LtsRepPair Document::lts_pair() const {
  if (lie()) return lts_rep_from_lie(lie_pair());
  const LtsStructure a = lts();
  if (has("representation")) return lts_rep_from_json(a, json.at("representation"));
  return adjoint_rep(a);
}

LieRepPair Document::lie_pair() const {
  const LieStructure g = lie_algebra();
  if (has("representation")) return lie_rep_from_json(g, json.at("representation"));
  return LieRepresentation::adjoint(g);
}

Matrix Document::matrix(const char* key) const { return matrix_from_json(field(json, key)); }

OOperator Document::o_operator() const { return OOperator{lts_pair(), matrix("operator")}; }

Bivector Document::bivector() const { return bivector_from_json(field(json, "bivector")); }

std::vector<Matrix> Document::matrices(const char* key) const {
  std::vector<Matrix> out;
  if (!has(key)) return out;
  const Json& list = json.at(key);
  if (!list.is_array()) bad(std::string("\"") + key + "\" must be an array of matrices");
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  return out;
}

DeformationSeries Document::series(const char* key) const { return DeformationSeries{o_operator(), matrices(key)}; }

OOperatorMorphism Document::morphism() const {
  const OOperator source = o_operator();
  Json target = field(json, "target");
  for (const char* key : {"algebra", "representation"})
    if (!target.contains(key) && json.contains(key)) target[key] = json.at(key);
  const Document t{target};
  return OOperatorMorphism{source, t.o_operator(), matrix("phi"), matrix("psi")};
}

PreLts Document::prelts() const { return prelts_from_json(field(json, "prelts")); }

Cochain Document::cochain() const { return cochain_from_json(field(json, "cochain")); }

LieCochain Document::lie_cochain() const {
  const Json& c = field(json, "cochain");
  if (c.contains("alternating") && c.at("alternating") == true) return lie_cochain_from_json(c);
  return LieCochain::from_cochain(cochain_from_json(c));
}

}  // namespace triplekit::io
