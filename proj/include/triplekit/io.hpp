#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triplekit/cohomology.hpp"
#include "triplekit/deformations.hpp"
#include "triplekit/lie_bridge.hpp"

namespace triplekit::io {

using Json = nlohmann::json;

/// Accepts "p/q" strings and JSON integers. Throws Error(ParseError).
Scalar scalar_from_json(const Json& j);
Json to_json(const Scalar& s);

/// {"cols", "entries": [[...], ...], "rows"}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Sparse vector {"index": "p/q"}; zero coordinates are omitted.
Json sparse_to_json(const Vector& v);
Vector sparse_from_json(const Json& j, std::size_t dim);

/// {"brackets": [{"args", "value"}], "dim", "type": "lts"}
Json to_json(const LtsStructure& a);
/// {"brackets": [...], "dim", "type": "lie"}
Json to_json(const LieStructure& g);
bool is_lie_algebra(const Json& j);
LtsStructure lts_from_json(const Json& j);
LieStructure lie_from_json(const Json& j);

/// {"module_dim", "theta": [{"matrix", "pair"}]}; only nonzero theta are listed.
Json to_json(const LtsRepresentation& r);
LtsRepresentation lts_rep_from_json(const LtsStructure& a, const Json& j);
/// {"module_dim", "rho": [{"index", "matrix"}]}
Json to_json(const LieRepresentation& r);
LieRepresentation lie_rep_from_json(const LieStructure& g, const Json& j);

/// {"dim", "entries": [{"pair": [i, j], "value"}]} with i < j.
Json to_json(const Bivector& x);
Bivector bivector_from_json(const Json& j);

/// {"degree", "source_dim", "target_dim", "values": [{"args", "value"}]}
Json to_json(const Cochain& f);
Cochain cochain_from_json(const Json& j);
/// Same layout with "alternating": true and increasing args only.
Json to_json(const LieCochain& f);
LieCochain lie_cochain_from_json(const Json& j);

/// {"dim", "products": [{"args", "value"}]}
Json to_json(const PreLts& p);
PreLts prelts_from_json(const Json& j);

Json to_json(const Report& r);
Json to_json(const CohomologyReport& r);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// Throws Error(ParseError) with line and column on malformed input.
Json parse(const std::string& text, const std::string& origin);

/// Names of the built-in fixtures, sorted.
std::vector<std::string> fixture_names();
std::optional<Json> builtin_fixture(const std::string& name);

/// Resolves documents by reference: a built-in fixture name, a file path,
/// or <name>.json inside the TRIPLEKIT_FIXTURES directory. String-valued
/// "algebra", "representation", "operator" and "target" fields are
/// replaced by the corresponding field of the referenced document.
class Workspace {
 public:
  Workspace();
  explicit Workspace(std::optional<std::filesystem::path> extra_dir);
  Json load(const std::string& ref) const;
  Json resolve(Json doc, int depth = 0) const;

 private:
  Json load_raw(const std::string& ref) const;
  std::optional<std::filesystem::path> extra_dir_;
};

/// Typed views of a resolved document.
struct Document {
  Json json;

  bool has(const char* key) const { return json.contains(key); }
  bool lie() const;
  LtsStructure lts() const;
  LieStructure lie_algebra() const;
  /// Representation when given, otherwise the adjoint one.
  LtsRepPair lts_pair() const;
  LieRepPair lie_pair() const;
  Matrix matrix(const char* key = "operator") const;
  OOperator o_operator() const;
  Bivector bivector() const;
  std::vector<Matrix> matrices(const char* key) const;
  DeformationSeries series(const char* key = "series") const;
  OOperatorMorphism morphism() const;
  PreLts prelts() const;
  Cochain cochain() const;
  LieCochain lie_cochain() const;
};

}  // namespace triplekit::io
