#include "triplekit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "triplekit/error.hpp"
#include "triplekit/io.hpp"

namespace triplekit::cli {

namespace {

using io::Json;

struct Options {
  std::string ref;
  std::string kind;
  std::string flavor = "yamaguti";
  std::string output = "json";
  std::string candidates = "basis";
  std::size_t degree = 1;
  std::size_t order = 3;
  bool on_operator = false;
};

void print_text(const Report& r, std::ostream& out) {
  out << r.subject() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& v : r.verdicts()) {
    out << "  " << v.name << ": " << (v.passed ? "pass" : "fail") << " (" << v.checked << " checked)\n";
    if (v.witness) {
      out << "    witness (";
      for (std::size_t i = 0; i < v.witness->indices.size(); ++i) out << (i ? "," : "") << v.witness->indices[i];
      out << ") lhs=[";
      for (std::size_t i = 0; i < v.witness->lhs.size(); ++i) out << (i ? "," : "") << format_scalar(v.witness->lhs[i]);
      out << "] rhs=[";
      for (std::size_t i = 0; i < v.witness->rhs.size(); ++i) out << (i ? "," : "") << format_scalar(v.witness->rhs[i]);
      out << "]\n";
    }
  }
}

void print_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      print_text(v, out, indent + "  ");
    } else if (v.is_string()) {
      out << indent << k << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << k << ": " << v.dump() << "\n";
    }
  }
}

int emit_report(const Report& r, const Options& o, std::ostream& out, Json extra = Json::object()) {
  if (o.output == "text") {
    print_text(r, out);
    if (!extra.empty()) print_text(extra, out);
  } else {
    Json j = io::to_json(r);
    for (auto& [k, v] : extra.items()) j[k] = v;
    out << io::dump(j);
  }
  return r.passed() ? 0 : 1;
}

int emit_json(const Json& j, const Options& o, std::ostream& out, int code) {
  if (o.output == "text") print_text(j, out);
  else out << io::dump(j);
  return code;
}

io::Document load(const Options& o) { return io::Document{io::Workspace().load(o.ref)}; }

int cmd_verify(const Options& o, std::ostream& out) {
  const io::Document d = load(o);
  const std::string& k = o.kind;
  if (k == "lts") return emit_report(check_lts_axioms(d.lts()), o, out);
  if (k == "lie") return emit_report(check_lie_axioms(d.lie_algebra()), o, out);
  if (k == "rep") return emit_report(d.lie() ? check_lie_rep(d.lie_pair()) : check_rep_axioms(d.lts_pair()), o, out);
  if (k == "rb") return emit_report(check_rota_baxter(d.lts(), d.matrix()), o, out);
  if (k == "o-op") {
    if (d.lie()) return emit_report(check_lie_o_operator(d.lie_pair(), d.matrix()), o, out);
    return emit_report(check_o_operator(d.o_operator()), o, out);
  }
  if (k == "nijenhuis") return emit_report(check_nijenhuis_operator({d.lts(), d.matrix()}), o, out);
  if (k == "prelts") {
    const PreLts p = d.has("prelts") ? d.prelts() : induced_prelts(d.o_operator());
    return emit_report(check_prelts_axioms(p), o, out);
  }
  if (k == "morphism") return emit_report(check_o_morphism(d.morphism()), o, out);
  throw Error(ErrorCode::InvalidInput, "unknown kind \"" + k + "\"");
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  if (o.degree % 2 == 0) throw Error(ErrorCode::EvenDegree, "odd degrees only");
  const io::Document d = load(o);
  CohomologyReport r;
  if (o.flavor == "yamaguti") r = yamaguti_cohomology(d.lts_pair(), o.degree);
  else if (o.flavor == "o-operator") r = o_operator_cohomology(d.o_operator(), o.degree);
  else throw Error(ErrorCode::InvalidInput, "unknown flavor \"" + o.flavor + "\"");
  Json j = io::to_json(r);
  j["flavor"] = o.flavor;
  return emit_json(j, o, out, 0);
}

EquivalencePair equivalence_pair(const io::Document& d) {
  return EquivalencePair{d.has("bivector") ? d.bivector() : Bivector(d.lts().dim()), d.matrices("higher_phi"),
                         d.matrices("higher_psi")};
}

int cmd_deform(const std::string& sub, const Options& o, std::ostream& out) {
  const io::Document d = load(o);
  if (sub == "check") {
    DeformationSeries s = d.series();
    s.coefficients.resize(std::max(o.order, s.coefficients.size()), Matrix(s.base.matrix.rows(), s.base.matrix.cols()));
    s.coefficients.resize(o.order);
    return emit_report(check_formal(s), o, out);
  }
  if (sub == "equivalence") {
    return emit_report(check_equivalence(d.o_operator(), d.series("series"), d.series("series2"), d.bivector()), o, out);
  }
  if (sub == "nijenhuis") {
    const NijenhuisElementReport r = check_nijenhuis_element(d.o_operator(), d.bivector());
    return emit_report(r.report, o, out, Json{{"member", r.member()}});
  }
  if (sub == "rigidity") {
    const OOperator t = d.o_operator();
    std::vector<Bivector> cands;
    if (o.candidates == "basis") {
      cands = Bivector::basis(t.pair.dim());
    } else if (o.candidates == "document") {
      if (!d.has("candidates") || !d.json.at("candidates").is_array()) {
        throw Error(ErrorCode::ParseError, "document has no \"candidates\" array");
      }
      for (const auto& c : d.json.at("candidates")) cands.push_back(io::bivector_from_json(c));
    } else if (o.candidates == "none") {
    } else {
      throw Error(ErrorCode::InvalidInput, "--candidates must be basis, document or none");
    }
    const RigidityCertificate c = rigidity_certificate(t, cands);
    Json extra{{"certified", c.certified},    {"dim_cocycles", c.dim_cocycles}, {"dim_span", c.dim_span},
               {"codimension", c.codimension}, {"members", c.members},          {"scope", c.scope}};
    emit_report(c.report, o, out, extra);
    return c.certified ? 0 : 1;
  }
  if (sub == "trivial") return emit_report(check_trivial_deformation(d.o_operator(), d.series(), equivalence_pair(d)), o, out);
  throw Error(ErrorCode::InvalidInput, "unknown deform subcommand \"" + sub + "\"");
}

int cmd_bridge(const std::string& sub, const Options& o, std::ostream& out) {
  const io::Document d = load(o);
  const LieRepPair p = d.lie_pair();
  if (sub == "from-lie") {
    const LtsRepPair r = lts_rep_from_lie(p);
    Json doc{{"algebra", io::to_json(r.algebra())}, {"representation", io::to_json(r)}};
    if (d.has("operator")) doc["operator"] = io::to_json(transfer_o_operator(p, d.matrix()).op.matrix);
    return emit_json(doc, o, out, check_rep_axioms(r).passed() ? 0 : 1);
  }
  if (sub == "transfer-cocycle") {
    const LieCochain f = d.lie_cochain();
    if (f.degree() != 1 && f.degree() != 2) throw Error(ErrorCode::InvalidInput, "cochain degree must be 1 or 2");
    TransferredCochain t;
    if (o.on_operator) {
      t = f.degree() == 1 ? transfer_T_1cocycle(p, d.matrix(), f) : transfer_T_2cocycle(p, d.matrix(), f);
    } else {
      t = f.degree() == 1 ? transfer_1cocycle(p, f) : transfer_2cocycle(p, f);
    }
    return emit_report(t.report, o, out, Json{{"cochain", io::to_json(t.cochain)}});
  }
  throw Error(ErrorCode::InvalidInput, "unknown bridge subcommand \"" + sub + "\"");
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::EvenDegree:
    case ErrorCode::AmbientMismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Lie triple systems, O-operators and their cohomology", "triplekit"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* c) {
    c->add_option("target", o.ref, "fixture name or JSON file")->required();
    c->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* verify = app.add_subcommand("verify", "check the axioms or identity of a document");
  add_common(verify);
  verify->add_option("--kind", o.kind, "lts|lie|rep|rb|o-op|nijenhuis|prelts|morphism")
      ->required()
      ->check(CLI::IsMember({"lts", "lie", "rep", "rb", "o-op", "nijenhuis", "prelts", "morphism"}));

  auto* coh = app.add_subcommand("cohomology", "dimensions of cocycles, coboundaries and cohomology");
  add_common(coh);
  coh->add_option("--flavor", o.flavor, "yamaguti or o-operator");
  coh->add_option("--degree", o.degree, "odd degree")->required();

  auto* deform = app.add_subcommand("deform", "deformations of an O-operator");
  deform->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> deform_subs;
  for (const char* name : {"check", "equivalence", "nijenhuis", "rigidity", "trivial"}) {
    auto* s = deform->add_subcommand(name);
    add_common(s);
    deform_subs.emplace_back(name, s);
  }
  deform_subs[0].second->add_option("--order", o.order, "truncation order");
  deform_subs[3].second->add_option("--candidates", o.candidates, "basis, document or none");

  auto* bridge = app.add_subcommand("bridge", "from Lie algebras to Lie triple systems");
  bridge->require_subcommand(1);
  auto* from_lie = bridge->add_subcommand("from-lie");
  add_common(from_lie);
  auto* transfer = bridge->add_subcommand("transfer-cocycle");
  add_common(transfer);
  transfer->add_flag("--on-operator", o.on_operator, "transfer a cocycle of the document's O-operator");

  auto* list = app.add_subcommand("fixtures", "list built-in fixtures");
  list->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      if (o.output == "json") {
        out << io::dump(Json{{"fixtures", io::fixture_names()}});
      } else {
        for (const auto& n : io::fixture_names()) out << n << "\n";
      }
      return 0;
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (coh->parsed()) return cmd_cohomology(o, out);
    if (deform->parsed()) {
      for (const auto& [name, s] : deform_subs)
        if (s->parsed()) return cmd_deform(name, o, out);
    }
    if (from_lie->parsed()) return cmd_bridge("from-lie", o, out);
    if (transfer->parsed()) return cmd_bridge("transfer-cocycle", o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace triplekit::cli
