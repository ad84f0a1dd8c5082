#include "crtube/io.hpp"

#include <fstream>
#include <sstream>

#include "crtube/errors.hpp"

namespace crtube::io {

namespace {
constexpr const char* kModule = "io";

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(kModule, path + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t parse_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

Json poly_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  return terms;
}
}  // namespace

Scalar parse_scalar(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) return Scalar(j.get<double>());
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "cannot parse number '" + j.get<std::string>() + "'");
    }
  }
  fail(path, "expected a number or a \"p/q\" string");
}

Vector parse_vector(const Json& j, const std::string& path, std::size_t expected_size) {
  if (!j.is_array()) fail(path, "expected an array");
  if (expected_size && j.size() != expected_size)
    fail(path, "expected " + std::to_string(expected_size) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_scalar(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix parse_matrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  if (rows && j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  const std::size_t c = cols ? cols : (j[0].is_array() ? j[0].size() : 0);
  if (c == 0) fail(path, "rows must be non-empty arrays");
  std::vector<Vector> r;
  for (std::size_t i = 0; i < j.size(); ++i) r.push_back(parse_vector(j[i], path + "[" + std::to_string(i) + "]", c));
  return Matrix::from_rows(r);
}

Presentation parse_presentation(const Json& j) {
  const std::string root = "$";
  const Json& kind = member(j, "kind", root);
  if (!kind.is_string()) fail(root + ".kind", "expected a string");
  const std::size_t n = parse_size(member(j, "n", root), root + ".n");
  Vector base = parse_vector(member(j, "base_point", root), root + ".base_point", n);
  const std::string k = kind.get<std::string>();
  if (k == "orbit") {
    const Json& gens = member(j, "generators", root);
    if (!gens.is_array() || gens.empty()) fail(root + ".generators", "expected a non-empty array");
    std::vector<AffineField> fields;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string path = root + ".generators[" + std::to_string(i) + "]";
      Matrix lin = parse_matrix(member(gens[i], "linear", path), path + ".linear", n, n);
      auto it = gens[i].find("const");
      Vector c = it == gens[i].end() ? Vector(n, Scalar(0)) : parse_vector(*it, path + ".const", n);
      fields.emplace_back(std::move(lin), std::move(c));
    }
    return OrbitPresentation(std::move(fields), std::move(base));
  }
  if (k == "levelset") {
    const Json& terms = member(j, "poly", root);
    if (!terms.is_array() || terms.empty()) fail(root + ".poly", "expected a non-empty array of terms");
    Poly h(n);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string path = root + ".poly[" + std::to_string(i) + "]";
      const Json& ex = member(terms[i], "exps", path);
      if (!ex.is_array() || ex.size() != n) fail(path + ".exps", "expected " + std::to_string(n) + " exponents");
      Exponent e;
      for (const auto& x : ex) {
        if (!x.is_number_integer() || x.get<int>() < 0) fail(path + ".exps", "exponents must be non-negative integers");
        e.push_back(x.get<int>());
      }
      h.add_term(e, parse_scalar(member(terms[i], "coeff", path), path + ".coeff"));
    }
    return LevelSetPresentation(std::move(h), std::move(base));
  }
  fail(root + ".kind", "expected \"orbit\" or \"levelset\", got \"" + k + "\"");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(kModule, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(kModule, path + ": malformed JSON (" + e.what() + ")");
  }
}

Presentation load_presentation(const std::string& path) {
  Json j = load_json(path);
  try {
    return parse_presentation(j);
  } catch (const InputError& e) {
    std::string msg = e.what();
    msg.erase(0, e.module().size() + 2);
    throw InputError(e.module(), path + ": " + msg);
  }
}

Json to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Presentation& p) {
  Json j;
  j["kind"] = std::holds_alternative<OrbitPresentation>(p) ? "orbit" : "levelset";
  j["n"] = ambient_dim(p);
  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    Json gens = Json::array();
    for (const auto& g : o->generators()) gens.push_back(Json{{"linear", to_json(g.linear)}, {"const", to_json(g.constant)}});
    j["generators"] = gens;
  } else {
    j["poly"] = poly_json(std::get<LevelSetPresentation>(p).poly());
  }
  j["base_point"] = to_json(base_point(p));
  return j;
}

Json to_json(const Inertia& i) { return Json{{"plus", i.plus}, {"minus", i.minus}, {"zero", i.zero}}; }

Json to_json(const NondegeneracyResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == NondegKind::order) j["order"] = r.order;
  j["max_k"] = r.max_k;
  j["kernel_dims"] = r.dims;
  j["uniform"] = r.uniform;
  j["points_checked"] = r.points_checked;
  j["certificate"] = r.certificate;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const MinimalityReport& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"not_in_hyperplane", r.not_in_hyperplane},
              {"levi_image_spans", r.levi_image_spans},
              {"hull_dim", r.hull_dim}};
}

Json to_json(const PolyField& f) {
  Json comps = Json::array();
  for (const auto& c : f.map()) comps.push_back(poly_json(c));
  return Json{{"degree", f.degree()}, {"factor", f.i_real() ? "i" : "1"}, {"components", comps}};
}

Json to_json(const StructureConstants& c) {
  Json entries = Json::array();
  const std::size_t m = c.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!c(i, j, k).is_zero()) entries.push_back(Json::array({i, j, k, to_json(c(i, j, k))}));
  return Json{{"dim", m}, {"mode", c.mode() == Mode::exact ? "exact" : "numeric"}, {"nonzero", entries}};
}

Json to_json(const GradedLieAlgebra& g) {
  Json j;
  j["backend"] = to_string(g.backend);
  j["graded_dims"] = g.graded_dims();
  j["dim"] = g.dim();
  j["stopped_at"] = g.stopped_at;
  j["euler_index"] = g.euler_index;
  Json comps = Json::array();
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    Json basis = Json::array();
    for (const auto& f : g.components[c]) basis.push_back(to_json(f));
    comps.push_back(Json{{"degree", static_cast<int>(c) - 1}, {"basis", basis}});
  }
  j["components"] = comps;
  j["structure_constants"] = to_json(g.constants);
  j["checks"] = g.checks;
  return j;
}

Json to_json(const CanonicalTriple& t) {
  Json a = Json::array();
  for (const auto& z : t.values) a.push_back(to_json(z));
  return a;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["derived_dims"] = r.derived.dims;
  j["solvable"] = r.derived.solvable;
  j["killing"] = to_json(r.killing);
  j["graded_dims"] = r.graded_dims ? Json(*r.graded_dims) : Json(nullptr);
  j["sigma"] = r.sigma ? to_json(*r.sigma) : Json(nullptr);
  return j;
}

Json to_json(const Comparison& c) {
  Json j;
  j["verdict"] = c.distinct ? "distinct" : "indistinguishable_by_suite";
  j["reasons"] = c.reasons;
  j["details"] = c.details;
  return j;
}

Json to_json(const HolPrediction& p) {
  Json j{{"applicable", p.applicable}};
  if (p.applicable) {
    j["graded_dims"] = p.dims;
    j["total"] = p.total;
    j["isotropy_trivial"] = p.aut_trivial;
  } else {
    j["reason"] = p.reason;
  }
  return j;
}

Json to_json(const EoResult& r) {
  return Json{{"verdict", to_string(r.verdict)}, {"solution_dim", r.solution_dim}, {"note", r.note}};
}

Json to_json(const CandidateVerification& v) {
  Json j;
  j["points"] = v.points;
  j["max_residual"] = v.max_residual;
  j["bracket_closed"] = v.closed;
  if (!v.closed) j["closure_error"] = v.closure_error;
  Json spec = Json::array();
  if (!v.grading_spectrum_exact.empty())
    for (const auto& q : v.grading_spectrum_exact) spec.push_back(q.get_str());
  else
    for (const auto& z : v.grading_spectrum) spec.push_back(to_json(z));
  j["grading_spectrum"] = spec;
  j["derived_dims"] = v.derived.dims;
  j["completeness"] = v.completeness;
  return j;
}

Json to_json(const Ledger& l) {
  Json j;
  j["entry"] = l.entry;
  j["passed"] = l.passed();
  Json rows = Json::array();
  for (const auto& r : l.rows) {
    Json row{{"check", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}};
    if (!r.note.empty()) row["provenance"] = r.note;
    rows.push_back(row);
  }
  j["checks"] = rows;
  j["nondegeneracy"] = to_json(l.nondeg);
  if (l.algebra) j["hol"] = Json{{"graded_dims", l.algebra->graded_dims()}, {"dim", l.algebra->dim()},
                                 {"backend", to_string(l.algebra->backend)}};
  if (l.invariants) j["invariants"] = to_json(*l.invariants);
  if (l.verification) j["verification"] = to_json(*l.verification);
  j["flags"] = l.flags;
  if (!l.error.empty()) j["error"] = l.error;
  return j;
}

}  // namespace crtube::io
