#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "crtube/catalog.hpp"
#include "crtube/endo_cone.hpp"
#include "crtube/errors.hpp"
#include "crtube/io.hpp"
#include "crtube/lie_analysis.hpp"
#include "crtube/nondegeneracy.hpp"

namespace crtube::cli {

namespace {

using io::Json;

AssembleOptions assemble_options(const RunConfig& c) {
  AssembleOptions o;
  o.solve.backend = c.backend;
  o.solve.tol = c.tol;
  o.solve.seed = c.seed;
  o.max_degree = c.max_degree;
  o.nondeg.max_k = c.max_k;
  o.nondeg.tol = c.tol;
  o.nondeg.seed = c.seed;
  return o;
}

Json config_json(const RunConfig& c) {
  return Json{{"backend", to_string(c.backend)},
              {"tol", c.tol},
              {"max_degree", c.max_degree},
              {"max_k", c.max_k == 0 ? Json("n") : Json(c.max_k)},
              {"seed", c.seed}};
}

std::string dims(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string nondeg_line(const NondegeneracyResult& r) {
  std::string s = r.kind == NondegKind::order ? "order " + std::to_string(r.order) : to_string(r.kind);
  s += " [" + r.certificate;
  if (!r.dims.empty()) s += ", kernel dims " + dims(r.dims);
  s += "]";
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

/// Output of one command before it is written out.
struct Outcome {
  Json result = Json::object();
  std::string text;
  ExitCode code = ExitCode::ok;
};

Outcome analyze(const RunConfig& c) {
  if (c.inputs.size() != 1) throw InputError("cli", "analyze takes one presentation file");
  Presentation p = io::load_presentation(c.inputs[0]);
  const Vector& a = base_point(p);
  NondegOptions no = assemble_options(c).nondeg;
  const std::size_t t = tangent_space(p, a, c.tol).dim();
  const std::size_t k = levi_kernel(p, a, c.tol).dim();
  const bool conical = is_conical(p, c.tol, no.samples, c.seed);
  MinimalityReport mr = minimality_report(p, a, c.tol);
  NondegeneracyResult nd = nondegeneracy_order(p, a, no);
  Outcome o;
  o.result = Json{{"presentation", kind_name(p)},
                  {"n", ambient_dim(p)},
                  {"tangent_dim", t},
                  {"levi_kernel_dim", k},
                  {"conical", conical},
                  {"minimality", io::to_json(mr)},
                  {"nondegeneracy", io::to_json(nd)}};
  std::ostringstream os;
  os << "presentation: " << kind_name(p) << ", n = " << ambient_dim(p) << "\n"
     << "tangent dim: " << t << "\n"
     << "Levi kernel dim: " << k << "\n"
     << "conical: " << yes_no(conical) << "\n"
     << "minimality: " << to_string(mr.verdict) << "\n"
     << "nondegeneracy: " << nondeg_line(nd) << "\n";
  o.text = os.str();
  return o;
}

struct HolRun {
  Presentation p;
  GradedLieAlgebra g;
  InvariantReport inv;
  bool homogeneous;
};

HolRun compute_hol(const RunConfig& c, const std::string& path) {
  Presentation p = io::load_presentation(path);
  GradedLieAlgebra g = assemble_hol(p, assemble_options(c));
  InvariantReport inv = invariant_report(g);
  const std::size_t dim_m = tangent_space(p, base_point(p), c.tol).dim() + ambient_dim(p);
  const bool homogeneous = g.dim() >= dim_m;
  return HolRun{std::move(p), std::move(g), std::move(inv), homogeneous};
}

std::string invariant_text(const InvariantReport& inv) {
  std::ostringstream os;
  os << "derived series: " << dims(inv.derived.dims) << (inv.derived.solvable ? " (solvable)" : " (not solvable)") << "\n"
     << "Killing inertia: +" << inv.killing.plus << " -" << inv.killing.minus << " 0:" << inv.killing.zero << "\n";
  if (inv.sigma) os << "sigma: " << to_string(*inv.sigma) << "\n";
  return os.str();
}

Outcome hol(const RunConfig& c) {
  if (c.inputs.size() != 1) throw InputError("cli", "hol takes one presentation file");
  HolRun h = compute_hol(c, c.inputs[0]);
  Outcome o;
  o.result = Json{{"hol", io::to_json(h.g)},
                  {"invariants", io::to_json(h.inv)},
                  {"locally_homogeneous", h.homogeneous}};
  std::ostringstream os;
  os << "backend: " << to_string(h.g.backend) << "\n"
     << "graded dims: " << dims(h.g.graded_dims()) << ", total " << h.g.dim() << " (g_" << h.g.stopped_at << " = 0)\n";
  os << "checks:";
  for (const auto& s : h.g.checks) os << " " << s;
  os << "\n" << invariant_text(h.inv);
  if (!h.homogeneous) os << "flag: not locally homogeneous\n";
  o.text = os.str();
  return o;
}

Outcome compare(const RunConfig& c) {
  if (c.inputs.size() != 2) throw InputError("cli", "compare takes two presentation files");
  HolRun a = compute_hol(c, c.inputs[0]);
  HolRun b = compute_hol(c, c.inputs[1]);
  Comparison cmp = compare_algebras(a.inv, b.inv);
  Outcome o;
  o.result = Json{{"a", io::to_json(a.inv)}, {"b", io::to_json(b.inv)}, {"comparison", io::to_json(cmp)}};
  std::ostringstream os;
  os << to_string(cmp) << "\n";
  for (std::size_t i = 0; i < cmp.reasons.size(); ++i) os << "  " << cmp.reasons[i] << ": " << cmp.details[i] << "\n";
  o.text = os.str();
  return o;
}

Vector parse_point(const std::string& s) {
  Vector v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t[");
    auto e = tok.find_last_not_of(" \t]");
    if (b == std::string::npos) throw InputError("cli", "empty coordinate in --a");
    v.push_back(Scalar::parse(tok.substr(b, e - b + 1)));
  }
  if (v.empty()) throw InputError("cli", "--a needs comma-separated coordinates");
  return v;
}

Outcome endocone(const RunConfig& c) {
  if (c.phi_path.empty() || c.a.empty()) throw InputError("cli", "endocone needs --phi, --d and --a");
  Json pj = io::load_json(c.phi_path);
  const Json& mj = pj.is_object() && pj.contains("phi") ? pj["phi"] : pj;
  Matrix phi = io::parse_matrix(mj, c.phi_path);
  EndoCone ec(phi, c.d, parse_point(c.a));
  Outcome o;
  Json r;
  r["n"] = ec.n();
  r["d"] = ec.d();
  const bool cyclic = is_cyclic(ec.phi(), ec.a(), c.tol);
  r["cyclic"] = cyclic;
  std::ostringstream os;
  os << "n = " << ec.n() << ", d = " << ec.d() << ", cyclic: " << yes_no(cyclic) << "\n";
  try {
    bool du = du_condition(ec.phi(), ec.d());
    r["du_condition"] = du;
    os << "eigenvalue-difference condition: " << (du ? "holds" : "fails") << "\n";
  } catch (const InputError& e) {
    r["du_condition"] = nullptr;
    r["du_note"] = e.what();
    os << "eigenvalue-difference condition: not applicable (" << e.what() << ")\n";
  }
  HolPrediction pred = predicted_hol(ec, c.tol);
  r["predicted_hol"] = io::to_json(pred);
  if (pred.applicable)
    os << "predicted hol: dims " << dims(pred.dims) << ", total " << pred.total << "\n";
  else
    os << "predicted hol: not applicable (" << pred.reason << ")\n";
  try {
    int cr = cr_dimension(ec, c.tol);
    r["cr_dimension"] = cr;
    os << "CR dimension: " << cr << "\n";
  } catch (const RefusalError& e) {
    r["cr_dimension"] = nullptr;
    r["cr_dimension_note"] = e.what();
    os << "CR dimension: refused (" << e.what() << ")\n";
  }
  Presentation p = ec.presentation();
  NondegeneracyResult nd = nondegeneracy_order(p, ec.a(), assemble_options(c).nondeg);
  r["nondegeneracy"] = io::to_json(nd);
  os << "nondegeneracy: " << nondeg_line(nd) << "\n";
  if (cyclic) {
    SolveOptions so = assemble_options(c).solve;
    std::vector<Matrix> g0;
    for (const auto& f : solve_component(p, 0, so).basis) g0.push_back(linear_part(f));
    EoResult eo = eo_linearized(ec, g0, c.tol);
    r["stabilizer_check"] = io::to_json(eo);
    os << "linearized stabilizer: " << to_string(eo.verdict) << " (" << eo.note << ")\n";
  }
  o.result = r;
  o.text = os.str();
  return o;
}

std::string ledger_text(const Ledger& l) {
  std::ostringstream os;
  os << l.entry << ": " << (l.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& r : l.rows)
    os << "  [" << (r.pass ? "ok" : "FAIL") << "] " << r.name << ": expected " << r.expected << ", got " << r.actual << "\n";
  for (const auto& f : l.flags) os << "  flag: " << f << "\n";
  if (l.sigma) os << "  sigma: " << *l.sigma << "\n";
  if (!l.error.empty()) os << "  error: " << l.error << "\n";
  return os.str();
}

Outcome catalog(const RunConfig& c) {
  Outcome o;
  RunOptions ro;
  ro.assemble = assemble_options(c);
  if (c.subcommand == "list") {
    Json entries = Json::array();
    std::ostringstream os;
    for (const auto& name : default_entry_names()) {
      CatalogEntry e = build_entry_from_name(name);
      entries.push_back(Json{{"name", e.name}, {"family", e.family}, {"presentation", kind_name(e.presentation)}});
      os << e.name << "  (" << kind_name(e.presentation) << ", n = " << ambient_dim(e.presentation) << ")\n";
    }
    o.result = Json{{"entries", entries}, {"families", family_names()}};
    o.text = os.str();
    return o;
  }
  std::vector<CatalogEntry> entries;
  if (c.subcommand == "run") {
    if (c.inputs.size() != 1) throw InputError("cli", "catalog run takes one entry name");
    if (c.p || c.q || c.alpha) {
      CatalogParams params;
      params.p = c.p;
      params.q = c.q;
      if (c.alpha) {
        Scalar a = Scalar::parse(*c.alpha);
        if (!a.is_exact()) throw InputError("cli", "--alpha must be rational");
        params.alpha = a.rational();
      }
      entries.push_back(build_entry(c.inputs[0], params));
    } else {
      entries.push_back(build_entry_from_name(c.inputs[0]));
    }
  } else if (c.subcommand == "run-all") {
    for (const auto& name : default_entry_names()) entries.push_back(build_entry_from_name(name));
  } else {
    throw InputError("cli", "catalog needs one of: list, run, run-all");
  }
  Json ledgers = Json::array();
  std::string text;
  std::size_t failed = 0;
  for (const auto& e : entries) {
    Ledger l = run_expected_checks(e, ro);
    if (!l.passed()) ++failed;
    ledgers.push_back(io::to_json(l));
    text += ledger_text(l);
  }
  text += std::to_string(entries.size() - failed) + "/" + std::to_string(entries.size()) + " ledgers pass\n";
  o.result = Json{{"ledgers", ledgers}, {"passed", entries.size() - failed}, {"failed", failed}};
  o.text = text;
  if (failed) o.code = ExitCode::check_failed;
  return o;
}

}  // namespace

ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome o;
  std::string status = "ok";
  std::string message;
  try {
    if (config.command == "analyze")
      o = analyze(config);
    else if (config.command == "hol")
      o = hol(config);
    else if (config.command == "compare")
      o = compare(config);
    else if (config.command == "endocone")
      o = endocone(config);
    else if (config.command == "catalog")
      o = catalog(config);
    else
      throw InputError("cli", "unknown command '" + config.command + "'");
    if (o.code == ExitCode::check_failed) status = "check_failed";
  } catch (const InputError& e) {
    o.code = ExitCode::input_error;
    status = "input_error";
    message = e.what();
  } catch (const RefusalError& e) {
    o.code = ExitCode::input_error;
    status = "refused";
    message = e.what();
  } catch (const Error& e) {
    o.code = ExitCode::check_failed;
    status = "check_failed";
    message = e.what();
  }
  if (config.json) {
    Json report;
    report["schema"] = io::kSchemaVersion;
    report["command"] = config.subcommand.empty() ? config.command : config.command + " " + config.subcommand;
    report["inputs"] = config.inputs;
    report["config"] = config_json(config);
    report["status"] = status;
    if (!message.empty()) report["error"] = message;
    report["result"] = o.result;
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
  }
  if (!message.empty()) err << "error: " << message << "\n";
  return o.code;
}

}  // namespace crtube::cli
