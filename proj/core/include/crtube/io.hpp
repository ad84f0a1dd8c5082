#pragma once

#include <string>

#include <json.hpp>

#include "crtube/catalog.hpp"
#include "crtube/endo_cone.hpp"
#include "crtube/hol_solver.hpp"
#include "crtube/lie_analysis.hpp"
#include "crtube/nondegeneracy.hpp"
#include "crtube/presentation.hpp"

namespace crtube::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "crtube-report/1";

/// Scalars are read from "p/q" strings, JSON integers (exact) or JSON
/// floats and decimal strings (numeric).
Scalar parse_scalar(const Json& j, const std::string& path);
Vector parse_vector(const Json& j, const std::string& path, std::size_t expected_size = 0);
Matrix parse_matrix(const Json& j, const std::string& path, std::size_t rows = 0, std::size_t cols = 0);

/// {"kind": "orbit" | "levelset", "n", "generators": [{"linear", "const"}],
///  "base_point", "poly": [{"exps", "coeff"}]}.
Presentation parse_presentation(const Json& j);
Presentation load_presentation(const std::string& path);
Json load_json(const std::string& path);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Complex& z);
Json to_json(const Presentation& p);
Json to_json(const Inertia& i);
Json to_json(const NondegeneracyResult& r);
Json to_json(const MinimalityReport& r);
Json to_json(const PolyField& f);
Json to_json(const GradedLieAlgebra& g);
Json to_json(const StructureConstants& c);
Json to_json(const CanonicalTriple& t);
Json to_json(const InvariantReport& r);
Json to_json(const Comparison& c);
Json to_json(const HolPrediction& p);
Json to_json(const EoResult& r);
Json to_json(const CandidateVerification& v);
Json to_json(const Ledger& l);

}  // namespace crtube::io
