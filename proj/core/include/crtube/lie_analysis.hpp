#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crtube/hol_solver.hpp"
#include "crtube/structure_constants.hpp"

namespace crtube {

struct DerivedSeries {
  /// dim L, dim [L,L], ... ending at 0 or at the first repeated value.
  std::vector<std::size_t> dims;
  bool solvable = false;
  std::size_t commutator_dim() const { return dims.size() > 1 ? dims[1] : 0; }
};

DerivedSeries derived_series(const StructureConstants& l);

/// B(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const StructureConstants& l);
Inertia killing_signature(const StructureConstants& l);

/// Normal form of an unordered triple of complex numbers under
/// lambda -> r lambda + s (r real nonzero, s real): mean zero, max modulus 1
/// (or all zero), and the sign of r whose (re, im)-sorted tuple is smallest.
struct CanonicalTriple {
  std::array<Complex, 3> values{};
  bool is_real(double tol = 1e-9) const;
};

CanonicalTriple canonicalize(const std::vector<Complex>& triple);
/// Componentwise absolute comparison.
bool same_triple(const CanonicalTriple& a, const CanonicalTriple& b, double tol = 1e-6);
std::string to_string(const CanonicalTriple& t);

struct SigmaResult {
  bool applicable = false;
  std::string reason;
  /// Raw eigenvalues of ad(xi) on g_-1.
  std::vector<Complex> spectrum;
  CanonicalTriple triple;
};

/// Needs n = 3 and graded dims (3, 2). Uses the g_0 basis element after z dz
/// unless xi (coordinates in the full basis) is given.
SigmaResult sigma_invariant(const GradedLieAlgebra& g, const std::optional<Vector>& xi = std::nullopt);

struct InvariantReport {
  std::size_t dim = 0;
  DerivedSeries derived;
  Inertia killing;
  std::optional<std::vector<std::size_t>> graded_dims;
  std::optional<CanonicalTriple> sigma;
};

InvariantReport invariant_report(const StructureConstants& l);
InvariantReport invariant_report(const GradedLieAlgebra& g);

struct Comparison {
  bool distinct = false;
  /// Every separating invariant, in suite order: "dimension", "derived_series",
  /// "killing", "graded_dims", "sigma".
  std::vector<std::string> reasons;
  std::vector<std::string> details;
  bool separated_by(const std::string& r) const;
};

/// Distinct when some invariant differs; otherwise only claims that the
/// suite cannot tell the algebras apart.
Comparison compare_algebras(const InvariantReport& a, const InvariantReport& b, double sigma_tol = 1e-6);
std::string to_string(const Comparison& c);

}  // namespace crtube
