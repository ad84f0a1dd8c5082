#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crtube/hol_solver.hpp"
#include "crtube/lie_analysis.hpp"
#include "crtube/nondegeneracy.hpp"

namespace crtube {

struct CatalogParams {
  std::optional<int> p;
  std::optional<int> q;
  std::optional<Rational> alpha;
};

/// Expected values; unset fields are not checked. `notes` holds one
/// provenance line per key.
struct Expected {
  std::optional<int> nondeg_order;
  std::optional<std::vector<std::size_t>> graded_dims;
  std::optional<std::size_t> algebra_dim;
  std::optional<bool> solvable;
  std::optional<std::size_t> commutator_dim;
  std::optional<std::vector<std::size_t>> derived_dims;
  std::optional<bool> killing_nondegenerate;
  std::optional<Inertia> killing_inertia;
  /// "non-real", "real-distinct", "real-repeated" or "none".
  std::optional<std::string> sigma_class;
  std::optional<bool> locally_homogeneous;
  /// EV: sorted spectrum of ad(grading field).
  std::optional<std::vector<Rational>> grading_spectrum;
  std::vector<std::pair<std::string, std::string>> notes;
  std::string note(const std::string& key) const;
};

/// Point with an expected Levi kernel dimension.
struct KernelWitness {
  Vector point;
  std::size_t kernel_dim = 0;
  std::string label;
};

struct CatalogEntry {
  CatalogEntry(std::string name, std::string family, Presentation presentation);

  std::string name;
  std::string family;
  Presentation presentation;
  /// Non-conical entries: candidate algebra checked by containment only.
  std::vector<HolField> candidate_fields;
  std::size_t grading_index = 0;
  std::vector<KernelWitness> witnesses;
  Expected expected;
  bool verification_only() const { return !candidate_fields.empty(); }
};

/// Families: EI, EY (alpha > 0), EZ, EX (alpha < -1), EV, EB (p >= q >= 0,
/// p + q >= 3, integer alpha >= 2).
CatalogEntry build_entry(const std::string& family, const CatalogParams& params = {});
/// Accepts "EY", "EY(1/2)", "EX(-3)", "EB(2,1,3)" and similar.
CatalogEntry build_entry_from_name(const std::string& name);
/// The shipped set run by `catalog run-all`.
std::vector<std::string> default_entry_names();
std::vector<std::string> family_names();

/// delta plus so(p, q) acting on x^T diag(eps) x = 0, through base point a.
OrbitPresentation quadric_orbit(int p, int q, const Vector& a);
/// Killing inertia of so(a, b): (a b, C(a,2) + C(b,2), 0).
Inertia so_killing_inertia(int a, int b);
/// "non-real", "real-distinct" or "real-repeated".
std::string sigma_class(const CanonicalTriple& t, double tol = 1e-6);

struct CandidateVerification {
  std::size_t points = 0;
  double max_residual = 0.0;
  bool closed = false;
  std::string closure_error;
  StructureConstants constants;
  std::vector<Complex> grading_spectrum;
  std::vector<Rational> grading_spectrum_exact;
  DerivedSeries derived;
  std::string completeness = "containment verified only";
};

/// Tangency of Re X(x + iy) to F at sampled x (random y), bracket closure and
/// the ad spectrum of the grading field.
CandidateVerification verify_candidates(const Presentation& p, const std::vector<HolField>& fields,
                                        std::size_t grading_index, std::size_t points, std::uint64_t seed,
                                        double tol = kDefaultTol);

struct CheckRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

struct RunOptions {
  AssembleOptions assemble;
  std::size_t verify_points = 32;
  double residual_tol = 1e-9;
};

struct Ledger {
  std::string entry;
  std::vector<CheckRow> rows;
  NondegeneracyResult nondeg;
  std::optional<GradedLieAlgebra> algebra;
  std::optional<InvariantReport> invariants;
  std::optional<CandidateVerification> verification;
  std::optional<std::string> sigma;
  std::vector<std::string> flags;
  std::string error;
  bool passed() const;
};

Ledger run_expected_checks(const CatalogEntry& entry, const RunOptions& opt = {});

}  // namespace crtube
