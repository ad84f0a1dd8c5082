#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crtube/nondegeneracy.hpp"
#include "crtube/presentation.hpp"
#include "crtube/structure_constants.hpp"

namespace crtube {

enum class Backend { automatic, exact_levelset, exact_jet, numeric };
/// "auto", "exact-levelset", "exact-jet", "numeric".
std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

struct SolveOptions {
  Backend backend = Backend::automatic;
  double tol = kDefaultTol;
  std::uint64_t seed = 42;
  /// Jet truncation: start at k + 3, raise by jet_step, give up above jet_cap.
  int jet_step = 2;
  int jet_cap = 24;
  /// Fresh points used to confirm a stabilized jet solution.
  std::size_t verify_points = 16;
  /// Numeric backend: rows >= oversample * unknowns.
  double oversample = 4.0;
};

/// Homogeneous field of grading degree k: xi = i^(k mod 2) q(z) dz with q a
/// real polynomial map, homogeneous of degree k + 1 (k = -1: constant).
class PolyField {
 public:
  PolyField(int degree, PolyMap q);

  int degree() const { return degree_; }
  /// True for odd k (including k = -1).
  bool i_real() const { return degree_ % 2 != 0; }
  const PolyMap& map() const { return q_; }
  std::size_t n() const { return q_.size(); }
  Mode mode() const;
  HolField to_hol() const;

 private:
  int degree_;
  PolyMap q_;
};

/// g_0 fields are linear: z -> M z. Returns M.
Matrix linear_part(const PolyField& f);

/// Resolves `automatic` and rejects backends that do not apply to p.
Backend resolve_backend(const Presentation& p, Backend requested);

/// n * C(n + k, k + 1): real coefficients of a degree k + 1 map.
std::size_t unknown_count(std::size_t n, int k);

/// Exact conditions dh . d^beta f = 0 mod (h), one row per monomial of the normal form.
Matrix levelset_system(const LevelSetPresentation& p, int k);
/// Sampled conditions at the given points (normal covectors from dh or from
/// the generator frame).
Matrix numeric_system(const Presentation& p, int k, const std::vector<Vector>& points, double tol = kDefaultTol);
/// Coefficient conditions of the orbit parametrization truncated at `order`.
Matrix jet_system(const OrbitPresentation& p, int k, int order);

/// Fields q_p = sum_alpha v[(p, alpha)] x^alpha for each kernel vector.
std::vector<PolyField> fields_from_kernel(std::size_t n, int k, const std::vector<Vector>& kernel);

/// Largest relative normal component of d^beta q(x) over the conditions for degree k.
double tangency_residual(const Presentation& p, const PolyField& f, const Vector& x, double tol = kDefaultTol);

struct ComponentResult {
  int degree = 0;
  std::vector<PolyField> basis;
  Backend backend = Backend::automatic;
  std::size_t unknowns = 0;
  std::size_t rows = 0;
  /// exact_jet: accepted truncation order and (order, kernel dim) history.
  int jet_order = 0;
  std::vector<std::pair<int, std::size_t>> jet_history;
};

ComponentResult solve_component(const Presentation& p, int k, const SolveOptions& opt = {});
std::vector<PolyField> solve_graded_component(const Presentation& p, int k, const SolveOptions& opt = {});

struct GradedLieAlgebra {
  std::size_t n = 0;
  /// components[k + 1] is a basis of g_k.
  std::vector<std::vector<PolyField>> components;
  std::vector<HolField> basis;
  std::vector<int> basis_degree;
  /// Position of z dz in the concatenated basis.
  std::size_t euler_index = 0;
  StructureConstants constants;
  Backend backend = Backend::automatic;
  /// First k >= 1 with g_k = 0.
  int stopped_at = 0;
  std::vector<std::string> checks;

  std::vector<std::size_t> graded_dims() const;
  std::size_t dim() const { return basis.size(); }
  Mode mode() const { return constants.mode(); }
  /// Indices of basis elements of degree k.
  std::vector<std::size_t> indices_of_degree(int k) const;
};

struct AssembleOptions {
  SolveOptions solve;
  int max_degree = 6;
  NondegOptions nondeg;
};

/// Refuses non-conical input and input without a finite order and a minimal
/// verdict. Solves g_-1, g_0, g_1, ... until the first k >= 1 with g_k = 0.
GradedLieAlgebra assemble_hol(const Presentation& p, const AssembleOptions& opt = {});

/// Coordinates of [a, b] in the algebra basis; throws on a closure violation.
Vector bracket_in_basis(const GradedLieAlgebra& g, const HolField& a, const HolField& b);

}  // namespace crtube
