#pragma once

#include <string>
#include <vector>

#include "crtube/presentation.hpp"

namespace crtube {

/// The orbit of a under exp(span{phi^0, ..., phi^d}); always a cone.
class EndoCone {
 public:
  /// Requires n >= 3, 1 <= d <= n - 2 and a of length n.
  EndoCone(Matrix phi, int d, Vector a);

  const Matrix& phi() const { return phi_; }
  int d() const { return d_; }
  const Vector& a() const { return a_; }
  std::size_t n() const { return a_.size(); }
  /// Linear generators x -> phi^k x for k = 0..d.
  std::vector<Matrix> powers() const;
  OrbitPresentation presentation() const;

 private:
  Matrix phi_;
  int d_;
  Vector a_;
};

/// rank [a, phi a, ..., phi^(n-1) a] == n.
bool is_cyclic(const Matrix& phi, const Vector& a, double tol = kDefaultTol);

/// Delta_I = { (a_k - a_j, a_k^2 - a_j^2, ..., a_k^d - a_j^d) : k in N, j in I }.
std::vector<std::vector<Complex>> delta_set(const std::vector<Complex>& eigenvalues, const std::vector<std::size_t>& I,
                                            int d);

/// True iff the intersection of all Delta_I with #I = d + 1 is {0}.
/// Throws InputError when two eigenvalues coincide.
bool du_condition(const std::vector<Complex>& eigenvalues, int d, double tol = 1e-9);
/// Exact variant for rational spectra.
bool du_condition(const std::vector<Rational>& eigenvalues, int d);
/// Spectrum of phi: exact comparison when the characteristic polynomial
/// splits over Q, numeric matching within tol otherwise.
bool du_condition(const Matrix& phi, int d, double tol = 1e-9);

struct HolPrediction {
  bool applicable = false;
  std::string reason;
  /// dims of g_-1, g_0 (g_k = 0 for k >= 1).
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  bool aut_trivial = false;
};

HolPrediction predicted_hol(const EndoCone& ec, double tol = kDefaultTol);

enum class EoVerdict { holds_infinitesimally, inconclusive };
std::string to_string(EoVerdict v);

struct EoResult {
  EoVerdict verdict = EoVerdict::inconclusive;
  /// Dimension of {X : X a = 0, [X, phi] in span(g0)}.
  std::size_t solution_dim = 0;
  std::string note;
};

/// Linearized stability check over the given g0 (linear parts of its fields).
/// Evidence only; never a statement about the full isotropy group.
EoResult eo_linearized(const EndoCone& ec, const std::vector<Matrix>& g0_basis, double tol = kDefaultTol);

/// d + 1, cross-checked against the tangent dimension at a.
int cr_dimension(const EndoCone& ec, double tol = kDefaultTol);

}  // namespace crtube
