#pragma once

#include <vector>

#include "crtube/linalg.hpp"
#include "crtube/polynomial.hpp"

namespace crtube {

/// Structure constants c^k_ij of a Lie algebra on a fixed basis, so that
/// [e_i, e_j] = sum_k c^k_ij e_k. Antisymmetry and the Jacobi identity are
/// checked on construction (exactly, or within tol in numeric mode).
class StructureConstants {
 public:
  StructureConstants() = default;
  /// table[(i * m + j) * m + k] = c^k_ij.
  StructureConstants(std::size_t dim, std::vector<Scalar> table, double tol = kDefaultTol);

  /// Constants of the span of `basis` under the holomorphic field bracket.
  /// Throws InconsistencyError if some bracket leaves the span.
  static StructureConstants from_fields(const std::vector<HolField>& basis, double tol = kDefaultTol);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  double tol() const { return tol_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// ad(e_i) with entries ad(e_i)_{k,j} = c^k_ij.
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& x) const;
  /// Largest |[[x,y],z] + [[y,z],x] + [[z,x],y]| over basis triples.
  double jacobi_residual() const;

 private:
  std::size_t dim_ = 0;
  Mode mode_ = Mode::exact;
  double tol_ = kDefaultTol;
  std::vector<Scalar> table_;
};

/// Coordinates of f in the span of basis, or nullopt when f is outside it.
std::optional<Vector> field_coordinates(const std::vector<HolField>& basis, const HolField& f, double tol = kDefaultTol);

}  // namespace crtube
