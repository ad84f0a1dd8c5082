#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "crtube/linalg.hpp"
#include "crtube/polynomial.hpp"

namespace crtube {

/// Affine vector field x -> linear * x + constant on R^n.
struct AffineField {
  Matrix linear;
  Vector constant;

  AffineField() = default;
  AffineField(Matrix linear_part, Vector constant_part);
  explicit AffineField(Matrix linear_part);

  std::size_t dim() const { return linear.rows(); }
  Mode mode() const;
  bool is_linear() const { return is_zero_vector(constant); }
  Vector eval(const Vector& x) const;
  /// (n+1)x(n+1) matrix [[linear, constant], [0, 0]].
  Matrix homogeneous() const;
  /// linear (row-major) followed by constant.
  Vector flatten() const;
  /// The same field as a real polynomial map.
  PolyMap as_map() const;
};

/// [X, Y] = DY . X - DX . Y.
AffineField affine_bracket(const AffineField& x, const AffineField& y);

/// F as the orbit of a Lie algebra of affine fields through a base point.
class OrbitPresentation {
 public:
  /// Checks sizes, bracket closure (exact for rational data, else within tol)
  /// and that the generators do not all vanish at the base point.
  OrbitPresentation(std::vector<AffineField> generators, Vector base_point, double tol = kDefaultTol);

  std::size_t n() const { return base_.size(); }
  const std::vector<AffineField>& generators() const { return generators_; }
  const Vector& base_point() const { return base_; }
  /// Exact iff every generator entry and the base point are rational.
  Mode mode() const;
  bool generators_exact() const;
  std::size_t orbit_dim() const { return orbit_dim_; }

  /// Matrix whose columns are g(x) for every generator g.
  Matrix evaluation(const Vector& x) const;
  /// Greedy independent subset of generators at x.
  std::vector<std::size_t> independent_generators(const Vector& x, double tol = kDefaultTol) const;

 private:
  std::vector<AffineField> generators_;
  Vector base_;
  std::size_t orbit_dim_ = 0;
};

/// F as the zero set of one homogeneous polynomial near a smooth base point.
class LevelSetPresentation {
 public:
  LevelSetPresentation(Poly h, Vector base_point, double tol = kDefaultTol);

  std::size_t n() const { return base_.size(); }
  const Poly& poly() const { return h_; }
  const Vector& base_point() const { return base_; }
  int degree() const { return h_.degree(); }

  Vector gradient(const Vector& x) const;
  Matrix hessian(const Vector& x) const;
  /// h(x) and the gradient condition, within tol for numeric points.
  bool on_surface(const Vector& x, double tol = kDefaultTol) const;

 private:
  Poly h_;
  Vector base_;
  PolyMap grad_;
};

using Presentation = std::variant<OrbitPresentation, LevelSetPresentation>;

std::size_t ambient_dim(const Presentation& p);
const Vector& base_point(const Presentation& p);
std::string kind_name(const Presentation& p);

/// T_aF: span of generator values (orbit) or ker dh(a) (level set).
Subspace tangent_space(const Presentation& p, const Vector& a, double tol = kDefaultTol);

/// Second fundamental form at a, on the tangent frame w_1..w_r.
struct SecondForm {
  /// n x r tangent frame (columns w_i).
  Matrix frame;
  /// q x n matrix whose kernel is T_aF; maps representatives to N_aF coordinates.
  Matrix projection;
  /// representatives[i][j] in R^n of l(w_i, w_j).
  std::vector<std::vector<Vector>> representatives;
  double tol = kDefaultTol;

  std::size_t dim() const { return frame.cols(); }
  std::size_t codim() const { return projection.rows(); }
  /// Normal coordinates of l(w_i, w_j).
  Vector value(std::size_t i, std::size_t j) const;
  /// Normal coordinates of l(v, w) for tangent vectors given in frame coordinates.
  Vector value(const Vector& v, const Vector& w) const;
  /// Rows (q, i) of the linear map w -> l(w_i, w)_q in frame coordinates.
  Matrix stacked() const;
};

SecondForm second_fundamental_form(const Presentation& p, const Vector& a, double tol = kDefaultTol);

/// Sesquilinear extension of l to H_aM = T_aF + i T_aF.
struct LeviForm {
  SecondForm form;

  /// L(v, w) = sum_ij v_i conj(w_j) l(w_i, w_j) for complex frame coordinates.
  std::vector<Complex> value(const std::vector<Complex>& v, const std::vector<Complex>& w) const;
  /// Complex dimension of the kernel, computed on the realified form.
  std::size_t complex_kernel_dim() const;
};

LeviForm levi_form(const Presentation& p, const Vector& a, double tol = kDefaultTol);

/// Deterministic points of F. The first point is always the base point.
std::vector<Vector> sample_points(const Presentation& p, std::size_t count, std::uint64_t seed,
                                  double tol = kDefaultTol);

bool is_conical(const Presentation& p, double tol = kDefaultTol, std::size_t samples = 8, std::uint64_t seed = 42);

enum class MinimalityVerdict { minimal, nonminimal, unknown };
std::string to_string(MinimalityVerdict v);

struct MinimalityReport {
  bool not_in_hyperplane = false;
  bool levi_image_spans = false;
  MinimalityVerdict verdict = MinimalityVerdict::unknown;
  /// Dimension of the linear space parallel to the affine hull (orbit mode).
  std::size_t hull_dim = 0;
};

MinimalityReport minimality_report(const Presentation& p, const Vector& a, double tol = kDefaultTol);

}  // namespace crtube
