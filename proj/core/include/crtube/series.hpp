#pragma once

#include <cstdint>
#include <vector>

#include "crtube/linalg.hpp"
#include "crtube/polynomial.hpp"

namespace crtube {

/// Monomial bookkeeping for rational power series in `vars` variables,
/// truncated above total degree `order`. Monomials are ordered by degree.
class SeriesRing {
 public:
  SeriesRing(std::size_t vars, int order);

  std::size_t vars() const { return vars_; }
  int order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& monomial(std::size_t i) const { return monomials_[i]; }
  int degree_of(std::size_t i) const { return degree_[i]; }
  /// Number of monomials of degree <= d.
  std::size_t prefix(int d) const;
  /// Index of t_var * m_i, or size() when that exceeds the order.
  std::size_t shift(std::size_t var, std::size_t i) const { return shift_[var][i]; }
  /// Index of m_i * m_j for j < prefix(order - deg(i)).
  std::uint32_t product(std::size_t i, std::size_t j) const { return products_[i][j]; }

 private:
  std::size_t vars_;
  int order_;
  std::vector<Exponent> monomials_;
  std::vector<int> degree_;
  std::vector<std::size_t> prefix_;
  std::vector<std::vector<std::size_t>> shift_;
  std::vector<std::vector<std::uint32_t>> products_;
};

using Series = std::vector<Rational>;

Series series_zero(const SeriesRing& ring);
Series series_constant(const SeriesRing& ring, const Rational& c);
Series series_mul(const SeriesRing& ring, const Series& a, const Series& b);
void series_axpy(Series& y, const Rational& a, const Series& x);

/// Truncated expansion of t -> exp(sum_j t_j A_j) applied to the affine
/// point (x, 1), where each A_j is the (n+1)x(n+1) homogeneous matrix of an
/// affine field. Returns the n coordinate series.
std::vector<Series> exp_orbit_series(const SeriesRing& ring, const std::vector<Matrix>& homogeneous,
                                     const Vector& base);

}  // namespace crtube
