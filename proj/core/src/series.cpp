#include "crtube/series.hpp"

#include <map>

#include "crtube/errors.hpp"

namespace crtube {

SeriesRing::SeriesRing(std::size_t vars, int order) : vars_(vars), order_(order) {
  if (vars == 0 || order < 0) throw InputError("hol_solver", "series ring needs at least one variable");
  std::map<Exponent, std::size_t> index;
  for (int d = 0; d <= order; ++d) {
    for (auto& e : monomials_of_degree(vars, d)) {
      index.emplace(e, monomials_.size());
      monomials_.push_back(std::move(e));
      degree_.push_back(d);
    }
    prefix_.push_back(monomials_.size());
  }
  shift_.assign(vars, std::vector<std::size_t>(size(), size()));
  for (std::size_t v = 0; v < vars; ++v)
    for (std::size_t i = 0; i < size(); ++i) {
      if (degree_[i] == order) continue;
      Exponent e = monomials_[i];
      e[v] += 1;
      shift_[v][i] = index.at(e);
    }
  products_.resize(size());
  Exponent e(vars);
  for (std::size_t i = 0; i < size(); ++i) {
    const std::size_t lim = prefix(order - degree_[i]);
    products_[i].resize(lim);
    for (std::size_t j = 0; j < lim; ++j) {
      for (std::size_t v = 0; v < vars; ++v) e[v] = monomials_[i][v] + monomials_[j][v];
      products_[i][j] = static_cast<std::uint32_t>(index.at(e));
    }
  }
}

std::size_t SeriesRing::prefix(int d) const {
  if (d < 0) return 0;
  return prefix_[std::min(d, order_)];
}

Series series_zero(const SeriesRing& ring) { return Series(ring.size()); }

Series series_constant(const SeriesRing& ring, const Rational& c) {
  Series s(ring.size());
  s[0] = c;
  return s;
}

Series series_mul(const SeriesRing& ring, const Series& a, const Series& b) {
  Series out(ring.size());
  std::vector<std::size_t> nzb;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (sgn(b[j]) != 0) nzb.push_back(j);
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t lim = ring.prefix(ring.order() - ring.degree_of(i));
    for (std::size_t j : nzb) {
      if (j >= lim) break;
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      Rational& dst = out[ring.product(i, j)];
      mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), t.get_mpq_t());
    }
  }
  return out;
}

void series_axpy(Series& y, const Rational& a, const Series& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

std::vector<Series> exp_orbit_series(const SeriesRing& ring, const std::vector<Matrix>& homogeneous,
                                     const Vector& base) {
  const std::size_t n1 = base.size() + 1;
  if (homogeneous.size() != ring.vars()) throw InconsistencyError("hol_solver", "series variable count mismatch");
  std::vector<Series> term(n1, series_zero(ring));
  for (std::size_t p = 0; p < base.size(); ++p) term[p][0] = base[p].rational();
  term[n1 - 1][0] = 1;
  std::vector<Series> sum = term;
  for (int k = 1; k <= ring.order(); ++k) {
    std::vector<Series> next(n1, series_zero(ring));
    const Rational inv(1, k);
    for (std::size_t v = 0; v < ring.vars(); ++v) {
      const Matrix& a = homogeneous[v];
      for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n1; ++q) {
          if (a(p, q).is_zero()) continue;
          const Rational c = a(p, q).rational() * inv;
          for (std::size_t i = ring.prefix(k - 2); i < ring.prefix(k - 1); ++i) {
            if (sgn(term[q][i]) == 0) continue;
            next[p][ring.shift(v, i)] += c * term[q][i];
          }
        }
    }
    term = std::move(next);
    for (std::size_t p = 0; p < n1; ++p) series_axpy(sum[p], 1, term[p]);
  }
  sum.pop_back();
  return sum;
}

}  // namespace crtube
