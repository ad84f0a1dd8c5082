#include "crtube/nondegeneracy.hpp"

#include <algorithm>
#include <cmath>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "nondegeneracy";

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}
}  // namespace

Subspace levi_kernel(const Presentation& p, const Vector& a, double tol) {
  SecondForm sf = second_fundamental_form(p, a, tol);
  auto coords = nullspace(sf.stacked(), tol);
  std::vector<Vector> vecs;
  for (const auto& c : coords) vecs.push_back(sf.frame.apply(c));
  return Subspace::span(vecs, ambient_dim(p), tol);
}

std::string to_string(ChainTerminal t) {
  switch (t) {
    case ChainTerminal::zero:
      return "zero";
    case ChainTerminal::stabilized_nonzero:
      return "stabilized_nonzero";
    default:
      return "undecided";
  }
}

std::vector<std::size_t> KernelChain::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : spaces) d.push_back(s.dim());
  return d;
}

KernelChain kernel_chain(const OrbitPresentation& p, const Vector& a, int max_k, double tol,
                         const std::vector<std::size_t>& subset) {
  if (max_k < 1) throw InputError(kModule, "max_k must be positive");
  KernelChain chain;
  Presentation pres = p;
  chain.spaces.push_back(tangent_space(pres, a, tol));
  chain.subset = subset.empty() ? p.independent_generators(a, tol) : subset;
  {
    std::vector<Vector> vals;
    for (std::size_t g : chain.subset) {
      if (g >= p.generators().size()) throw InputError(kModule, "generator index out of range");
      vals.push_back(p.generators()[g].eval(a));
    }
    if (rank(Matrix::from_columns(vals, p.n()), tol) != chain.spaces[0].dim() || vals.size() != chain.spaces[0].dim())
      throw InputError(kModule, "generator subset is not a basis of the tangent space");
  }
  // Numeric blocks are compared against the generator scale, not against
  // themselves: an identically zero block would otherwise be pure round-off.
  double scale = 0.0;
  for (std::size_t g : chain.subset)
    for (double v : p.generators()[g].linear.to_doubles()) scale = std::max(scale, std::abs(v));
  for (int k = 0; k < max_k; ++k) {
    const Subspace& cur = chain.spaces.back();
    if (cur.dim() == 0) break;
    Matrix b = cur.basis();
    Matrix ann = cur.annihilator();
    Matrix stacked(0, b.cols(), b.mode());
    for (std::size_t g : chain.subset) stacked = vstack(stacked, ann * p.generators()[g].linear * b);
    if (!stacked.is_exact())
      for (std::size_t i = 0; i < stacked.rows(); ++i)
        for (std::size_t j = 0; j < stacked.cols(); ++j)
          if (std::abs(stacked(i, j).to_double()) <= tol * scale) stacked.set(i, j, Scalar(0.0));
    auto coords = nullspace(stacked, tol);
    std::vector<Vector> vecs;
    for (const auto& c : coords) vecs.push_back(b.apply(c));
    Subspace next = Subspace::span(vecs, p.n(), tol);
    if (next.dim() > cur.dim()) throw InconsistencyError(kModule, "kernel chain is not monotone");
    bool stable = next.dim() == cur.dim();
    chain.spaces.push_back(std::move(next));
    if (stable) break;
  }
  const auto& last = chain.spaces.back();
  if (last.dim() == 0) {
    chain.terminal = ChainTerminal::zero;
    chain.order = static_cast<int>(chain.spaces.size()) - 1;
  } else if (chain.spaces.size() >= 2 && chain.spaces[chain.spaces.size() - 2].dim() == last.dim()) {
    chain.terminal = ChainTerminal::stabilized_nonzero;
  } else {
    chain.terminal = ChainTerminal::undecided;
  }
  return chain;
}

std::string to_string(NondegKind k) {
  switch (k) {
    case NondegKind::order:
      return "order";
    case NondegKind::holomorphically_degenerate:
      return "holomorphically_degenerate";
    case NondegKind::undecided:
      return "undecided";
    default:
      return "unknown";
  }
}

NondegeneracyResult nondegeneracy_order(const Presentation& p, const Vector& a, const NondegOptions& opt) {
  NondegeneracyResult res;
  const int max_k = opt.max_k > 0 ? opt.max_k : static_cast<int>(ambient_dim(p));
  res.max_k = max_k;
  auto pts = sample_points(p, opt.samples + 1, opt.seed, opt.tol);
  pts.erase(pts.begin());

  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    KernelChain chain = kernel_chain(*o, a, max_k, opt.tol);
    res.dims = chain.dims();
    for (const auto& x : pts) {
      auto d = kernel_chain(*o, x, max_k, opt.tol).dims();
      if (d != res.dims)
        throw InconsistencyError(kModule, "kernel dimensions " + dims_string(d) + " at a sampled point differ from " +
                                              dims_string(res.dims) + " at the base point; not uniformly degenerate");
    }
    res.uniform = true;
    res.points_checked = pts.size() + 1;
    res.certificate = "kernel_chain";
    switch (chain.terminal) {
      case ChainTerminal::zero:
        res.kind = NondegKind::order;
        res.order = *chain.order;
        break;
      case ChainTerminal::stabilized_nonzero:
        res.kind = NondegKind::holomorphically_degenerate;
        break;
      default:
        res.kind = NondegKind::undecided;
        res.note = "undecided(" + std::to_string(max_k) + ")";
    }
    return res;
  }

  const auto& l = std::get<LevelSetPresentation>(p);
  Subspace t = tangent_space(p, a, opt.tol);
  Subspace k1 = levi_kernel(p, a, opt.tol);
  res.dims = {t.dim(), k1.dim()};
  res.points_checked = 1;
  if (l.degree() == 1) {
    res.kind = NondegKind::holomorphically_degenerate;
    res.certificate = "levi_flat";
    res.uniform = true;
    res.dims.push_back(t.dim());
    return res;
  }
  bool uniform = true;
  bool line_is_radial = k1.dim() == 1 && k1.contains(a);
  for (const auto& x : pts) {
    Subspace kx = levi_kernel(p, x, opt.tol);
    ++res.points_checked;
    if (kx.dim() != k1.dim()) uniform = false;
    if (!(kx.dim() == 1 && kx.contains(x))) line_is_radial = false;
  }
  res.uniform = uniform;
  if (!uniform) {
    res.note = "Levi kernel dimension varies near the point";
    return res;
  }
  if (k1.dim() == 0) {
    res.kind = NondegKind::order;
    res.order = 1;
    res.certificate = "levi_nondegenerate";
    return res;
  }
  if (line_is_radial && t.dim() >= 2 && is_conical(p, opt.tol, opt.samples, opt.seed)) {
    res.kind = NondegKind::order;
    res.order = 2;
    res.certificate = "line_kernel_cone";
    res.dims.push_back(0);
    return res;
  }
  res.note = "uniform degeneracy of a level set is not certified here; supply an orbit presentation";
  return res;
}

}  // namespace crtube
