#include <gtest/gtest.h>

#include "crtube/catalog.hpp"
#include "crtube/errors.hpp"
#include "crtube/nondegeneracy.hpp"

using namespace crtube;

namespace {

Vector vec(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const OrbitPresentation& orbit(const CatalogEntry& e) { return std::get<OrbitPresentation>(e.presentation); }

/// Plane x3 = 0 as the orbit of the Euler field and the two translations.
OrbitPresentation plane_orbit() {
  Vector e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0});
  return OrbitPresentation({AffineField(Matrix::identity(3)), AffineField(Matrix(3, 3), e1), AffineField(Matrix(3, 3), e2)},
                           vec({1, 0, 0}));
}

/// Paraboloid x3 = x1^2 + x2^2 through 0 as the orbit of its two "translations".
OrbitPresentation paraboloid_orbit() {
  Matrix a1(3, 3), a2(3, 3);
  a1.set(2, 0, 2);
  a2.set(2, 1, 2);
  return OrbitPresentation({AffineField(a1, vec({1, 0, 0})), AffineField(a2, vec({0, 1, 0}))}, vec({0, 0, 0}));
}

}  // namespace

TEST(LeviKernel, LightConeIsTheRuling) {
  CatalogEntry e = build_entry("EI");
  Subspace k = levi_kernel(e.presentation, vec({1, 0, 1}));
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(vec({1, 0, 1})));
}

TEST(LeviKernel, FermatCubicWitness) {
  CatalogEntry e = build_entry("EB", CatalogParams{2, 1, Rational(3)});
  EXPECT_EQ(levi_kernel(e.presentation, vec({1, -1, 0})).dim(), 2u);
  EXPECT_EQ(levi_kernel(e.presentation, base_point(e.presentation)).dim(), 1u);
}

TEST(LeviKernel, HyperplaneIsFlat) {
  Poly h(3);
  h.add_term({0, 0, 1}, 1);
  Presentation p = LevelSetPresentation(h, vec({2, 1, 0}));
  EXPECT_EQ(levi_kernel(p, vec({2, 1, 0})).dim(), 2u);
}

TEST(KernelChain, LightCone) {
  CatalogEntry e = build_entry("EI");
  KernelChain c = kernel_chain(orbit(e), vec({1, 0, 1}), 3);
  EXPECT_EQ(c.dims(), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(c.terminal, ChainTerminal::zero);
  ASSERT_TRUE(c.order);
  EXPECT_EQ(*c.order, 2);
}

TEST(KernelChain, EvAtBasePoint) {
  CatalogEntry e = build_entry("EV");
  KernelChain c = kernel_chain(orbit(e), vec({1, 0, 0}), 3);
  ASSERT_GE(c.spaces.size(), 3u);
  EXPECT_EQ(c.spaces[1].dim(), 1u);
  EXPECT_TRUE(c.spaces[1].contains(vec({1, 0, 0})));
  EXPECT_EQ(c.spaces[2].dim(), 0u);
  EXPECT_EQ(*c.order, 2);
}

TEST(KernelChain, HyperplaneStabilizesNonzero) {
  KernelChain c = kernel_chain(plane_orbit(), vec({1, 0, 0}), 3);
  EXPECT_EQ(c.terminal, ChainTerminal::stabilized_nonzero);
  EXPECT_FALSE(c.order);
}

TEST(KernelChain, IndependentOfGeneratorSubset) {
  // Light cone via delta + so(2,1): any two independent generators give the same spaces.
  Vector a = vec({3, 4, 5});
  OrbitPresentation o = quadric_orbit(2, 1, a);
  KernelChain ref = kernel_chain(o, a, 3);
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t i = 0; i < o.generators().size(); ++i)
    for (std::size_t j = i + 1; j < o.generators().size(); ++j)
      if (rank(o.evaluation(a).select_columns({i, j})) == 2) subsets.push_back({i, j});
  ASSERT_GE(subsets.size(), 2u);
  for (const auto& s : subsets) {
    KernelChain c = kernel_chain(o, a, 3, kDefaultTol, s);
    ASSERT_EQ(c.spaces.size(), ref.spaces.size());
    for (std::size_t k = 0; k < c.spaces.size(); ++k) EXPECT_TRUE(c.spaces[k].equals(ref.spaces[k]));
  }
}

TEST(KernelChain, RejectsDependentSubset) {
  CatalogEntry e = build_entry("EI");
  EXPECT_THROW(kernel_chain(orbit(e), vec({1, 0, 1}), 3, kDefaultTol, {0, 0}), InputError);
}

TEST(NondegeneracyOrder, CatalogOrbitsAreTwoNondegenerate) {
  for (const char* name : {"EI", "EY", "EZ", "EX", "EV"}) {
    CatalogEntry e = build_entry(name);
    NondegeneracyResult r = nondegeneracy_order(e.presentation, base_point(e.presentation));
    EXPECT_EQ(r.kind, NondegKind::order) << name;
    EXPECT_EQ(r.order, 2) << name;
    EXPECT_TRUE(r.uniform) << name;
    EXPECT_EQ(r.certificate, "kernel_chain");
  }
}

TEST(NondegeneracyOrder, ParaboloidIsLeviNondegenerate) {
  NondegeneracyResult r = nondegeneracy_order(paraboloid_orbit(), vec({0, 0, 0}));
  EXPECT_EQ(r.kind, NondegKind::order);
  EXPECT_EQ(r.order, 1);
}

TEST(NondegeneracyOrder, HyperplaneIsHolomorphicallyDegenerate) {
  EXPECT_EQ(nondegeneracy_order(plane_orbit(), vec({1, 0, 0})).kind, NondegKind::holomorphically_degenerate);
  Poly h(3);
  h.add_term({0, 0, 1}, 1);
  EXPECT_EQ(nondegeneracy_order(LevelSetPresentation(h, vec({1, 0, 0})), vec({1, 0, 0})).kind,
            NondegKind::holomorphically_degenerate);
}

TEST(NondegeneracyOrder, QuadricLevelSetUsesLineKernelCertificate) {
  CatalogEntry e = build_entry("EB", CatalogParams{2, 1, Rational(2)});
  NondegeneracyResult r = nondegeneracy_order(e.presentation, base_point(e.presentation));
  EXPECT_EQ(r.kind, NondegKind::order);
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.certificate, "line_kernel_cone");
}

TEST(NondegeneracyOrder, ConeDirectionInLeviKernelAtSamples) {
  for (const char* name : {"EI", "EY", "EZ", "EX"}) {
    CatalogEntry e = build_entry(name);
    for (const auto& x : sample_points(e.presentation, 8, 17)) {
      Vector xn = to_mode(x, Mode::numeric);
      EXPECT_TRUE(levi_kernel(e.presentation, xn).contains(xn)) << name;
    }
  }
}
