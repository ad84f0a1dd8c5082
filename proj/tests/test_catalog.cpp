#include <gtest/gtest.h>

#include "crtube/catalog.hpp"
#include "crtube/errors.hpp"
#include "crtube/io.hpp"

using namespace crtube;

namespace {

const CheckRow* row(const Ledger& l, const std::string& name) {
  for (const auto& r : l.rows)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST(Catalog, DefaultLedgersPass) {
  for (const auto& name : default_entry_names()) {
    Ledger l = run_expected_checks(build_entry_from_name(name));
    EXPECT_TRUE(l.passed()) << name << ": " << l.error;
    EXPECT_FALSE(l.rows.empty()) << name;
    for (const auto& r : l.rows) EXPECT_TRUE(r.pass) << name << " " << r.name << " expected " << r.expected
                                                     << " actual " << r.actual;
  }
}

TEST(Catalog, EveryExpectationHasANote) {
  for (const auto& name : default_entry_names()) {
    CatalogEntry e = build_entry_from_name(name);
    Ledger l = run_expected_checks(e);
    for (const auto& r : l.rows) EXPECT_FALSE(r.note.empty()) << name << " " << r.name;
  }
}

TEST(Catalog, LightConeLedger) {
  Ledger l = run_expected_checks(build_entry("EI"));
  ASSERT_TRUE(l.algebra);
  EXPECT_EQ(l.nondeg.order, 2);
  EXPECT_EQ(l.algebra->graded_dims(), (std::vector<std::size_t>{3, 4, 3}));
  ASSERT_TRUE(l.invariants);
  EXPECT_FALSE(l.invariants->derived.solvable);
}

TEST(Catalog, ExLedger) {
  Ledger l = run_expected_checks(build_entry_from_name("EX(-2)"));
  ASSERT_TRUE(l.invariants);
  EXPECT_TRUE(l.invariants->derived.solvable);
  EXPECT_EQ(l.invariants->derived.commutator_dim(), 3u);
  EXPECT_EQ(l.algebra->graded_dims(), (std::vector<std::size_t>{3, 2}));
}

TEST(Catalog, EvLedgerIsVerificationOnly) {
  CatalogEntry e = build_entry("EV");
  EXPECT_TRUE(e.verification_only());
  EXPECT_EQ(e.candidate_fields.size(), 5u);
  Ledger l = run_expected_checks(e);
  EXPECT_TRUE(l.passed());
  EXPECT_FALSE(l.algebra);
  ASSERT_TRUE(l.verification);
  EXPECT_EQ(l.verification->completeness, "containment verified only");
  EXPECT_NE(std::find(l.flags.begin(), l.flags.end(), "containment verified only"), l.flags.end());
  EXPECT_EQ(l.verification->derived.commutator_dim(), 4u);
}

TEST(Catalog, QuadricMatchesLightCone) {
  Ledger a = run_expected_checks(build_entry("EI"));
  Ledger b = run_expected_checks(build_entry("EB", CatalogParams{2, 1, Rational(2)}));
  ASSERT_TRUE(a.invariants && b.invariants);
  EXPECT_EQ(a.nondeg.order, b.nondeg.order);
  EXPECT_EQ(a.algebra->graded_dims(), b.algebra->graded_dims());
  EXPECT_EQ(a.invariants->derived.dims, b.invariants->derived.dims);
  EXPECT_EQ(a.invariants->killing, b.invariants->killing);
  EXPECT_FALSE(compare_algebras(*a.invariants, *b.invariants).distinct);
}

TEST(Catalog, DeterministicLedgers) {
  for (const char* name : {"EI", "EY", "EV", "EB(2,1,3)"}) {
    auto a = io::to_json(run_expected_checks(build_entry_from_name(name))).dump();
    auto b = io::to_json(run_expected_checks(build_entry_from_name(name))).dump();
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Catalog, FermatCubicFlags) {
  Ledger l = run_expected_checks(build_entry_from_name("EB(2,1,3)"));
  EXPECT_TRUE(l.passed());
  EXPECT_NE(std::find(l.flags.begin(), l.flags.end(), "not locally homogeneous"), l.flags.end());
  const CheckRow* w = row(l, "levi_kernel_dim at witness (1,-1,0)");
  ASSERT_TRUE(w);
  EXPECT_EQ(w->actual, "2");
  const CheckRow* h = row(l, "locally_homogeneous");
  ASSERT_TRUE(h);
  EXPECT_EQ(h->actual, "no");
}

TEST(Catalog, NameParsing) {
  EXPECT_EQ(build_entry_from_name("EY(1/2)").name, "EY(1/2)");
  EXPECT_EQ(build_entry_from_name("EX(-3)").family, "EX");
  EXPECT_TRUE(std::holds_alternative<LevelSetPresentation>(build_entry_from_name("EB(2,2,2)").presentation));
  EXPECT_THROW(build_entry_from_name("EQ"), InputError);
  EXPECT_THROW(build_entry_from_name("EY(-1)"), InputError);
  EXPECT_THROW(build_entry_from_name("EX(-1/2)"), InputError);
  EXPECT_THROW(build_entry_from_name("EB(1,1,2)"), InputError);
  EXPECT_THROW(build_entry_from_name("EB(1,2,2)"), InputError);
  EXPECT_THROW(build_entry_from_name("EB(2,1,1)"), InputError);
}

TEST(Catalog, SampledResidualsOnLightCone) {
  CatalogEntry e = build_entry("EI");
  for (const auto& x : sample_points(e.presentation, 16, 5)) {
    auto d = to_doubles(x);
    EXPECT_NEAR(d[0] * d[0] + d[1] * d[1] - d[2] * d[2], 0.0, 1e-9 * (d[2] * d[2] + 1));
  }
}

TEST(Catalog, SoKillingInertia) {
  EXPECT_EQ(so_killing_inertia(2, 3), (Inertia{6, 4, 0}));
  EXPECT_EQ(so_killing_inertia(4, 2), (Inertia{8, 7, 0}));
  EXPECT_EQ(so_killing_inertia(3, 3), (Inertia{9, 6, 0}));
}
