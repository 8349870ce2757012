#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

namespace {

struct Aff1 : ::testing::Test {
    Model m = load_model(fixture("aff1_semidirect"));
    LiePseudoalgebra T = m.algebra("T");
    LiePseudoalgebra A = m.algebra("aff1");
    LiePseudoalgebra L2 = m.algebra("L2");
};

std::vector<std::vector<std::string>> locs(const CheckReport& r)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& f : r.findings)
        out.push_back(f.locator);
    return out;
}

} // namespace

TEST_F(Aff1, SemidirectIsACocycle)
{
    EXPECT_TRUE(check_nonabelian_cocycle(m.cocycle("semidirect").cocycle, T, A).passed());
    EXPECT_TRUE(check_nonabelian_cocycle(m.cocycle("rank2_good").cocycle, L2, A).passed());
}

TEST_F(Aff1, CorruptedFailsDerivationIdentity)
{
    const CheckReport r = check_nonabelian_cocycle(m.cocycle("corrupted").cocycle, T, A);
    ASSERT_EQ(r.findings.size(), 2u);
    EXPECT_EQ(r.findings[0].check, "deri-iden");
    EXPECT_EQ(locs(r), (std::vector<std::vector<std::string>>{{"t", "a", "b"}, {"t", "b", "a"}}));
    EXPECT_THROW(build_extension(m.cocycle("corrupted").cocycle, T, A), Error);
}

TEST_F(Aff1, Rank2BadFailsFirstIdentityAndMc)
{
    const NonAbelianCocycle& c = m.cocycle("rank2_bad").cocycle;
    const CheckReport r = check_nonabelian_cocycle(c, L2, A);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.findings.front().check, "first-iden");
    EXPECT_EQ(r.findings.front().locator, (std::vector<std::string>{"x1", "x2", "a"}));
    const DgLa g = build_dgla(L2, A);
    const CheckReport mc = check_mc(cocycle_as_mc(g, c), g);
    ASSERT_FALSE(mc.passed());
    EXPECT_EQ(mc.findings.front().check, "mc(2,1)");
    EXPECT_EQ(locs(mc), locs(r));
}

TEST_F(Aff1, ExtensionRoundTrip)
{
    const NonAbelianCocycle& c = m.cocycle("semidirect").cocycle;
    const ExtensionModel E = build_extension(c, T, A);
    EXPECT_TRUE(E.validate().passed());
    EXPECT_EQ(extract_cocycle(E, ModuleMap::zero(T.module, A.module)), c);
    const ModuleMap& s = m.map("s3");
    const NonAbelianCocycle cs = extract_cocycle(E, s);
    EXPECT_EQ(cs, apply_equivalence(c, s, T, A));
    EXPECT_TRUE(check_cocycle_equivalence(cs, c, s, T, A).passed());
    const ExtensionModel Es = build_extension(cs, T, A);
    EXPECT_TRUE(check_extension_equivalence(Es, E, theta_from_phi(Es, s)).passed());
    EXPECT_TRUE(check_extension_equivalence(E, Es, theta_from_phi(E, Scalar(T.field(), -1) * s)).passed());
}

TEST_F(Aff1, FindEquivalenceWitness)
{
    const NonAbelianCocycle& c = m.cocycle("semidirect").cocycle;
    const NonAbelianCocycle shifted = apply_equivalence(c, m.map("s1"), T, A);
    const EquivalenceResult r = find_equivalence(shifted, c, T, A);
    ASSERT_EQ(r.verdict, Verdict::found);
    EXPECT_EQ(apply_equivalence(c, *r.phi, T, A), shifted);
}

TEST_F(Aff1, MaurerCartanAndGauge)
{
    const NonAbelianCocycle& c = m.cocycle("semidirect").cocycle;
    const DgLa g = build_dgla(T, A);
    const GradedElement alpha = cocycle_as_mc(g, c);
    EXPECT_TRUE(check_mc(alpha, g).passed());
    EXPECT_EQ(mc_as_cocycle(g, alpha), c);
    const ModuleMap& phi = m.map("s4");
    const GradedElement moved = gauge_transform(alpha, embed_degree_zero(g, phi), g);
    EXPECT_EQ(moved, cocycle_as_mc(g, apply_equivalence(c, phi, T, A)));
}

TEST(Nonabelian, HeisenbergNotEquivalentToScaled)
{
    const Model m = load_model(fixture("h3_f5"));
    const ModelCocycle& a = m.cocycle("h3");
    const LiePseudoalgebra L = m.algebra(a.algebra), M = m.algebra(a.coefficients);
    const EquivalenceResult r = find_equivalence(a.cocycle, m.cocycle("h3_scaled").cocycle, L, M);
    EXPECT_EQ(r.verdict, Verdict::not_equivalent);
    EXPECT_EQ(r.detail, "exhaustive over 25 candidates");
}

TEST(Nonabelian, SearchConfigParsing)
{
    const Field q = Field::rationals();
    EXPECT_EQ(SearchConfig::parse("auto", q).mode, SearchMode::automatic);
    const SearchConfig b = SearchConfig::parse("bounded:{-2,0,1/2}", q);
    EXPECT_EQ(b.mode, SearchMode::bounded);
    ASSERT_EQ(b.coefficients.size(), 3u);
    EXPECT_EQ(b.coefficients[2], q.parse_scalar("1/2"));
    EXPECT_THROW(SearchConfig::parse("sideways", q), Error);
}
