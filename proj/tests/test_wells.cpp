#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

namespace {

struct H3 : ::testing::Test {
    Model m = load_model(fixture("h3_f5"));
    const ModelCocycle& mc = m.cocycle("h3");
    LiePseudoalgebra L = m.algebra(mc.algebra);
    LiePseudoalgebra M = m.algebra(mc.coefficients);
    ExtensionModel E = build_extension(mc.cocycle, L, M);

    AutPair pair(const std::string& name) const
    {
        const AutPair raw = m.pair(name);
        return make_aut_pair(raw.beta, raw.alpha, L, M);
    }
};

} // namespace

TEST_F(H3, P1IsNotInducible)
{
    const InducibilityResult r = check_inducible(E, pair("P1"));
    EXPECT_EQ(r.verdict, Inducibility::not_inducible);
    EXPECT_EQ(r.wells.equivalence.detail, "exhaustive over 25 candidates");
    EXPECT_FALSE(r.gamma.has_value());
}

TEST_F(H3, P2IsInducibleWithVerifiedLift)
{
    const InducibilityResult r = check_inducible(E, pair("P2"));
    ASSERT_EQ(r.verdict, Inducibility::inducible);
    ASSERT_TRUE(r.gamma.has_value());
    EXPECT_TRUE(check_automorphism(*r.gamma, E.E).passed());
    EXPECT_TRUE(preserves_m(E, *r.gamma));
    EXPECT_EQ(tau(E, *r.gamma, ModuleMap::zero(L.module, M.module)), pair("P2"));
}

TEST_F(H3, TransformedCocycle)
{
    // χ_(β,α)(x1,x2) = β χ(α⁻¹x1, x2) = 2·3·z = z for P2 over F5.
    const NonAbelianCocycle t = transform_cocycle(mc.cocycle, pair("P2"), L, M);
    EXPECT_EQ(t, mc.cocycle);
    const NonAbelianCocycle t1 = transform_cocycle(mc.cocycle, pair("P1"), L, M);
    EXPECT_EQ(t1.chi.value(Tuple{0, 1}), parse_tensor("3*(1 | 1) z", 2, M.module));
}

TEST_F(H3, AbelianWellsAgrees)
{
    const Representation rep("psi", L, M.module, mc.cocycle.psi);
    for (const std::string name : {"P0", "P1", "P2"}) {
        ASSERT_TRUE(check_C_psi(pair(name), rep));
        const AbelianWellsResult a = abelian_wells(E, m.map("s1"), pair(name));
        EXPECT_EQ(a.zero, wells_obstruction(E, m.map("s1"), pair(name)).zero()) << name;
    }
}

TEST_F(H3, ExactSequenceCounts)
{
    const ExactSequenceReport r = check_exact_sequence(E);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.report.passed()) << r.report.summary();
    EXPECT_EQ(r.candidates, 78125u);
    EXPECT_EQ(r.aut_m, 12000u);
    EXPECT_EQ(r.ker_tau, 25u);
    EXPECT_EQ(r.shape_kernel, 25u);
    EXPECT_EQ(r.pairs, 1920u);
    EXPECT_EQ(r.im_tau, 480u);
    EXPECT_EQ(r.ker_w, 480u);
}

TEST(Wells, MakeAutPairRejectsNonAutomorphisms)
{
    const Model m = load_model(fixture("h3_f5"));
    const LiePseudoalgebra L = m.algebra("L"), M = m.algebra("M");
    EXPECT_THROW(make_aut_pair(ModuleMap::zero(M.module, M.module), ModuleMap::identity(L.module), L, M), Error);
}

TEST(Wells, ShiftPairOnAff1)
{
    const Model m = load_model(fixture("aff1_semidirect"));
    const LiePseudoalgebra T = m.algebra("T"), A = m.algebra("aff1");
    const ExtensionModel E = build_extension(m.cocycle("semidirect").cocycle, T, A);
    const AutPair raw = m.pair("Q2");
    const InducibilityResult r = check_inducible(E, make_aut_pair(raw.beta, raw.alpha, T, A));
    ASSERT_EQ(r.verdict, Inducibility::inducible);
    EXPECT_TRUE(check_automorphism(*r.gamma, E.E).passed());
    // Q3 needs φ(t) = −2a, outside the default coefficient set.
    const AutPair q3 = make_aut_pair(m.pair("Q3").beta, m.pair("Q3").alpha, T, A);
    EXPECT_EQ(check_inducible(E, q3).verdict, Inducibility::inconclusive);
    EXPECT_EQ(check_inducible(E, q3, SearchConfig::parse("bounded:-2,-1,0,1,2", T.field())).verdict,
              Inducibility::inducible);
}
