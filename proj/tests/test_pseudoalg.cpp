#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

TEST(Pseudoalg, FixtureAlgebrasAreLie)
{
    EXPECT_TRUE(check_lie(load_model(fixture("sl2")).algebra("sl2")).passed());
    EXPECT_TRUE(check_lie(load_model(fixture("virasoro")).algebra("Vir")).passed());
    EXPECT_TRUE(check_lie(load_model(fixture("cur_sl2_z2")).algebra("cur")).passed());
}

TEST(Pseudoalg, VirasoroBracketFromLambda)
{
    const LiePseudoalgebra v = load_model(fixture("virasoro")).algebra("Vir");
    EXPECT_EQ(v.bracket.value(Tuple{0, 0}).render(v.module), "-(d | 1) L + (1 | d) L");
    EXPECT_EQ(from_lambda_bracket(to_lambda_bracket(v.bracket), v.module), v.bracket);
    EXPECT_EQ(render_lambda(to_lambda_bracket(v.bracket).at({0, 0}), v.module), "d L + 2*lambda L");
}

TEST(Pseudoalg, BrokenJacobiIsLocated)
{
    // [x1,x2] = x3, [x1,x3] = x1 is not Lie: J(x1,x2,x3) = −x3.
    const HopfAlgebra h = HopfAlgebra::trivial(Field::rationals());
    const FreeModule m("g", {"x1", "x2", "x3"}, h);
    PolyMap b = PolyMap::uniform(m, 2, m);
    b.set(Tuple{0, 1}, parse_tensor("(1 | 1) x3", 2, m));
    b.set(Tuple{0, 2}, parse_tensor("(1 | 1) x1", 2, m));
    const LiePseudoalgebra a("bad", m, skew_complete(b));
    const CheckReport r = check_jacobi(a);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.findings.front().check, "jacobi");
}

TEST(Pseudoalg, CurrentAlgebraMatchesFixture)
{
    const Model m = load_model(fixture("cur_sl2_z2"));
    const LiePseudoalgebra cur = current_pseudoalgebra("cur", sl2_constants(m.field), m.hopf);
    EXPECT_TRUE(check_lie(cur).passed());
    EXPECT_EQ(cur.module.rank(), 3u);
}

TEST(Pseudoalg, AdjointIsARepresentation)
{
    const Model m = load_model(fixture("cur_sl2_z2"));
    EXPECT_TRUE(check_representation(m.action("ad")).passed());
    EXPECT_TRUE(check_representation(Representation::adjoint(load_model(fixture("virasoro")).algebra("Vir"))).passed());
}

TEST(Pseudoalg, HomomorphismCheck)
{
    const Model m = load_model(fixture("sl2"));
    const LiePseudoalgebra g = m.algebra("sl2");
    EXPECT_TRUE(check_homomorphism(ModuleMap::identity(g.module), g, g).passed());
    // e ↔ f, h ↦ −h is the Chevalley involution.
    const HomomorphismCheck swap = check_homomorphism(m.map("swap"), g, g);
    EXPECT_TRUE(swap.passed());
    EXPECT_TRUE(swap.invertible);
    // Without negating h it is not a homomorphism.
    ModuleMap bad = m.map("swap");
    bad.set_image(2, basis_element(g.module, 2));
    const HomomorphismCheck r = check_homomorphism(bad, g, g);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.invertible);
}
