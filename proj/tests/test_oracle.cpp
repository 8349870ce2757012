#include <gtest/gtest.h>

#include "pseudocohom/oracle.hpp"
#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

TEST(Oracle, Sl2Dimensions)
{
    const ClassicalLieAlgebra g = classical_from_pseudo(load_model(fixture("sl2")).algebra("sl2"));
    EXPECT_TRUE(g.antisymmetric());
    EXPECT_TRUE(g.jacobi_failures().empty());
    const ClassicalRep k = ClassicalRep::trivial(g, 1);
    EXPECT_EQ(ce_cohomology_dim(g, k, 0), 1u);
    EXPECT_EQ(ce_cohomology_dim(g, k, 1), 0u);
    EXPECT_EQ(ce_cohomology_dim(g, k, 2), 0u);
    EXPECT_EQ(ce_cohomology_dim(g, k, 3), 1u);
    EXPECT_EQ(ce_cohomology_dim(g, ClassicalRep::adjoint(g), 1), 0u);
}

TEST(Oracle, NormalizationsDifferBySignAboveDegreeZero)
{
    const ClassicalLieAlgebra g = classical_from_pseudo(load_model(fixture("sl2")).algebra("sl2"));
    const ClassicalRep ad = ClassicalRep::adjoint(g);
    for (std::size_t n = 0; n <= 2; ++n)
        for (const auto& b : alternating_basis(g.field, n, 3, 3)) {
            ClassicalCochain lib = ce_coboundary(b, g, ad, CeNormalization::library);
            const ClassicalCochain txt = ce_coboundary(b, g, ad, CeNormalization::textbook);
            if (n >= 1)
                for (auto& v : lib.v)
                    v = -v;
            EXPECT_EQ(lib, txt);
        }
}

TEST(Oracle, AgreesWithLibrary)
{
    const Model m = load_model(fixture("sl2"));
    EXPECT_TRUE(compare_with_pseudo(m.action("ad"), 3).passed());
    EXPECT_TRUE(compare_with_pseudo(m.action("triv"), 3).passed());
    EXPECT_TRUE(compare_jacobi(m.algebra("sl2")).passed());
}

TEST(Oracle, JacobiLocatorsAgreeOnNonLieTable)
{
    ClassicalLieAlgebra g(Field::prime(5), 3);
    g.at(0, 1, 2) = g.field.one();
    g.at(1, 0, 2) = -g.field.one();
    g.at(0, 2, 0) = g.field.one();
    g.at(2, 0, 0) = -g.field.one();
    EXPECT_FALSE(g.jacobi_failures().empty());
    EXPECT_TRUE(compare_jacobi(pseudo_from_classical(g, {"u", "v", "w"})).passed());
}

TEST(Oracle, PolymapRoundTrip)
{
    Rng rng(3);
    const Model m = load_model(fixture("sl2"));
    const Representation& r = m.action("ad");
    const PolyMap p = random_cochain(rng, r, 2).map;
    EXPECT_EQ(polymap_from_classical(classical_from_polymap(p), r.algebra.module, r.module), p);
}

TEST(Oracle, BruteForceInducibility)
{
    const Model m = load_model(fixture("h3_f5"));
    const ExtensionModel E = build_extension(m.cocycle("h3").cocycle, m.algebra("L"), m.algebra("M"));
    const ClassicalLieAlgebra e = classical_from_pseudo(E.E);
    // P1 = (id, x1 ↦ 2x1), P2 = (2, x1 ↦ 2x1).
    const ClassicalInducibility p1 = classical_inducibility(e, 2, {1}, {2, 0, 0, 1});
    const ClassicalInducibility p2 = classical_inducibility(e, 2, {2}, {2, 0, 0, 1});
    EXPECT_FALSE(p1.inducible);
    EXPECT_TRUE(p2.inducible);
    EXPECT_EQ(p2.lifts, 25u);
    EXPECT_EQ(p2.candidates, 1953125u);
}
