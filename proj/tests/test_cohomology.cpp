#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

TEST(Cohomology, DeltaSquaredVanishes)
{
    Rng rng(7);
    const Model m = load_model(fixture("cur_sl2_z2"));
    const Representation& r = m.action("ad");
    for (std::size_t n = 0; n <= 2; ++n) {
        const Cochain c = random_cochain(rng, r, n);
        EXPECT_TRUE(coboundary(coboundary(c, r), r).map.is_zero()) << "degree " << n;
    }
}

TEST(Cohomology, DegreeZeroUsesCounit)
{
    // δu(x) for the adjoint of sl2 is −[x*u] read through k ⊗_H M; nonzero for u = e.
    const Model m = load_model(fixture("sl2"));
    const Representation& r = m.action("ad");
    Cochain c = zero_cochain(r, 0);
    c.constant[0] = m.field.one();
    EXPECT_FALSE(coboundary(c, r).map.is_zero());
}

TEST(Cohomology, Dimensions)
{
    const Model sl2 = load_model(fixture("sl2"));
    EXPECT_EQ(cohomology_dim(sl2.action("triv"), 1), 0u);
    EXPECT_EQ(cohomology_dim(sl2.action("triv"), 2), 0u);
    EXPECT_EQ(cohomology_dim(sl2.action("triv"), 3), 1u);
    EXPECT_EQ(cohomology_dim(sl2.action("ad"), 1), 0u);
    const Model ab = load_model(fixture("ab2_h3"));
    EXPECT_EQ(cohomology_dim(ab.action("triv"), 1), 2u);
    EXPECT_EQ(cohomology_dim(ab.action("triv"), 2), 1u);
}

TEST(Cohomology, PolynomialHopfIsUnsupported)
{
    const Model vir = load_model(fixture("virasoro"));
    EXPECT_THROW(cohomology_dim(vir.action("ad"), 1), Error);
}

TEST(Cohomology, MakeCochainRejectsNonSkew)
{
    const Model ab = load_model(fixture("ab2_h3"));
    const Representation& r = ab.action("triv");
    PolyMap p = PolyMap::uniform(r.algebra.module, 2, r.module);
    p.set(Tuple{0, 1}, parse_tensor("(1 | 1) z", 2, r.module));
    EXPECT_THROW(make_cochain(r, p), Error);
    EXPECT_NO_THROW(make_cochain(r, skew_complete(p)));
}

TEST(Cohomology, NijenhuisRichardsonBracketOfBracketIsZero)
{
    // ⟦ρ, ρ⟧ = 0 encodes Jacobi.
    const LiePseudoalgebra g = load_model(fixture("virasoro")).algebra("Vir");
    EXPECT_TRUE(nr_bracket(g.bracket, g.bracket).is_zero());
    const LiePseudoalgebra s = load_model(fixture("sl2")).algebra("sl2");
    EXPECT_TRUE(nr_bracket(s.bracket, s.bracket).is_zero());
}

TEST(Cohomology, DglaDifferentialSquaresToZero)
{
    Rng rng(11);
    const Model m = load_model(fixture("aff1_semidirect"));
    const DgLa g = build_dgla(m.algebra("T"), m.algebra("aff1"));
    const ModuleMap phi = random_module_map(rng, g.L.module, g.M.module, 2);
    const GradedElement b = embed_degree_zero(g, phi);
    EXPECT_EQ(extract_degree_zero(g, b), phi);
    EXPECT_TRUE(g.d(g.d(b)).is_zero());
}
