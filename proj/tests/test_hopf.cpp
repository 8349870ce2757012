#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;

TEST(Scalar, RationalArithmetic)
{
    const Field q = Field::rationals();
    EXPECT_EQ(q.parse_scalar("6/4").to_string(), "3/2");
    EXPECT_EQ((q.parse_scalar("1/2") + q.parse_scalar("1/3")).to_string(), "5/6");
    EXPECT_TRUE((q.from_int(3) * q.from_int(3).inverse()).is_one());
}

TEST(Scalar, PrimeFieldUsesSymmetricRepresentative)
{
    const Field f5 = Field::prime(5);
    EXPECT_EQ(f5.from_int(-1).to_string(), "-1");
    EXPECT_EQ(f5.from_int(-1).residue(), 4);
    EXPECT_EQ(Field::prime(7).from_int(3).inverse().to_string(), "-2");
    EXPECT_EQ(f5.parse_scalar("1/2"), f5.from_int(3));
}

TEST(Scalar, RejectsBadFields)
{
    EXPECT_THROW(Field::prime(4), Error);
    EXPECT_THROW(Field::prime(2), Error);
    EXPECT_THROW(Field::rationals().zero() + Field::prime(5).one(), Error);
    EXPECT_EQ(Field::parse("F_7"), Field::prime(7));
    EXPECT_TRUE(Field::parse("Q").is_rational());
}

TEST(Hopf, PolynomialCoproductAndAntipode)
{
    const HopfAlgebra h = HopfAlgebra::polynomial(Field::rationals(), {"d"});
    const HopfElement d = HopfElement::generator(h, 0);
    EXPECT_EQ((d * d).render(), "d^2");
    EXPECT_EQ(comul(d * d).render(), "(d^2 ⊗ 1) + 2*(d ⊗ d) + (1 ⊗ d^2)");
    EXPECT_EQ(antipode(d * d * d).render(), "-d^3");
    EXPECT_TRUE(counit(d).is_zero());
    EXPECT_TRUE(counit(HopfElement::one(h)).is_one());
}

TEST(Hopf, GroupAntipodeIsInverse)
{
    const Field q = Field::rationals();
    const HopfAlgebra g = HopfAlgebra::group(q, {"e", "g", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    Monomial m;
    ASSERT_TRUE(g.lookup("g", m));
    const HopfElement s = antipode(HopfElement(g, m, q.one()));
    EXPECT_EQ(g.render(s.terms().begin()->first), "g2");
    EXPECT_EQ(g.dimension(), 3u);
}

TEST(Hopf, RejectsNonGroupTables)
{
    const Field q = Field::rationals();
    EXPECT_THROW(HopfAlgebra::group(q, {"e", "g"}, {{0, 1}, {1, 1}}), Error);
    EXPECT_THROW(HopfAlgebra::group(q, {"e", "g"}, {{0, 1}}), Error);
}

TEST(Hopf, AxiomsHoldForAllKinds)
{
    const Field q = Field::rationals();
    EXPECT_TRUE(check_hopf_axioms(HopfAlgebra::trivial(q)).passed());
    EXPECT_TRUE(check_hopf_axioms(HopfAlgebra::trivial(Field::prime(3))).passed());
    EXPECT_TRUE(check_hopf_axioms(HopfAlgebra::group(q, {"e", "g"}, {{0, 1}, {1, 0}})).passed());
    EXPECT_TRUE(check_hopf_axioms(HopfAlgebra::polynomial(q, {"d1", "d2"}), 3).passed());
}

TEST(Hopf, IteratedCoproductOfPrimitive)
{
    const HopfAlgebra h = HopfAlgebra::polynomial(Field::rationals(), {"d"});
    const HopfElement d = HopfElement::generator(h, 0);
    EXPECT_EQ(iterated_comul(d, 3).render(), "(d ⊗ 1 ⊗ 1) + (1 ⊗ d ⊗ 1) + (1 ⊗ 1 ⊗ d)");
}
