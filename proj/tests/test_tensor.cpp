#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;

namespace {

struct TensorTest : ::testing::Test {
    HopfAlgebra h = HopfAlgebra::polynomial(Field::rationals(), {"d"});
    FreeModule L{"L", {"x1", "x2"}, h};
};

} // namespace

TEST_F(TensorTest, ParseRenderRoundTrip)
{
    const TensorElement t = parse_tensor("2*(d | 1) x1 - (1 | d) x2", 2, L);
    EXPECT_EQ(t.render(L), "2*(d | 1) x1 - (1 | d) x2");
    EXPECT_EQ(parse_tensor(t.render(L), 2, L), t);
    EXPECT_EQ(parse_tensor("2*d*x1 + x2", 1, L).render(L), "2*(d) x1 + (1) x2");
    EXPECT_EQ(parse_tensor("0", 2, L).render(L), "0");
}

TEST_F(TensorTest, ParseErrorsCarryColumn)
{
    try {
        parse_tensor("2*(d | ) x1", 2, L);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("column 8"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_tensor("(d | 1) y", 2, L), Error);
    EXPECT_THROW(parse_tensor("d x1", 2, L), Error);
}

TEST_F(TensorTest, CanonicalizeMovesModuleCoefficientIntoLegs)
{
    // (1 ⊗ 1) ⊗_H d·x1 = (d ⊗ 1 + 1 ⊗ d) ⊗_H x1.
    const HopfElement d = HopfElement::generator(h, 0);
    const TensorElement v = canonicalize(2, {{HopfTensor::unit(h, 2), TensorElement::module_element(d, 0)}});
    EXPECT_EQ(v, parse_tensor("(d | 1) x1 + (1 | d) x1", 2, L));
}

TEST_F(TensorTest, PermuteLegs)
{
    const TensorElement t = parse_tensor("(d | 1) x1", 2, L);
    EXPECT_EQ(permute_legs(LegPermutation::transposition(2, 0, 1), t), parse_tensor("(1 | d) x1", 2, L));
    const LegPermutation p = LegPermutation::move_first_to(3, 2);
    EXPECT_EQ(p.compose(p.inverse()), LegPermutation::identity(3));
    EXPECT_EQ(LegPermutation::transposition(3, 0, 2).sign(), -1);
}

TEST_F(TensorTest, ModuleMapComposeAndInverse)
{
    const ModuleMap m(L, L, {parse_tensor("2*d*x1 + x2", 1, L), basis_element(L, 1)});
    EXPECT_EQ(m.render(), "x1 ↦ 2*(d) x1 + (1) x2; x2 ↦ (1) x2");
    // Not invertible: the x1 coefficient 2d is not a unit of Q[d].
    EXPECT_FALSE(m.inverse().has_value());
    const ModuleMap u(L, L, {parse_tensor("x1 + d*x2", 1, L), basis_element(L, 1)});
    const auto inv = u.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(u.compose(*inv), ModuleMap::identity(L));
}

TEST_F(TensorTest, SkewCompleteAndCheck)
{
    PolyMap b = PolyMap::uniform(L, 2, L);
    b.set(Tuple{0, 1}, parse_tensor("(d | 1) x1", 2, L));
    const PolyMap full = skew_complete(b);
    EXPECT_EQ(full.value(Tuple{1, 0}), parse_tensor("-(1 | d) x1", 2, L));
    EXPECT_TRUE(check_skew(full).passed());
    b.set(Tuple{1, 0}, parse_tensor("(d | 1) x1", 2, L));
    const CheckReport r = check_skew(b);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.findings.front().locator, (std::vector<std::string>{"x2", "x1"}));
}
