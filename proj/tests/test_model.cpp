#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_model(text, "t.model");
    } catch (const ModelError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

class FixtureRoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureRoundTrip, RenderParsesBackEqual)
{
    const Model m = load_model(fixture(GetParam()));
    EXPECT_EQ(parse_model(render_model(m)), m);
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, FixtureRoundTrip,
                         ::testing::Values("ab2_h3", "h3_f5", "sl2", "virasoro", "cur_sl2_z2", "aff1_semidirect"));

TEST(Model, MinimalDocument)
{
    const Model m = parse_model(R"({"scalars": "F7", "hopf": {"kind": "polynomial", "generators": ["d1", "d2"]},
                                    "modules": {"V": ["v"]}})");
    EXPECT_EQ(m.field, Field::prime(7));
    EXPECT_EQ(m.hopf.names().size(), 2u);
    EXPECT_TRUE(m.algebra("V").is_abelian());
}

TEST(Model, MultiVariableLambda)
{
    const Model m = parse_model(R"({"scalars": "Q", "hopf": {"kind": "polynomial", "generators": ["d1", "d2"]},
        "modules": {"V": ["v"]},
        "brackets": {"V": {"module": "V", "lambda": {"v,v": "d1 v + 2*lambda_d1 v"}}}})");
    const LiePseudoalgebra v = m.algebra("V");
    EXPECT_EQ(v.bracket.value(Tuple{0, 0}).render(v.module), "-(d1 | 1) v + (1 | d1) v");
    EXPECT_TRUE(check_lie(v).passed());
}

TEST(Model, ErrorsNamePathAndColumn)
{
    const std::string head = R"({"scalars": "Q", "hopf": {"kind": "trivial"}, "modules": {"L": ["x1", "x2"]},)";
    const std::string skew = error_of(head + R"( "brackets": {"B": {"module": "L",
        "entries": {"x2,x1": "(1 | 1) x1"}}}})");
    EXPECT_TRUE(contains(skew, "t.model: /brackets/B/entries")) << skew;
    EXPECT_TRUE(contains(skew, "(x2,x1)")) << skew;

    const std::string expr = error_of(head + R"( "brackets": {"B": {"module": "L",
        "entries": {"x1,x2": "(1 | 1) y"}}}})");
    EXPECT_TRUE(contains(expr, "column")) << expr;

    EXPECT_TRUE(contains(error_of(R"({"scalars": "Q", "bogus": 1})"), "bogus"));
    EXPECT_TRUE(contains(error_of("{\"scalars\": \"Q\",\n  oops}"), "t.model:2:"));
    EXPECT_TRUE(contains(error_of(R"({"scalars": "F4", "hopf": {"kind": "trivial"}})"), "/scalars"));
}

TEST(Model, NonSkewTableIsRejected)
{
    const std::string err = error_of(R"({"scalars": "Q", "hopf": {"kind": "trivial"}, "modules": {"L": ["x1", "x2"]},
        "brackets": {"B": {"module": "L", "skew_complete": false,
          "entries": {"x1,x2": "(1 | 1) x2", "x2,x1": "(1 | 1) x2"}}}})");
    EXPECT_TRUE(contains(err, "skew-symmetry violated at (x2,x1)")) << err;
}

TEST(Model, GroupHopfFromTable)
{
    const Model m = load_model(fixture("cur_sl2_z2"));
    EXPECT_EQ(m.hopf.kind(), HopfKind::group);
    EXPECT_EQ(m.hopf.dimension(), 2u);
    EXPECT_THROW(parse_model(R"({"scalars": "Q", "hopf": {"kind": "group", "elements": ["e", "s"],
        "table": [["e", "s"], ["s", "s"]]}})"), ModelError);
}

TEST(Model, PairsAndMaps)
{
    const Model m = load_model(fixture("ab2_h3"));
    EXPECT_EQ(m.map("s3").render(), "x1 ↦ 2*(1) z; x2 ↦ -(1) z");
    EXPECT_THROW(m.map("nope"), Error);
    const AutPair p = m.pair("P2");
    EXPECT_EQ(p.beta, m.map("beta2"));
    EXPECT_EQ(p.alpha, m.map("alpha21"));
}
