#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pseudocohom/cli.hpp"
#include "support.hpp"

using namespace pseudocohom;
using namespace testsupport;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "pseudocohom");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(exit_code("pass"), 0);
    EXPECT_EQ(exit_code("found"), 0);
    EXPECT_EQ(exit_code("fail"), 1);
    EXPECT_EQ(exit_code("not-found"), 1);
    EXPECT_EQ(exit_code("inconclusive"), 2);
}

TEST(Cli, InduceReportsExhaustiveSearch)
{
    const Result r = run({"induce", fixture("h3_f5"), "--cocycle", "h3", "--pair", "P1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "not inducible, exhaustive over 25 candidates")) << r.out;
    EXPECT_TRUE(contains(r.out, "verdict: not-found")) << r.out;
}

TEST(Cli, CohomologyDimension)
{
    const Result r = run({"cohomology", fixture("sl2"), "--degree", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "dim H^2 = 0")) << r.out;
    EXPECT_EQ(run({"cohomology", fixture("virasoro"), "--degree", "1"}).code, 3);
}

TEST(Cli, CheckCocycleFindings)
{
    const Result r = run({"check-cocycle", fixture("aff1_semidirect"), "--cocycle", "corrupted"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "deri-iden at (t, a, b)")) << r.out;
}

TEST(Cli, JsonReport)
{
    const std::string path = "test_cli_report.json";
    const Result r = run({"induce", fixture("h3_f5"), "--cocycle", "h3", "--pair", "P2", "--json", path});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    const nlohmann::json j = nlohmann::json::parse(in);
    EXPECT_EQ(j["command"], "induce");
    EXPECT_EQ(j["verdict"], "found");
    EXPECT_TRUE(j["findings"].is_array());
    EXPECT_TRUE(j["witness"].is_string());
}

TEST(Cli, UsageErrorsExitThree)
{
    EXPECT_EQ(run({}).code, 3);
    EXPECT_EQ(run({"frobnicate", fixture("sl2")}).code, 3);
    EXPECT_EQ(run({"induce", fixture("h3_f5"), "--cocycle", "h3"}).code, 3);
    const Result missing = run({"check-algebra", "no/such/file.model"});
    EXPECT_EQ(missing.code, 3);
    EXPECT_TRUE(contains(missing.err, "no/such/file.model")) << missing.err;
}

TEST(Cli, PrintRoundTrips)
{
    const Result r = run({"print", fixture("aff1_semidirect")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse_model(r.out), load_model(fixture("aff1_semidirect")));
}

TEST(Cli, WellsAgreesWithAbelianComputation)
{
    const Result r = run({"wells", fixture("h3_f5"), "--cocycle", "h3", "--pair", "P1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "W(P1) ≠ 0")) << r.out;
}
