#include "graph_euler/cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace graph_euler;
using namespace graph_euler::cli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("graph_euler_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    CliResult run(std::vector<std::string> args, bool with_cache = true)
    {
        if (with_cache) {
            args.push_back("--cache-dir");
            args.push_back(dir_.string());
        }
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string read(const fs::path& p)
    {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, ComputeMarkdownTable)
{
    const auto r = run({"compute", "--max-n", "6"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("| n | chi(Out F_n) | e(Out F_n) | e_odd(Out F_n) |"), std::string::npos);
    EXPECT_NE(r.out.find("| 4 | -161/5760 | 2 | -1 |"), std::string::npos);
    EXPECT_NE(r.out.find("| 6 | -120257/580608 | 2 | -1 |"), std::string::npos);
}

TEST_F(CliTest, ComputeCsvAndKinds)
{
    const auto r = run({"compute", "--max-n", "5", "--format", "csv", "--kind", "integral"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out, "n,e\n2,1\n3,1\n4,2\n5,1\n");
}

TEST_F(CliTest, ComputeJson)
{
    const auto r = run({"compute", "--max-n", "4", "--format", "json", "--kind", "rational,odd"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 3u);
    EXPECT_EQ(doc["rows"][2]["n"], 4);
    EXPECT_EQ(doc["rows"][2]["chi"]["num"], "-161");
    EXPECT_EQ(doc["rows"][2]["chi"]["den"], "5760");
    EXPECT_EQ(doc["rows"][2]["eOdd"], "-1");
    EXPECT_FALSE(doc["rows"][2].contains("e"));
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(run({"compute", "--max-n", "1"}).code, exit_usage);
    EXPECT_EQ(run({"compute"}).code, exit_usage);
    EXPECT_EQ(run({"compute", "--max-n", "4", "--format", "xml"}).code, exit_usage);
    EXPECT_EQ(run({"compute", "--max-n", "4", "--kind", "weird"}).code, exit_usage);
    EXPECT_EQ(run({}, false).code, exit_usage);
    EXPECT_EQ(run({"crosscheck", "--max-n", "7"}).code, exit_usage);
    EXPECT_EQ(run({"oracle", "--max-chi", "3"}).code, exit_usage);
    const auto help = run({"--help"}, false);
    EXPECT_EQ(help.code, exit_ok);
    EXPECT_NE(help.out.find("compute"), std::string::npos);
}

TEST_F(CliTest, CacheIsWrittenAndReused)
{
    ASSERT_EQ(run({"compute", "--max-n", "7"}).code, exit_ok);
    const auto manifest = nlohmann::json::parse(read(dir_ / "manifest.json"));
    EXPECT_EQ(manifest["version"], 1);
    for (const char* name : {"ehat-even", "ehat-odd", "chihat"}) {
        ASSERT_TRUE(manifest["entries"].contains(name)) << name;
        EXPECT_EQ(manifest["entries"][name]["truncation"]["uMax"], 12);
        EXPECT_EQ(content_hash(read(dir_ / manifest["entries"][name]["path"].get<std::string>())),
                  manifest["entries"][name]["contentHash"]);
    }
    // A smaller request is served from the cache and leaves it untouched.
    const auto before = read(dir_ / "ehat-even.json");
    const auto r = run({"compute", "--max-n", "5"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(r.err.empty()) << r.err;
    EXPECT_EQ(read(dir_ / "ehat-even.json"), before);
}

TEST_F(CliTest, HashMismatchTriggersRecompute)
{
    ASSERT_EQ(run({"compute", "--max-n", "5"}).code, exit_ok);
    {
        std::ofstream f(dir_ / "ehat-even.json", std::ios::app);
        f << " ";
    }
    const auto r = run({"compute", "--max-n", "5", "--kind", "integral"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.err.find("content hash"), std::string::npos);
    EXPECT_NE(r.out.find("| 4 | 2 |"), std::string::npos);
}

TEST_F(CliTest, TamperedCacheValuesFailConsistency)
{
    ASSERT_EQ(run({"compute", "--max-n", "5"}).code, exit_ok);
    // Replace the cached e_hat with a sequence that is not integral but keep
    // the manifest consistent, as if an older buggy run had written it.
    Session s{SeriesCache(dir_, true, std::cerr), 1, std::cout, std::cerr};
    s.cache.store("ehat-even", hbar_series({1, 1, make_rational(3, 2), 4, 6}));
    const auto r = run({"compute", "--max-n", "5", "--kind", "integral"});
    EXPECT_EQ(r.code, exit_consistency);
}

TEST_F(CliTest, CorruptManifestExitsThree)
{
    fs::create_directories(dir_);
    {
        std::ofstream f(dir_ / "manifest.json");
        f << "{not json";
    }
    EXPECT_EQ(run({"compute", "--max-n", "3"}).code, exit_cache_corrupt);
    {
        std::ofstream f(dir_ / "manifest.json");
        f << R"({"version": 1, "entries": {"ehat-even": {"path": 3}}})";
    }
    EXPECT_EQ(run({"compute", "--max-n", "3"}).code, exit_cache_corrupt);
    // --no-cache ignores the directory entirely.
    EXPECT_EQ(run({"compute", "--max-n", "3", "--no-cache"}).code, exit_ok);
}

TEST_F(CliTest, Crosscheck)
{
    const auto r = run({"crosscheck", "--max-n", "3"});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("e_hat(3): forests 4, legged forests 4  ok"), std::string::npos);
}

TEST_F(CliTest, Asymptotics)
{
    const auto r = run({"asymptotics", "--max-n", "30", "--format", "csv"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("# target_even,0.7788"), std::string::npos);
    EXPECT_NE(r.out.find("# target_odd,1.2840"), std::string::npos);
    std::istringstream lines(r.out);
    std::string line;
    int data = 0;
    while (std::getline(lines, line))
        data += !line.empty() && std::isdigit(static_cast<unsigned char>(line[0]));
    EXPECT_EQ(data, 30);
}

TEST_F(CliTest, OracleWritesCensus)
{
    const auto census = dir_ / "census.json";
    fs::create_directories(dir_);
    const auto r = run({"oracle", "--max-chi", "1", "--census", census.string()});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
    EXPECT_EQ(nlohmann::json::parse(read(census)).size(), 5u);
}

TEST(CacheUnit, ContentHashIsFnv1a)
{
    EXPECT_EQ(content_hash(""), "cbf29ce484222325");
    EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
}

TEST_F(CliTest, CacheHitMatchesColdComputeByteForByte)
{
    const auto cold = run({"compute", "--max-n", "7", "--format", "json"});
    const auto warm = run({"compute", "--max-n", "7", "--format", "json"});
    const auto uncached = run({"compute", "--max-n", "7", "--format", "json", "--no-cache"});
    ASSERT_EQ(cold.code, exit_ok);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, uncached.out);
}

TEST_F(CliTest, SmallestTable)
{
    const auto r = run({"compute", "--max-n", "2", "--format", "csv"});
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "n,chi,e,e_odd\n2,-1/24,1,0\n");
}

TEST_F(CliTest, OracleRecoversFromCorruptedSeries)
{
    ASSERT_EQ(run({"compute", "--max-n", "3"}).code, exit_ok);
    {
        std::ofstream f(dir_ / "ehat-odd.json", std::ios::trunc);
        f << R"({"version":1,"uMax":4,"xWeightMax":null,"terms":[[0,[],"1","1"],[2,[],"5","1"]]})";
    }
    const auto r = run({"oracle", "--max-chi", "1"});
    EXPECT_EQ(r.code, exit_ok) << r.out;
    EXPECT_NE(r.err.find("content hash"), std::string::npos);
}
