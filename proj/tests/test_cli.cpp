#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using hc::cli::InvariantCache;
using hc::cli::run_command;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(char const* name)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p.string();
}

} // namespace

TEST(Cli, CountWithVerify)
{
    Outcome r = run({"count", "--e", "2", "--n", "2", "--x", "1", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "e,n,X,Z,Zbar,sum_Z_K,sum_Zbar_K,residual\n2,2,1,16,8,32,24,0\n");
    EXPECT_NE(r.err.find("PASS identity residual (2,2,1) = 0"), std::string::npos);
    EXPECT_EQ(r.err.find("FAIL"), std::string::npos);
}

TEST(Cli, PerFieldCsv)
{
    Outcome r = run({"count", "--e", "2", "--n", "2", "--x", "1", "--per-field"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2,2,1,16,8,-4,8,8,,,,,\n"), std::string::npos);
}

TEST(Cli, Examples)
{
    Outcome s = run({"constants", "--what", "schanuel", "--n", "2", "--field", "1,0,1"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("[6.65525898064, 6.65525898065]"), std::string::npos) << s.out;
    Outcome n = run({"numbers", "--degree", "1", "--x", "1"});
    EXPECT_EQ(n.out, "degree,X,count\n1,1,3\n");
    Outcome v = run({"constants", "--what", "vr", "--n", "3"});
    EXPECT_NE(v.out.find("vr,3,8/9,"), std::string::npos);
    Outcome d = run({"delta", "--field", "1,0,1"});
    EXPECT_NE(d.out.find("\"1,0,1\",\"[1, 1]\",1,"), std::string::npos) << d.out;
    Outcome p = run({"pi", "--field", "-2,0,1", "--format", "json"});
    EXPECT_NE(p.out.find("\"pi\": \"2\""), std::string::npos) << p.out;
    Outcome f = run({"fields", "--disc-bound", "23"});
    EXPECT_NE(f.out.find("\n-23,3,2,0,1,0,,,\n"), std::string::npos) << f.out;
}

TEST(Cli, JsonEnclosures)
{
    Outcome r = run({"constants", "--what", "mv-slope", "--n", "1", "--format", "json", "--digits", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"lo\": \"1.2158542\""), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"hi\": \"1.2158543\""), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"count", "--e", "2", "--n", "2", "--x", "1/2"}).code, 2);
    EXPECT_EQ(run({"count", "--e", "2", "--n", "2", "--x", "abc"}).code, 2);
    EXPECT_EQ(run({"count", "--e", "2"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"delta", "--field", "1,2,1"}).code, 2);
    EXPECT_EQ(run({"numbers", "--degree", "4", "--x", "10"}).code, 4);
    EXPECT_EQ(run({"count", "--e", "3", "--n", "2", "--x", "1"}).code, 4);
    EXPECT_EQ(run({"constants", "--what", "schanuel", "--n", "2", "--field", "1,0,1", "--digits", "150",
                   "--precision-bits", "64"})
                  .code,
              3);
}

TEST(Cli, DeterministicOutput)
{
    std::vector<std::string> a{"volume", "--n", "2", "--samples", "200000", "--seed", "9"};
    EXPECT_EQ(run(a).out, run(a).out);
    std::vector<std::string> b{"count", "--e", "1", "--n", "3", "--x", "3/2", "--per-field", "--workers", "3"};
    std::vector<std::string> c{"count", "--e", "1", "--n", "3", "--x", "3/2", "--per-field"};
    EXPECT_EQ(run(b).out, run(c).out);
}

TEST(Cli, EnvironmentAndFlags)
{
    setenv("CENSUS_WORKERS", "0", 1);
    EXPECT_EQ(run({"numbers", "--degree", "2", "--x", "1"}).code, 2);
    EXPECT_EQ(run({"numbers", "--degree", "2", "--x", "1", "--workers", "2"}).code, 0);
    unsetenv("CENSUS_WORKERS");
}

TEST(Cli, CacheRoundTripAndCorruption)
{
    std::string path = temp_path("heightcensus_cli_cache.jsonl");
    std::vector<std::string> args{"--cache", path, "count", "--e", "2", "--n", "2", "--x", "6/5", "--per-field"};
    Outcome first = run(args);
    ASSERT_EQ(first.code, 0);
    InvariantCache c(path);
    EXPECT_EQ(c.malformed_lines(), 0);
    ASSERT_TRUE(c.lookup("census:2:2:6/5").has_value());

    // a tampered value and a truncated line are both rejected
    std::string content;
    {
        std::ifstream in(path);
        std::getline(in, content);
    }
    std::string tampered = content;
    auto pos = tampered.find("\"Z\":\"");
    ASSERT_NE(pos, std::string::npos);
    tampered.insert(pos + 5, "1");
    {
        std::ofstream out(path);
        out << tampered << "\n" << content.substr(0, content.size() / 2) << "\n";
    }
    Outcome second = run(args);
    EXPECT_EQ(second.code, 0);
    EXPECT_EQ(second.out, first.out);
    EXPECT_NE(second.err.find("ignored 2 malformed line(s)"), std::string::npos) << second.err;
    std::filesystem::remove(path);
}

TEST(Cli, VerifySuites)
{
    for (auto const* s : {"heights", "bounds"}) {
        Outcome r = run({"verify", "--suite", s, "--x-list", "1"});
        EXPECT_EQ(r.code, 0) << s << r.out;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
        EXPECT_NE(r.out.find("0 failed"), std::string::npos);
    }
}
