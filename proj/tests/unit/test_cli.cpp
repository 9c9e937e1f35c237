#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmif_cli/cli.hpp"
#include "cmif_cli/report.hpp"

namespace fs = std::filesystem;
using namespace cmif;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "cmif");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "cmif_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, ScanWritesCsvAndSummary) {
    const fs::path prefix = scratch("scan20");
    const Outcome r = invoke({"scan", "--curve", "j1728-D4", "--xmax", "20", "--seed", "1", "--out", prefix.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"sum_dp\": 16"), std::string::npos) << r.out;
    const std::string csv = slurp(prefix.string() + ".csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,kind,a_p,pi_a,pi_b,N,d_p,e_p");
    EXPECT_NE(csv.find("\n2,bad,0,0,0,0,0,0\n"), std::string::npos);
    EXPECT_NE(csv.find("\n17,ord,"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
    EXPECT_EQ(csv.find('.'), std::string::npos);
    const std::string json = slurp(prefix.string() + ".json");
    for (const char* key : {"\"curve\"", "\"seed\"", "\"xmax\"", "\"checkpoints\"", "\"pi_x\"", "\"ss\"", "\"ord\""}) {
        EXPECT_NE(json.find(key), std::string::npos) << key;
    }
}

TEST(Cli, ScanTinyRange) {
    const fs::path prefix = scratch("scan4");
    const Outcome r = invoke({"scan", "--curve", "j1728-D4", "--xmax", "4", "--out", prefix.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"sum_dp\": 2"), std::string::npos);
    EXPECT_EQ(slurp(prefix.string() + ".csv"), "p,kind,a_p,pi_a,pi_b,N,d_p,e_p\n2,bad,0,0,0,0,0,0\n3,small,0,0,0,4,2,2\n");
}

TEST(Cli, ScanIsByteIdenticalAcrossRunsAndWorkers) {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    ASSERT_EQ(invoke({"scan", "--curve", "j0-D3", "--xmax", "30000", "--seed", "9", "--out", a.string(),
                      "--workers", "1", "--checkpoints", "100,1000"})
                  .code,
              0);
    ASSERT_EQ(invoke({"scan", "--curve", "j0-D3", "--xmax", "30000", "--seed", "9", "--out", b.string(),
                      "--workers", "2", "--checkpoints", "100,1000"})
                  .code,
              0);
    EXPECT_EQ(slurp(a.string() + ".csv"), slurp(b.string() + ".csv"));
    EXPECT_EQ(slurp(a.string() + ".json"), slurp(b.string() + ".json"));
}

TEST(Cli, ScanCustomCurve) {
    const Outcome ok = invoke({"scan", "--custom=-1,0,-1,1", "--xmax", "20"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.out.find("\"sum_dp\": 16"), std::string::npos);
    // Wrong CM order for the model: rejected by the self-validation gate.
    const Outcome bad = invoke({"scan", "--custom=-1,0,-3,1", "--xmax", "20"});
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, BadArguments) {
    EXPECT_EQ(invoke({"scan", "--curve", "nope", "--xmax", "20"}).code, 2);
    EXPECT_EQ(invoke({"scan", "--curve", "j1728-D4"}).code, 2);
    EXPECT_EQ(invoke({"scan", "--xmax", "20"}).code, 2);
    EXPECT_EQ(invoke({"scan", "--curve", "j1728-D4", "--custom=-1,0,-1,1", "--xmax", "20"}).code, 2);
    EXPECT_EQ(invoke({"scan", "--custom", "1,2", "--xmax", "20"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--pmax", "200000"}).code, 2);
    EXPECT_EQ(invoke({"aux", "bt", "--x", "100", "--mu", "2,0", "--alpha", "1,1"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, Verify) {
    const Outcome r = invoke({"verify", "--curve", "j1728-D4", "--pmax", "2000"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("mismatches=0"), std::string::npos);
    const Outcome small = invoke({"verify", "--curve", "j1728-D4", "--pmax", "3"});
    EXPECT_EQ(small.code, 0);
    EXPECT_NE(small.out.find("checked=1 "), std::string::npos);
}

TEST(Cli, VerifyCorruptedTableEntryFails) {
    const fs::path table = scratch("corrupt.txt");
    {
        std::ofstream t(table);
        t << "j1728-bad -1 1 -1 1 2,23\n";  // y^2 = x^3 - x + 1 has no CM by Z[i]
    }
    const Outcome r = invoke({"--table", table.string(), "verify", "--curve", "j1728-bad", "--pmax", "500"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.find("mismatches=0"), std::string::npos);
}

TEST(Cli, Identity) {
    const Outcome r = invoke({"identity", "--curve", "j1728-D4", "--x", "20"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lhs=16 rhs=16"), std::string::npos) << r.out;
}

TEST(Cli, Aux) {
    const Outcome schur = invoke({"aux", "schur", "--t", "3"});
    EXPECT_EQ(schur.code, 0);
    EXPECT_NE(schur.out.find("353/16"), std::string::npos);
    const Outcome wintner = invoke({"aux", "wintner", "--z", "2"});
    EXPECT_NE(wintner.out.find("5/4"), std::string::npos);
    const Outcome bt = invoke({"aux", "bt", "--x", "50", "--mu", "3,0", "--alpha", "1,0"});
    EXPECT_EQ(bt.code, 0);
    EXPECT_NE(bt.out.find("count=5"), std::string::npos);
    const Outcome trivlem = invoke({"aux", "trivlem", "--trials", "1000", "--seed", "7"});
    EXPECT_EQ(trivlem.code, 0);
    EXPECT_NE(trivlem.out.find("1000/1000"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("CMIF_SEED", "123", 1);
    const Outcome r = invoke({"scan", "--curve", "j1728-D4", "--xmax", "20"});
    EXPECT_NE(r.out.find("\"seed\": 123"), std::string::npos);
    ::setenv("CMIF_SEED", "abc", 1);
    EXPECT_EQ(invoke({"scan", "--curve", "j1728-D4", "--xmax", "20"}).code, 2);
    ::unsetenv("CMIF_SEED");
}

TEST(Report, CsvRow) {
    PrimeRecord r;
    r.p = 5;
    r.kind = ReductionKind::GoodOrdinary;
    r.a_p = -2;
    r.pi_a = -1;
    r.pi_b = 2;
    r.n = 8;
    r.d = 2;
    r.e = 4;
    std::ostringstream s;
    cli::write_csv_row(s, r);
    EXPECT_EQ(s.str(), "5,ord,-2,-1,2,8,2,4\n");
}
