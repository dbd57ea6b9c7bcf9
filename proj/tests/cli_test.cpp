#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "quadboard/cli.hpp"

using namespace quadboard;
using io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Cli, MemberExample) {
    auto r = run({"member", "--t", "5/1", "--x", "3/1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["member"], true);
    EXPECT_EQ(j["witness"], (json{{"n", 1}, {"m", 1}, {"p", 2}, {"q", 1}}));
    EXPECT_EQ(j.begin().key(), "schema_version");

    auto no = json::parse(run({"member", "--t", "3", "--x", "1"}).out);
    EXPECT_EQ(no["member"], false);
    EXPECT_TRUE(no["witness"].is_null());

    auto csv = parse_csv(run({"member", "--t", "-5", "--x", "-4", "--format", "csv"}).out);
    ASSERT_EQ(csv.size(), 2u);
    EXPECT_EQ(csv[1], (std::vector<std::string>{"1", "-5/1", "-4/1", "true", "-1", "2", "3", "1"}));
}

TEST(Cli, BoostAppliesToPoint) {
    auto r = run({"boost", "--p", "2", "--q", "1", "--t", "2", "--x", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["velocity"], "3/5");
    EXPECT_EQ(j["matrix"][0][1], "-3/4");
    EXPECT_EQ(j["determinant"], "1/1");
    EXPECT_EQ(j["image"]["t"], "5/2");
    EXPECT_EQ(j["image"]["x"], "-3/2");
    EXPECT_EQ(j["image"]["member"], true);
    EXPECT_EQ(run({"boost", "--p", "0", "--q", "1"}).code, cli::kUsage);
}

TEST(Cli, Spectrum) {
    auto r = run({"spectrum", "--max-pq", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "schema_version,index,v\n1,0,-3/5\n1,1,0/1\n1,2,3/5\n");
    auto j = json::parse(run({"spectrum", "--max-pq", "2", "--format", "json"}).out);
    EXPECT_EQ(j["velocities"], (json{"-3/5", "0/1", "3/5"}));
}

TEST(Cli, EnumerateTextAndJson) {
    auto r = run({"enumerate", "--P", "2", "--Q", "2", "--start", "R", "--end", "L"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("RRLL R=1 R+=0 R-=1 amplitude=1\n"), std::string::npos);
    EXPECT_NE(r.out.find("RLRL R=3 R+=1 R-=2 amplitude=1*(i*e0)^2\n"), std::string::npos);

    auto j = json::parse(run({"enumerate", "--P", "5", "--Q", "3", "--format", "json"}).out);
    EXPECT_EQ(j["count"], 15);
    EXPECT_EQ(j["sum"]["0"], "1");
    EXPECT_EQ(j["sum"]["2"], "64");
    bool found = false;
    for (const auto& p : j["paths"])
        if (p["path"] == "RRLRRLRL") {
            found = true;
            EXPECT_EQ(p["R"], 5);
            EXPECT_EQ(p["R_plus"], 2);
            EXPECT_EQ(p["R_minus"], 3);
            EXPECT_EQ(p["amplitude"], (json{{"4", "63"}}));
        }
    EXPECT_TRUE(found);
}

TEST(Cli, ExactBothModels) {
    auto q = json::parse(run({"exact", "--P", "2", "--Q", "2", "--t", "1"}).out);
    EXPECT_EQ(q["components"]["psi_mp"]["polynomial"], (json{{"0", "1"}, {"2", "1"}}));
    EXPECT_DOUBLE_EQ(q["components"]["psi_mp"]["re"].get<double>(), 0.984375);
    auto l = json::parse(run({"exact", "--P", "5", "--Q", "3", "--t", "1", "--model", "linear"}).out);
    EXPECT_EQ(l["components"]["psi_mp"]["polynomial"]["4"], "6");
    EXPECT_DOUBLE_EQ(l["eps"].get<double>(), 0.125);
}

TEST(Cli, PropagatorExample) {
    auto r = run({"propagator", "--t", "1", "--x", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_NEAR(j["psi_mp"]["re"].get<double>(), static_cast<double>(oracle::bessel_j(0, 1)), 1e-15);
    EXPECT_NEAR(j["psi_pp"]["im"].get<double>(), 0.4400505857449335, 1e-15);
    EXPECT_EQ(run({"propagator", "--t", "1", "--x", "1"}).code, cli::kDomain);
}

TEST(Cli, ConvergeExampleAndRoundTrip) {
    auto r = run({"converge", "--model", "quadratic", "--v", "0", "--t", "2", "--p", "4,8,16,32,64"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 21u);
    EXPECT_EQ(rows[0].size(), 12u);
    EXPECT_EQ(rows[0][0], "schema_version");
    EXPECT_EQ(rows[0][5], "component");
    double last = 1e9;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][5] != "psi_mp") continue;
        double err = std::stod(rows[i][10]);
        EXPECT_LT(err, last);
        last = err;
    }
    // printed reals re-parse to the same doubles, which print identically again
    auto sweep = convergence_sweep(2, Rational(0), {4, 8, 16, 32, 64});
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        EXPECT_EQ(std::stod(rows[i + 1][6]), static_cast<double>(sweep[i].exact.real()));
        EXPECT_EQ(io::format_real(std::stod(rows[i + 1][10])), rows[i + 1][10]);
        EXPECT_EQ(parse_rational(rows[i + 1][4]), Rational(0));
    }
}

TEST(Cli, ConvergeLinearWarnsOnSkippedSizes) {
    auto r = run({"converge", "--model", "linear", "--v", "0", "--t", "2", "--n", "8,9"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find(",skipped,"), std::string::npos);
    EXPECT_EQ(run({"converge", "--model", "linear", "--v", "0", "--t", "2", "--p", "8"}).code, cli::kUsage);
    EXPECT_EQ(run({"converge", "--v", "1/2", "--t", "2", "--p", "8"}).code, cli::kDomain);
}

TEST(Cli, DiracCheckReport) {
    auto r = run({"dirac-check", "--t0", "0.5", "--t1", "3", "--xfrac", "0.4", "--h", "0.02"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
    double ratio = j["psi1"]["ratio"];
    EXPECT_GE(ratio, 3.5);
    EXPECT_LE(ratio, 4.5);
    EXPECT_EQ(run({"dirac-check", "--h", "0.5"}).code, cli::kDomain);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"member", "--t", "abc", "--x", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"propagator", "--t", "1e", "--x", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"enumerate", "--P", "13", "--Q", "12"}).code, cli::kResource);
    EXPECT_EQ(run({"enumerate", "--P", "5", "--Q", "5", "--cap", "9"}).code, cli::kResource);
    EXPECT_EQ(run({"enumerate", "--P", "2", "--Q", "2", "--start", "X"}).code, cli::kUsage);
    EXPECT_EQ(run({"exact", "--P", "2", "--Q", "2", "--t", "-1"}).code, cli::kDomain);
    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("converge"), std::string::npos);
}

TEST(Cli, IdenticalConfigsGiveIdenticalFiles) {
    auto dir = std::filesystem::temp_directory_path() / "quadboard_cli_test";
    std::filesystem::create_directories(dir);
    auto a = dir / "a.csv", b = dir / "b.csv";
    std::vector<std::string> args{"converge", "--v", "3/5", "--t", "2", "--p", "2,4,8,16", "--threads", "2"};
    auto args_a = args, args_b = args;
    args_a.insert(args_a.end(), {"--out", a.string()});
    args_b.insert(args_b.end(), {"--out", b.string()});
    ASSERT_EQ(run(args_a).code, 0);
    ASSERT_EQ(run(args_b).code, 0);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
    std::filesystem::remove_all(dir);
}

TEST(Cli, BinaryExitCodes) {
    const std::string exe = QUADBOARD_CLI_PATH;
    auto status = [&](const std::string& args) {
        int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("member --t 5/1 --x 3/1"), 0);
    EXPECT_EQ(status("member --t 5/1"), 2);
    EXPECT_EQ(status("propagator --t 1 --x 2"), 3);
    EXPECT_EQ(status("enumerate --P 20 --Q 20"), 4);
}
