#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "coursewise/cli.hpp"
#include "coursewise/rule_io.hpp"
#include "support/generators.hpp"
#include "support/properties.hpp"

namespace coursewise {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "coursewise");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = testing::scratch_dir() + "/" + ::testing::UnitTest::GetInstance()->current_test_info()->name();
        std::filesystem::create_directories(dir_);
        csv_ = path("table1.csv");
        std::ofstream(csv_) << testing::table1_csv();
    }
    std::string path(const std::string& name) const { return dir_ + "/" + name; }

    std::string dir_;
    std::string csv_;
};

TEST_F(CliTest, MineWorkedExample) {
    const auto rules = path("rules.txt");
    const auto r = run({"mine", csv_, "--major", "CS", "--min-support", "0.33", "--min-confidence", "0.7", "--out", rules});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(slurp(rules),
              "D-->F-----100%|support=2/6|confidence=2/2\n"
              "F-->D-----100%|support=2/6|confidence=2/2\n");
    EXPECT_EQ(r.out,
              "transactions: 6\n"
              "item universe: 9\n"
              "min support count: 2\n"
              "frequent itemsets:\n"
              "  level 1: 5\n"
              "  level 2: 1\n"
              "rules: 2\n");
}

TEST_F(CliTest, MineVerboseDumpsTransactions) {
    const auto r = run({"mine", csv_, "--major", "CS", "--out", path("rules.txt"), "-v"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("1 1 First-Semester-2010-2011: A,B\n"), std::string::npos);
    EXPECT_NE(r.out.find("6 2 Summer-Semester-2010-: L,Z\n"), std::string::npos);
}

TEST_F(CliTest, MineRejectsSupportAboveOne) {
    const auto rules = path("never.txt");
    const auto r = run({"mine", csv_, "--major", "CS", "--min-support", "1.1", "--out", rules});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_FALSE(std::filesystem::exists(rules));
}

TEST_F(CliTest, MineUnknownMajorWritesEmptyFile) {
    const auto rules = path("empty.txt");
    const auto r = run({"mine", csv_, "--major", "XX", "--out", rules});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(rules));
    EXPECT_EQ(slurp(rules), "");
}

TEST_F(CliTest, AdvisePrintsPercentLines) {
    std::vector<Enrollment> records;
    for (int s = 0; s < 25; ++s) {
        const std::string id = std::to_string(s);
        records.push_back({id, "CS", "F", "1741500", 70});
        if (s < 12) records.push_back({id, "CS", "F", "801012", 70});
    }
    records.push_back({"me", "CS", "F", "1741500", 90});
    {
        std::ofstream out(path("pct.csv"));
        write_records(out, records);
    }
    // 12 of 26 anchor transactions: 46%
    const auto r = run({"advise", path("pct.csv"), "--student", "me", "--min-support", "0.1", "--min-confidence", "0.3"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(r.out, "801012----46%\n");
}

TEST_F(CliTest, AdviseTopKZero) {
    const auto r = run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1", "--top-k", "0"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "no suggestions\n");
}

TEST_F(CliTest, AdviseTopKTruncates) {
    const auto all = run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1"});
    const auto one = run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1", "--top-k", "1"});
    ASSERT_EQ(all.code, cli::kOk);
    ASSERT_GT(std::count(all.out.begin(), all.out.end(), '\n'), 1);
    EXPECT_EQ(one.out, all.out.substr(0, all.out.find('\n') + 1));
}

TEST_F(CliTest, AdviseStudentWithEverythingPassed) {
    const auto r = run({"advise", csv_, "--student", "2", "--min-support", "1/6", "--min-confidence", "0.1"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "no suggestions\n");
}

TEST_F(CliTest, AdviseUnknownStudent) {
    const auto r = run({"advise", csv_, "--student", "42"});
    EXPECT_EQ(r.code, cli::kUnknownStudent);
    EXPECT_NE(r.err.find("42"), std::string::npos);
}

TEST_F(CliTest, AdviseStructured) {
    const auto r = run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1",
                        "--format", "structured"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["student_id"], "1");
    EXPECT_EQ(doc["params"]["min_support"], "1/6");
    EXPECT_EQ(doc["params"]["min_confidence"], "1/10");
    ASSERT_FALSE(doc["suggestions"].empty());
    EXPECT_TRUE(doc["suggestions"][0]["confidence"].is_string());
    EXPECT_FALSE(doc["kept_rules"].empty());
}

TEST_F(CliTest, AdviseFromRuleFileMatchesDirect) {
    const auto rules = path("rules.txt");
    ASSERT_EQ(run({"mine", csv_, "--major", "CS", "--min-support", "1/6", "--min-confidence", "0.1", "--out", rules}).code,
              cli::kOk);
    const auto direct = run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1"});
    const auto loaded =
        run({"advise", csv_, "--student", "1", "--min-support", "1/6", "--min-confidence", "0.1", "--rules", rules});
    ASSERT_EQ(loaded.code, cli::kOk) << loaded.err;
    EXPECT_EQ(direct.out, loaded.out);
}

TEST_F(CliTest, AdviseBadRuleFile) {
    std::ofstream(path("bad.rules")) << "garbage\n";
    EXPECT_EQ(run({"advise", csv_, "--student", "1", "--rules", path("bad.rules")}).code, cli::kBadInput);
}

TEST_F(CliTest, StatsWorkedExample) {
    const auto r = run({"stats", csv_});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out,
              "enrollments: 17\n"
              "students: 2\n"
              "majors:\n"
              "  CS: 2\n"
              "transactions: 6\n"
              "item universe: 9\n"
              "transaction lengths:\n"
              "  1: 1\n"
              "  2: 3\n"
              "  3: 1\n"
              "  4: 1\n");
}

TEST_F(CliTest, StatsHeaderOnly) {
    std::ofstream(path("empty.csv")) << kCsvHeader << '\n';
    const auto r = run({"stats", path("empty.csv")});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out,
              "enrollments: 0\n"
              "students: 0\n"
              "majors:\n"
              "transactions: 0\n"
              "item universe: 0\n"
              "transaction lengths:\n");
}

TEST_F(CliTest, StatsConflictingMajors) {
    std::ofstream(path("dirty.csv")) << kCsvHeader << "\n1,CS,F,A,60\n1,IT,S,B,60\n";
    EXPECT_EQ(run({"stats", path("dirty.csv")}).code, cli::kBadInput);
}

TEST_F(CliTest, GenIsDeterministic) {
    const auto a = path("a.csv"), b = path("b.csv");
    ASSERT_EQ(run({"gen", "--seed", "42", "--students", "300", "--out", a}).code, cli::kOk);
    ASSERT_EQ(run({"gen", "--seed", "42", "--students", "300", "--out", b}).code, cli::kOk);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a).rfind(kCsvHeader, 0), 0u);
}

TEST_F(CliTest, GenRejectsBadRanges) {
    EXPECT_EQ(run({"gen", "--semesters", "5-2"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--courses", "x"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--cluster", "1710000,1710001:2"}).code, cli::kUsage);
    EXPECT_EQ(run({"gen", "--pass-rate", "-0.5"}).code, cli::kUsage);
}

TEST_F(CliTest, HelpExitsCleanly) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("advise"), std::string::npos);
}

}  // namespace
}  // namespace coursewise
