#include "coursewise/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coursewise/advisor.hpp"
#include "coursewise/apriori.hpp"
#include "coursewise/error.hpp"
#include "coursewise/ingest.hpp"
#include "coursewise/rule_io.hpp"
#include "coursewise/synth.hpp"

namespace coursewise::cli {

namespace {

// Raised for bad flag values found after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Ratio threshold_flag(const std::string& text, const char* flag) {
    Ratio r;
    try {
        r = Ratio::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (!is_valid_threshold(r)) throw UsageError(std::string(flag) + " must lie in (0, 1], got " + text);
    return r;
}

IntRange range_flag(const std::string& text, const char* flag) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw UsageError(std::string(flag) + ": expected N or MIN-MAX, got '" + text + "'");
        }
        return v;
    };
    const std::string_view view = text;
    const auto dash = view.find('-');
    if (dash == std::string_view::npos) {
        const int v = to_int(view);
        return {v, v};
    }
    return {to_int(view.substr(0, dash)), to_int(view.substr(dash + 1))};
}

// "A,B,C:0.9" -> cluster anchored at A; boost defaults to 1.
CourseCluster cluster_flag(const std::string& text) {
    CourseCluster cluster;
    std::string courses = text;
    if (const auto colon = text.rfind(':'); colon != std::string::npos) {
        courses = text.substr(0, colon);
        try {
            cluster.boost = Ratio::parse(text.substr(colon + 1)).to_double();
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--cluster: ") + e.what());
        }
    }
    std::stringstream ss(courses);
    for (std::string course; std::getline(ss, course, ',');) {
        if (!course.empty()) cluster.courses.push_back(course);
    }
    return cluster;
}

void open_for_write(std::ofstream& file, const std::string& path) {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + path + "'");
}

void finish_write(std::ofstream& file, const std::string& path) {
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

struct MineOptions {
    std::string csv;
    std::string min_support = "0.1";
    std::string min_confidence = "0.5";
    int grade_threshold = kDefaultGradeThreshold;
    std::string major;
    std::string out;
    std::optional<std::size_t> max_len;
    bool verbose = false;
};

struct AdviseOptions {
    std::string csv;
    std::string student;
    std::string min_support = "0.1";
    std::string min_confidence = "0.5";
    int grade_threshold = kDefaultGradeThreshold;
    std::optional<std::size_t> top_k;
    std::string format = "text";
    std::string rules;
    std::optional<std::size_t> max_len;
};

struct GenOptions {
    std::string out;
    std::uint64_t seed = 42;
    int students = 1530;
    std::vector<std::string> majors{"CS", "CIS", "SE"};
    std::string semesters = "3-5";
    std::string courses = "3-6";
    int pool_size = 40;
    double pass_rate = 0.85;
    std::vector<std::string> clusters;
};

struct StatsOptions {
    std::string csv;
    int grade_threshold = kDefaultGradeThreshold;
};

MiningParams mining_params(const std::string& support, const std::string& confidence,
                           std::optional<std::size_t> max_len) {
    MiningParams params;
    params.min_support = threshold_flag(support, "--min-support");
    params.min_confidence = threshold_flag(confidence, "--min-confidence");
    if (max_len && *max_len == 0) throw UsageError("--max-len must be at least 1");
    params.max_itemset_len = max_len;
    return params;
}

int cmd_mine(const MineOptions& opt, std::ostream& out, std::ostream& err) {
    const MiningParams params = mining_params(opt.min_support, opt.min_confidence, opt.max_len);

    const auto records = parse_records_file(opt.csv);
    const TransactionDB db = build_transactions(records, opt.major, opt.grade_threshold);
    if (db.empty()) err << "warning: major '" << opt.major << "' has no transactions; writing an empty rule file\n";

    if (opt.verbose) {
        for (const auto& t : db.transactions) {
            out << t.tid << ' ' << t.student_id << ' ' << t.semester << ": ";
            for (std::size_t i = 0; i < t.items.size(); ++i) out << (i ? "," : "") << t.items[i];
            out << '\n';
        }
    }

    const FrequentItemsets fis = mine_frequent(db, params);
    const auto rules = generate_rules(fis, params, db.size());

    std::ofstream file;
    open_for_write(file, opt.out);
    write_rules(file, rules);
    finish_write(file, opt.out);

    out << "transactions: " << db.size() << '\n';
    out << "item universe: " << db.item_universe.size() << '\n';
    out << "min support count: " << fis.min_count << '\n';
    out << "frequent itemsets:\n";
    for (std::size_t k = 0; k < fis.levels.size(); ++k) {
        out << "  level " << k + 1 << ": " << fis.levels[k].size() << '\n';
    }
    out << "rules: " << rules.size() << '\n';
    return kOk;
}

int cmd_advise(const AdviseOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    const MiningParams params = mining_params(opt.min_support, opt.min_confidence, opt.max_len);
    if (opt.format != "text" && opt.format != "structured") {
        throw UsageError("--format must be 'text' or 'structured'");
    }

    const auto records = parse_records_file(opt.csv);
    AdviceReport report;
    if (opt.rules.empty()) {
        report = advise(records, opt.student, params, opt.grade_threshold);
    } else {
        std::ifstream in(opt.rules);
        if (!in) throw IoError("cannot open '" + opt.rules + "'");
        report = advise_from_rules(records, opt.student, read_rules(in), params, opt.grade_threshold);
    }
    if (opt.top_k && report.suggestions.size() > *opt.top_k) report.suggestions.resize(*opt.top_k);

    if (opt.format == "structured") {
        write_report_json(out, report);
    } else {
        write_suggestions_text(out, report.suggestions);
    }
    return kOk;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    SynthParams params;
    params.num_students = opt.students;
    params.majors = opt.majors;
    params.semesters_per_student = range_flag(opt.semesters, "--semesters");
    params.courses_per_semester = range_flag(opt.courses, "--courses");
    params.course_pool_size = opt.pool_size;
    params.pass_rate = opt.pass_rate;
    params.seed = opt.seed;
    for (const auto& c : opt.clusters) params.clusters.push_back(cluster_flag(c));
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const auto records = generate_records(params);
    if (opt.out.empty()) {
        write_records(out, records);
        return kOk;
    }
    std::ofstream file;
    open_for_write(file, opt.out);
    write_records(file, records);
    finish_write(file, opt.out);
    return kOk;
}

int cmd_stats(const StatsOptions& opt, std::ostream& out, std::ostream& /*err*/) {
    const auto records = parse_records_file(opt.csv);

    std::map<std::string, std::string> major_of;
    for (const auto& e : records) {
        auto [it, inserted] = major_of.try_emplace(e.student_id, e.major);
        if (!inserted && it->second != e.major) {
            throw DataError("student '" + e.student_id + "' is listed under majors '" + it->second + "' and '" +
                            e.major + "'");
        }
    }
    std::map<std::string, std::size_t> students_per_major;
    for (const auto& [student, major] : major_of) ++students_per_major[major];

    std::size_t transactions = 0;
    std::set<std::string> universe;
    std::map<std::size_t, std::size_t> lengths;
    for (const auto& [major, count] : students_per_major) {
        const TransactionDB db = build_transactions(records, major, opt.grade_threshold);
        transactions += db.size();
        universe.insert(db.item_universe.begin(), db.item_universe.end());
        for (const auto& t : db.transactions) ++lengths[t.items.size()];
    }

    out << "enrollments: " << records.size() << '\n';
    out << "students: " << major_of.size() << '\n';
    out << "majors:\n";
    for (const auto& [major, count] : students_per_major) out << "  " << major << ": " << count << '\n';
    out << "transactions: " << transactions << '\n';
    out << "item universe: " << universe.size() << '\n';
    out << "transaction lengths:\n";
    for (const auto& [len, count] : lengths) out << "  " << len << ": " << count << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Course suggestions from association rules mined over registration records", "coursewise"};
    app.require_subcommand(1);

    MineOptions mine;
    auto* mine_cmd = app.add_subcommand("mine", "Mine association rules for one major and write a rule file");
    mine_cmd->add_option("csv", mine.csv, "Registration CSV")->required();
    mine_cmd->add_option("--major", mine.major, "Major whose students form the transactions")->required();
    mine_cmd->add_option("--out", mine.out, "Rule file to write")->required();
    mine_cmd->add_option("--min-support", mine.min_support, "Minimum support in (0, 1], decimal or a/b")
        ->capture_default_str();
    mine_cmd->add_option("--min-confidence", mine.min_confidence, "Minimum confidence in (0, 1]")
        ->capture_default_str();
    mine_cmd->add_option("--grade-threshold", mine.grade_threshold, "Passing grade")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    mine_cmd->add_option("--max-len", mine.max_len, "Longest itemset to mine");
    mine_cmd->add_flag("-v,--verbose", mine.verbose, "Also print the transactions");

    AdviseOptions adv;
    auto* advise_cmd = app.add_subcommand("advise", "Rank suggested courses for one student");
    advise_cmd->add_option("csv", adv.csv, "Registration CSV")->required();
    advise_cmd->add_option("--student", adv.student, "Student to advise")->required();
    advise_cmd->add_option("--min-support", adv.min_support, "Minimum support in (0, 1]")->capture_default_str();
    advise_cmd->add_option("--min-confidence", adv.min_confidence, "Minimum confidence in (0, 1]")
        ->capture_default_str();
    advise_cmd->add_option("--grade-threshold", adv.grade_threshold, "Passing grade")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    advise_cmd->add_option("--top-k", adv.top_k, "Keep at most this many suggestions");
    advise_cmd->add_option("--format", adv.format, "text or structured")->capture_default_str();
    advise_cmd->add_option("--rules", adv.rules, "Use a rule file from 'mine' instead of mining");
    advise_cmd->add_option("--max-len", adv.max_len, "Longest itemset to mine");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic registration CSV");
    gen_cmd->add_option("--out", gen.out, "Output path (stdout when omitted)");
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--students", gen.students, "Number of students")->capture_default_str();
    gen_cmd->add_option("--majors", gen.majors, "Major codes")->delimiter(',')->capture_default_str();
    gen_cmd->add_option("--semesters", gen.semesters, "Semesters per student, N or MIN-MAX")->capture_default_str();
    gen_cmd->add_option("--courses", gen.courses, "Courses per semester, N or MIN-MAX")->capture_default_str();
    gen_cmd->add_option("--pool-size", gen.pool_size, "Courses offered per major")->capture_default_str();
    gen_cmd->add_option("--pass-rate", gen.pass_rate, "Probability of passing a course")->capture_default_str();
    gen_cmd->add_option("--cluster", gen.clusters, "Planted cluster ANCHOR,COURSE...[:BOOST] (repeatable)");

    StatsOptions stats;
    auto* stats_cmd = app.add_subcommand("stats", "Summarize a registration CSV");
    stats_cmd->add_option("csv", stats.csv, "Registration CSV")->required();
    stats_cmd->add_option("--grade-threshold", stats.grade_threshold, "Passing grade")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*mine_cmd) return cmd_mine(mine, out, err);
        if (*advise_cmd) return cmd_advise(adv, out, err);
        if (*gen_cmd) return cmd_gen(gen, out, err);
        return cmd_stats(stats, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownStudentError& e) {
        err << "error: " << e.what() << '\n';
        return kUnknownStudent;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace coursewise::cli
