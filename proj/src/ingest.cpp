#include "coursewise/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <tuple>

#include "coursewise/error.hpp"

namespace coursewise {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

int parse_grade(std::string_view text, std::size_t line_no) {
    int grade = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), grade);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(line_no, "grade '" + std::string(text) + "' is not an integer");
    }
    if (grade < 0 || grade > 100) {
        throw ParseError(line_no, "grade " + std::to_string(grade) + " outside [0, 100]");
    }
    return grade;
}

}  // namespace

std::vector<Enrollment> parse_records(std::istream& in) {
    static constexpr const char* kColumns[] = {"student_id", "major", "semester", "course_id", "grade"};

    std::vector<Enrollment> records;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> seen;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (!have_header) {
            if (trim(view) != kCsvHeader) {
                throw ParseError(line_no, std::string("expected header '") + kCsvHeader + "'");
            }
            have_header = true;
            continue;
        }
        if (trim(view).empty()) continue;

        const auto fields = split_commas(view);
        if (fields.size() != 5) {
            throw ParseError(line_no, "expected 5 columns, found " + std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (fields[i].empty()) throw ParseError(line_no, std::string("empty ") + kColumns[i]);
        }

        Enrollment e{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                     std::string(fields[3]), parse_grade(fields[4], line_no)};
        auto [it, inserted] = seen.emplace(std::tuple{e.student_id, e.semester, e.course_id}, line_no);
        if (!inserted) {
            throw ParseError(line_no, "duplicate enrollment of student '" + e.student_id + "' in '" +
                                          e.course_id + "' for '" + e.semester + "' (first on line " +
                                          std::to_string(it->second) + ")");
        }
        records.push_back(std::move(e));
    }
    if (in.bad()) throw IoError("read failure");
    if (!have_header) throw ParseError(1, std::string("missing header '") + kCsvHeader + "'");
    return records;
}

std::vector<Enrollment> parse_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_records(in);
}

void write_records(std::ostream& out, const std::vector<Enrollment>& records) {
    out << kCsvHeader << '\n';
    for (const auto& e : records) {
        out << e.student_id << ',' << e.major << ',' << e.semester << ',' << e.course_id << ',' << e.grade
            << '\n';
    }
}

StudentProfile build_profile(const std::vector<Enrollment>& records, const std::string& student_id,
                             int grade_threshold) {
    StudentProfile profile{student_id, {}, {}};
    bool found = false;
    for (const auto& e : records) {
        if (e.student_id != student_id) continue;
        if (!found) {
            profile.major = e.major;
            found = true;
        } else if (e.major != profile.major) {
            throw DataError("student '" + student_id + "' is listed under majors '" + profile.major +
                            "' and '" + e.major + "'");
        }
        if (e.grade >= grade_threshold) profile.passed_courses.insert(e.course_id);
    }
    if (!found) throw UnknownStudentError(student_id);
    return profile;
}

TransactionDB build_transactions(const std::vector<Enrollment>& records, const std::string& major,
                                 int grade_threshold) {
    if (grade_threshold < 0 || grade_threshold > 100) {
        throw std::invalid_argument("grade threshold " + std::to_string(grade_threshold) +
                                    " outside [0, 100]");
    }

    // (student, semester) -> order in which the semester first appears among that student's rows
    std::map<std::pair<std::string, std::string>, std::size_t> semester_rank;
    std::map<std::string, std::size_t> semesters_seen;
    // (student, semester rank) -> passing courses
    std::map<std::pair<std::string, std::size_t>, std::pair<std::string, std::vector<std::string>>> groups;

    for (const auto& e : records) {
        if (e.major != major) continue;
        auto [it, inserted] = semester_rank.try_emplace({e.student_id, e.semester}, 0);
        if (inserted) it->second = semesters_seen[e.student_id]++;
        if (e.grade < grade_threshold) continue;
        auto& group = groups[{e.student_id, it->second}];
        group.first = e.semester;
        group.second.push_back(e.course_id);
    }

    TransactionDB db;
    std::vector<std::string> universe;
    for (auto& [key, group] : groups) {
        auto& courses = group.second;
        std::sort(courses.begin(), courses.end());
        courses.erase(std::unique(courses.begin(), courses.end()), courses.end());
        universe.insert(universe.end(), courses.begin(), courses.end());
        db.transactions.push_back(
            Transaction{db.transactions.size() + 1, key.first, group.first, std::move(courses)});
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    db.item_universe = std::move(universe);
    return db;
}

}  // namespace coursewise
