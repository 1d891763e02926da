#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace coursewise {

inline constexpr int kDefaultGradeThreshold = 50;
inline constexpr const char* kCsvHeader = "student_id,major,semester,course_id,grade";

// One registration row.
struct Enrollment {
    std::string student_id;
    std::string major;
    std::string semester;
    std::string course_id;
    int grade = 0;

    friend bool operator==(const Enrollment&, const Enrollment&) = default;
};

struct StudentProfile {
    std::string student_id;
    std::string major;
    std::set<std::string> passed_courses;
};

// Courses one student passed in one semester. items is sorted by byte order
// and never empty.
struct Transaction {
    std::uint64_t tid = 0;
    std::string student_id;
    std::string semester;
    std::vector<std::string> items;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct TransactionDB {
    std::vector<Transaction> transactions;  // tids are 1..n in order
    std::vector<std::string> item_universe;  // sorted union of all items

    std::size_t size() const { return transactions.size(); }
    bool empty() const { return transactions.empty(); }
};

/// Reads the registration CSV. The first line must be exactly kCsvHeader;
/// blank lines are skipped and every field is whitespace-trimmed. Throws
/// ParseError naming the offending line on the first bad row (column count,
/// grade not an integer in [0, 100], empty field, or a repeated
/// (student, semester, course) triple).
std::vector<Enrollment> parse_records(std::istream& in);
std::vector<Enrollment> parse_records_file(const std::string& path);

void write_records(std::ostream& out, const std::vector<Enrollment>& records);

/// Throws UnknownStudentError if the student has no rows, DataError if the
/// student's rows name more than one major.
StudentProfile build_profile(const std::vector<Enrollment>& records, const std::string& student_id,
                             int grade_threshold = kDefaultGradeThreshold);

/// One transaction per (student of `major`, semester) holding the courses
/// passed with grade >= grade_threshold. Semesters with no passing course are
/// dropped. Ordered by student_id, then by first appearance of the semester
/// in `records`.
TransactionDB build_transactions(const std::vector<Enrollment>& records, const std::string& major,
                                 int grade_threshold = kDefaultGradeThreshold);

}  // namespace coursewise
