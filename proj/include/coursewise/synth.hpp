#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coursewise/ingest.hpp"

namespace coursewise {

struct IntRange {
    int min = 1;
    int max = 1;
};

// A group of courses planted to co-occur. The first course is the anchor:
// whenever a student takes the anchor in a semester, each other member is
// added to that same semester with probability `boost` and receives the
// anchor's grade.
struct CourseCluster {
    std::vector<std::string> courses;
    double boost = 1.0;
};

struct SynthParams {
    int num_students = 1530;
    std::vector<std::string> majors{"CS", "CIS", "SE"};
    IntRange semesters_per_student{3, 5};
    IntRange courses_per_semester{3, 6};
    int course_pool_size = 40;
    double pass_rate = 0.85;
    std::vector<CourseCluster> clusters;
    std::uint64_t seed = 42;

    // Throws std::invalid_argument on empty ranges, pass_rate outside [0, 1],
    // clusters with fewer than two courses or boost outside [0, 1].
    void validate() const;
};

/// Course ids of a major's pool: 7-digit numeric strings, major m owning
/// 1710000 + 10000*m onward. Course 0 of major 0 is "1710000".
std::string synth_course_id(std::size_t major_index, int course_index);

/// Deterministic for a fixed SynthParams (including seed) on every platform.
///
/// Each student draws a major, a run of consecutive semesters, and for each
/// semester a course count. The major's pool is split into
/// semesters_per_student.max plan slots; in their j-th semester a student
/// draws courses without replacement, skipping ones already passed, with
/// weight 1 / ((rank within slot + 1) * (1 + |slot - j|)^3). Students at the
/// same stage therefore share courses, which is what gives the data its
/// frequent itemsets. A passed grade is uniform in [50, 100], a failed one
/// in [0, 49].
///
/// Cluster floor: a member added through a cluster copies the anchor's grade,
/// so at any grade threshold, among transactions containing the anchor the fraction that
/// also contain member X is at least `boost` in expectation, and exactly 1
/// when boost == 1. The mined rule anchor -> X therefore has confidence >=
/// boost (up to sampling noise), and confidence 1/1 when boost == 1.
std::vector<Enrollment> generate_records(const SynthParams& params);

}  // namespace coursewise
