#include "coursewise/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace coursewise {

namespace {

// std::uniform_*_distribution output differs between standard libraries;
// mt19937_64's raw sequence does not, so draws are derived from it directly.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
    int between(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

std::string semester_label(int term) {
    static constexpr const char* kTerms[] = {"First", "Second", "Summer"};
    const int year = 2008 + term / 3;
    return std::string(kTerms[term % 3]) + "-Semester-" + std::to_string(year) + "-" + std::to_string(year + 1);
}

struct Taken {
    int course;
    int grade;
};

}  // namespace

void SynthParams::validate() const {
    auto check_range = [](const IntRange& r, const char* name) {
        if (r.min < 1 || r.max < r.min) {
            throw std::invalid_argument(std::string(name) + " range must satisfy 1 <= min <= max");
        }
    };
    if (num_students < 1) throw std::invalid_argument("num_students must be at least 1");
    if (majors.empty()) throw std::invalid_argument("at least one major is required");
    for (const auto& m : majors) {
        if (m.empty() || m.find(',') != std::string::npos) throw std::invalid_argument("bad major '" + m + "'");
    }
    check_range(semesters_per_student, "semesters_per_student");
    check_range(courses_per_semester, "courses_per_semester");
    if (course_pool_size < 1 || course_pool_size > 9999) {
        throw std::invalid_argument("course_pool_size must be in [1, 9999]");
    }
    if (!(pass_rate >= 0.0 && pass_rate <= 1.0)) throw std::invalid_argument("pass_rate outside [0, 1]");
    for (const auto& c : clusters) {
        if (c.courses.size() < 2) throw std::invalid_argument("a cluster needs at least two courses");
        if (!(c.boost >= 0.0 && c.boost <= 1.0)) throw std::invalid_argument("cluster boost outside [0, 1]");
    }
}

std::string synth_course_id(std::size_t major_index, int course_index) {
    return std::to_string(1710000 + 10000 * major_index + static_cast<std::size_t>(course_index));
}

std::vector<Enrollment> generate_records(const SynthParams& params) {
    params.validate();
    Draw draw(params.seed);

    const int pool = params.course_pool_size;
    // The pool is laid out as a study plan: course i belongs to plan slot
    // i * slots / pool, and popularity decays with rank inside its slot.
    const int slots = params.semesters_per_student.max;
    std::vector<int> slot_of(pool);
    std::vector<double> popularity(pool);
    for (int i = 0; i < pool; ++i) {
        slot_of[i] = static_cast<int>(static_cast<long>(i) * slots / pool);
        const int slot_start = static_cast<int>((static_cast<long>(slot_of[i]) * pool + slots - 1) / slots);
        popularity[i] = 1.0 / (i - slot_start + 1.0);
    }

    const std::size_t num_majors = params.majors.size();
    std::vector<std::vector<std::string>> course_ids(num_majors);
    for (std::size_t m = 0; m < num_majors; ++m) {
        for (int i = 0; i < pool; ++i) course_ids[m].push_back(synth_course_id(m, i));
    }

    // Cluster courses resolved to pool indices per major; foreign ids never trigger.
    struct LocalCluster {
        int anchor;
        std::vector<int> members;
        double boost;
    };
    std::vector<std::vector<LocalCluster>> local(num_majors);
    for (std::size_t m = 0; m < num_majors; ++m) {
        auto index_of = [&](const std::string& id) -> int {
            auto it = std::find(course_ids[m].begin(), course_ids[m].end(), id);
            return it == course_ids[m].end() ? -1 : static_cast<int>(it - course_ids[m].begin());
        };
        for (const auto& c : params.clusters) {
            const int anchor = index_of(c.courses.front());
            if (anchor < 0) continue;
            LocalCluster lc{anchor, {}, c.boost};
            for (std::size_t i = 1; i < c.courses.size(); ++i) {
                if (int idx = index_of(c.courses[i]); idx >= 0 && idx != anchor) lc.members.push_back(idx);
            }
            local[m].push_back(std::move(lc));
        }
    }

    std::vector<Enrollment> records;
    for (int s = 0; s < params.num_students; ++s) {
        const std::string student_id = std::to_string(20100001 + s);
        const auto major = static_cast<std::size_t>(draw.between(0, static_cast<int>(num_majors) - 1));
        const int num_semesters = draw.between(params.semesters_per_student.min, params.semesters_per_student.max);
        const int first_term = draw.between(0, 8);
        std::vector<bool> passed_before(pool, false);

        for (int term = first_term; term < first_term + num_semesters; ++term) {
            const int want = draw.between(params.courses_per_semester.min, params.courses_per_semester.max);
            std::vector<Taken> semester;
            std::vector<bool> in_semester(pool, false);

            std::vector<double> weight(pool);
            for (int i = 0; i < pool; ++i) {
                const double distance = std::abs(slot_of[i] - (term - first_term));
                weight[i] = popularity[i] / std::pow(1.0 + distance, 3.0);
            }

            for (int n = 0; n < want; ++n) {
                double total = 0.0;
                for (int i = 0; i < pool; ++i) {
                    if (!passed_before[i] && !in_semester[i]) total += weight[i];
                }
                if (total <= 0.0) break;
                double target = draw.unit() * total;
                int pick = -1;
                for (int i = 0; i < pool; ++i) {
                    if (passed_before[i] || in_semester[i]) continue;
                    pick = i;
                    target -= weight[i];
                    if (target < 0.0) break;
                }
                in_semester[pick] = true;
                const bool passed = draw.chance(params.pass_rate);
                semester.push_back(Taken{pick, passed ? draw.between(50, 100) : draw.between(0, 49)});
            }

            for (const auto& cluster : local[major]) {
                auto anchor = std::find_if(semester.begin(), semester.end(),
                                           [&](const Taken& t) { return t.course == cluster.anchor; });
                if (anchor == semester.end()) continue;
                const int anchor_grade = anchor->grade;
                for (int member : cluster.members) {
                    if (!draw.chance(cluster.boost)) continue;
                    if (in_semester[member]) {
                        for (auto& t : semester) {
                            if (t.course == member) t.grade = anchor_grade;
                        }
                    } else {
                        in_semester[member] = true;
                        semester.push_back(Taken{member, anchor_grade});
                    }
                }
            }

            const std::string label = semester_label(term);
            for (const auto& t : semester) {
                if (t.grade >= kDefaultGradeThreshold) passed_before[t.course] = true;
                records.push_back(
                    Enrollment{student_id, params.majors[major], label, course_ids[major][t.course], t.grade});
            }
        }
    }
    return records;
}

}  // namespace coursewise
