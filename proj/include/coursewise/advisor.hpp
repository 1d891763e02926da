#pragma once

#include <string>
#include <vector>

#include "coursewise/apriori.hpp"
#include "coursewise/ingest.hpp"

namespace coursewise {

struct Suggestion {
    std::string course_id;
    Ratio confidence;  // equals best_rule.confidence
    AssociationRule best_rule;
};

struct AdviceReport {
    std::string student_id;
    std::string major;
    MiningParams params;
    int grade_threshold = kDefaultGradeThreshold;
    std::vector<AssociationRule> kept_rules;  // filtered and ranked
    std::vector<Suggestion> suggestions;      // confidence non-increasing, distinct courses
};

/// Tailors mined rules to one student:
///  - a rule whose antecedent holds a course the student has not passed is dropped;
///  - passed courses are removed from the consequent, and the rule is dropped
///    if nothing is left;
///  - support and confidence are carried over unchanged;
///  - rules that coincide after rewriting collapse to the best-ranked one.
/// Output keeps the input order of first occurrence.
std::vector<AssociationRule> filter_rules(const std::vector<AssociationRule>& rules,
                                          const StudentProfile& profile);

std::vector<AssociationRule> rank_rules(std::vector<AssociationRule> rules);

/// Consequent courses in order of first appearance in `ranked`, each paired
/// with the rule that first recommended it.
std::vector<Suggestion> extract_suggestions(const std::vector<AssociationRule>& ranked,
                                            const StudentProfile& profile);

/// Full pipeline: profile, the student's major's transactions, mining, rule
/// generation, filtering, ranking, extraction.
AdviceReport advise(const std::vector<Enrollment>& records, const std::string& student_id,
                    const MiningParams& params, int grade_threshold = kDefaultGradeThreshold);

/// Same as advise() but against rules mined earlier. Rules below the
/// thresholds in `params` are ignored.
AdviceReport advise_from_rules(const std::vector<Enrollment>& records, const std::string& student_id,
                               const std::vector<AssociationRule>& rules, const MiningParams& params,
                               int grade_threshold = kDefaultGradeThreshold);

}  // namespace coursewise
