#include "coursewise/advisor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace coursewise {

std::vector<AssociationRule> filter_rules(const std::vector<AssociationRule>& rules,
                                          const StudentProfile& profile) {
    const auto& passed = profile.passed_courses;
    auto was_passed = [&passed](const std::string& course) { return passed.contains(course); };

    std::vector<AssociationRule> kept;
    std::map<std::pair<ItemList, ItemList>, std::size_t> slot;
    for (const auto& rule : rules) {
        if (!std::all_of(rule.antecedent.begin(), rule.antecedent.end(), was_passed)) continue;

        AssociationRule rewritten = rule;
        std::erase_if(rewritten.consequent, was_passed);
        if (rewritten.consequent.empty()) continue;

        auto [it, inserted] = slot.try_emplace({rewritten.antecedent, rewritten.consequent}, kept.size());
        if (inserted) {
            kept.push_back(std::move(rewritten));
        } else if (rule_order(rewritten, kept[it->second])) {
            kept[it->second] = std::move(rewritten);
        }
    }
    return kept;
}

std::vector<AssociationRule> rank_rules(std::vector<AssociationRule> rules) {
    std::stable_sort(rules.begin(), rules.end(), rule_order);
    return rules;
}

std::vector<Suggestion> extract_suggestions(const std::vector<AssociationRule>& ranked,
                                            const StudentProfile& profile) {
    std::vector<Suggestion> out;
    std::set<std::string> seen;
    for (const auto& rule : ranked) {
        for (const auto& course : rule.consequent) {
            if (profile.passed_courses.contains(course)) continue;
            if (seen.insert(course).second) out.push_back(Suggestion{course, rule.confidence, rule});
        }
    }
    return out;
}

AdviceReport advise_from_rules(const std::vector<Enrollment>& records, const std::string& student_id,
                               const std::vector<AssociationRule>& rules, const MiningParams& params,
                               int grade_threshold) {
    params.validate();
    const StudentProfile profile = build_profile(records, student_id, grade_threshold);

    std::vector<AssociationRule> admissible;
    for (const auto& rule : rules) {
        if (compare_value(rule.support, params.min_support) >= 0 &&
            compare_value(rule.confidence, params.min_confidence) >= 0) {
            admissible.push_back(rule);
        }
    }

    AdviceReport report;
    report.student_id = student_id;
    report.major = profile.major;
    report.params = params;
    report.grade_threshold = grade_threshold;
    report.kept_rules = rank_rules(filter_rules(admissible, profile));
    report.suggestions = extract_suggestions(report.kept_rules, profile);
    return report;
}

AdviceReport advise(const std::vector<Enrollment>& records, const std::string& student_id,
                    const MiningParams& params, int grade_threshold) {
    params.validate();
    const StudentProfile profile = build_profile(records, student_id, grade_threshold);
    const TransactionDB db = build_transactions(records, profile.major, grade_threshold);
    const FrequentItemsets fis = mine_frequent(db, params);
    return advise_from_rules(records, student_id, generate_rules(fis, params, db.size()), params,
                             grade_threshold);
}

}  // namespace coursewise
