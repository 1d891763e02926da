#include "coursewise/rule_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "coursewise/error.hpp"

namespace coursewise {

namespace {

constexpr std::string_view kArrow = "-->";
constexpr std::string_view kDashes = "-----";

std::string join(const ItemList& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ',';
        out += item;
    }
    return out;
}

ItemList split_items(std::string_view text, std::size_t line_no) {
    ItemList items;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (item.empty()) throw ParseError(line_no, "empty course id in rule");
        items.emplace_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (!(items[i - 1] < items[i])) throw ParseError(line_no, "rule items not strictly sorted");
    }
    return items;
}

Ratio parse_field(std::string_view field, std::string_view key, std::size_t line_no) {
    if (!field.starts_with(key) || field.substr(key.size(), 1) != "=") {
        throw ParseError(line_no, "expected field '" + std::string(key) + "='");
    }
    try {
        auto text = field.substr(key.size() + 1);
        if (text.find('/') == std::string_view::npos) throw std::invalid_argument("missing '/'");
        return Ratio::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string(key) + ": " + e.what());
    }
}

nlohmann::json rule_json(const AssociationRule& rule) {
    return {{"antecedent", rule.antecedent},
            {"consequent", rule.consequent},
            {"support", rule.support.str()},
            {"confidence", rule.confidence.str()},
            {"confidence_percent", rule.confidence.percent()}};
}

}  // namespace

std::string format_rule(const AssociationRule& rule) {
    return join(rule.antecedent) + std::string(kArrow) + join(rule.consequent) + std::string(kDashes) +
           std::to_string(rule.confidence.percent()) + "%|support=" + rule.support.str() +
           "|confidence=" + rule.confidence.str();
}

AssociationRule parse_rule(std::string_view line, std::size_t line_no) {
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || line.find('|', bar2 + 1) != std::string_view::npos) {
        throw ParseError(line_no, "expected 3 '|'-separated fields");
    }
    const auto display = line.substr(0, bar1);
    const auto arrow = display.find(kArrow);
    const auto dashes = display.rfind(kDashes);
    if (arrow == std::string_view::npos || dashes == std::string_view::npos || dashes < arrow + kArrow.size() ||
        !display.ends_with('%')) {
        throw ParseError(line_no, "expected '<antecedent>--><consequent>-----<pct>%'");
    }

    AssociationRule rule;
    rule.antecedent = split_items(display.substr(0, arrow), line_no);
    rule.consequent = split_items(display.substr(arrow + kArrow.size(), dashes - arrow - kArrow.size()), line_no);
    rule.support = parse_field(line.substr(bar1 + 1, bar2 - bar1 - 1), "support", line_no);
    rule.confidence = parse_field(line.substr(bar2 + 1), "confidence", line_no);
    for (const auto& item : rule.antecedent) {
        if (std::binary_search(rule.consequent.begin(), rule.consequent.end(), item)) {
            throw ParseError(line_no, "course '" + item + "' on both sides of rule");
        }
    }
    return rule;
}

void write_rules(std::ostream& out, const std::vector<AssociationRule>& rules) {
    for (const auto& rule : rules) out << format_rule(rule) << '\n';
}

std::vector<AssociationRule> read_rules(std::istream& in) {
    std::vector<AssociationRule> rules;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rules.push_back(parse_rule(line, line_no));
    }
    if (in.bad()) throw IoError("read failure");
    return rules;
}

void write_suggestions_text(std::ostream& out, const std::vector<Suggestion>& suggestions) {
    if (suggestions.empty()) {
        out << "no suggestions\n";
        return;
    }
    for (const auto& s : suggestions) out << s.course_id << "----" << s.confidence.percent() << "%\n";
}

void write_report_json(std::ostream& out, const AdviceReport& report) {
    nlohmann::json params = {{"min_support", report.params.min_support.str()},
                             {"min_confidence", report.params.min_confidence.str()},
                             {"max_itemset_len", nullptr}};
    if (report.params.max_itemset_len) params["max_itemset_len"] = *report.params.max_itemset_len;

    nlohmann::json kept = nlohmann::json::array();
    for (const auto& rule : report.kept_rules) kept.push_back(rule_json(rule));

    nlohmann::json suggestions = nlohmann::json::array();
    for (const auto& s : report.suggestions) {
        suggestions.push_back({{"course_id", s.course_id},
                               {"confidence", s.confidence.str()},
                               {"confidence_percent", s.confidence.percent()},
                               {"best_rule", rule_json(s.best_rule)}});
    }

    nlohmann::json doc = {{"student_id", report.student_id},
                          {"major", report.major},
                          {"grade_threshold", report.grade_threshold},
                          {"params", std::move(params)},
                          {"kept_rules", std::move(kept)},
                          {"suggestions", std::move(suggestions)}};
    out << doc.dump(2) << '\n';
}

}  // namespace coursewise
