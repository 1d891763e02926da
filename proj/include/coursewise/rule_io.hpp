#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coursewise/advisor.hpp"
#include "coursewise/apriori.hpp"

namespace coursewise {

// Rule file line:
//   <antecedent>--><consequent>-----<pct>%|support=<a>/<b>|confidence=<c>/<d>
// with comma-joined sorted course ids on each side. The exact fractions are
// authoritative; the percentage is display only and is not read back.
std::string format_rule(const AssociationRule& rule);
AssociationRule parse_rule(std::string_view line, std::size_t line_no = 0);

void write_rules(std::ostream& out, const std::vector<AssociationRule>& rules);
std::vector<AssociationRule> read_rules(std::istream& in);

// "<course>----<pct>%", one per line; "no suggestions" when empty.
void write_suggestions_text(std::ostream& out, const std::vector<Suggestion>& suggestions);

// A single JSON document holding every AdviceReport field.
void write_report_json(std::ostream& out, const AdviceReport& report);

}  // namespace coursewise
