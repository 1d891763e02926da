#pragma once

// Randomized invariant checks shared by the unit suite and the acceptance
// runner. Each check runs `cases` random cases from `seed` and returns the
// first counterexample, or nullopt when all hold.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coursewise::testing {

using PropertyResult = std::optional<std::string>;
using PropertyFn = PropertyResult (*)(std::uint64_t seed, int cases);

struct Property {
    std::string name;
    PropertyFn check;
};

std::vector<Property> all_properties();

// Runs a property, turning an escaped exception into a failure.
PropertyResult run_property(const Property& property, std::uint64_t seed, int cases);

void PrintTo(const Property& property, std::ostream* os);

PropertyResult ingest_transaction_correspondence(std::uint64_t seed, int cases);
PropertyResult ingest_table2_golden(std::uint64_t seed, int cases);
PropertyResult ingest_major_isolation(std::uint64_t seed, int cases);
PropertyResult ingest_parse_roundtrip(std::uint64_t seed, int cases);

PropertyResult apriori_oracle_equivalence(std::uint64_t seed, int cases);
PropertyResult apriori_downward_closure(std::uint64_t seed, int cases);
PropertyResult apriori_rule_soundness(std::uint64_t seed, int cases);
PropertyResult apriori_count_support_differential(std::uint64_t seed, int cases);
PropertyResult apriori_determinism(std::uint64_t seed, int cases);
PropertyResult apriori_one_pass_per_level(std::uint64_t seed, int cases);
PropertyResult apriori_partition_independence(std::uint64_t seed, int cases);

PropertyResult advisor_post_filter_soundness(std::uint64_t seed, int cases);
PropertyResult advisor_suggestion_invariants(std::uint64_t seed, int cases);
PropertyResult advisor_filter_preserves_values(std::uint64_t seed, int cases);
PropertyResult advisor_determinism(std::uint64_t seed, int cases);
PropertyResult advisor_confidence_monotonicity(std::uint64_t seed, int cases);

PropertyResult cli_rule_file_fixed_point(std::uint64_t seed, int cases);
PropertyResult cli_advise_text_sorted(std::uint64_t seed, int cases);
PropertyResult cli_gen_parses_clean(std::uint64_t seed, int cases);
PropertyResult cli_exit_codes(std::uint64_t seed, int cases);

// Scratch directory unique to this process, created on first use.
std::string scratch_dir();

}  // namespace coursewise::testing
