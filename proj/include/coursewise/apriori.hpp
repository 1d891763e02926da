#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coursewise/ingest.hpp"
#include "coursewise/ratio.hpp"

namespace coursewise {

// Sorted, duplicate-free course ids.
using ItemList = std::vector<std::string>;

struct Itemset {
    ItemList items;
    std::uint64_t support_count = 0;

    friend bool operator==(const Itemset&, const Itemset&) = default;
};

struct MiningParams {
    Ratio min_support{1, 10};
    Ratio min_confidence{1, 2};
    std::optional<std::size_t> max_itemset_len;

    // Throws std::invalid_argument unless both thresholds lie in (0, 1] and
    // max_itemset_len, when set, is at least 1.
    void validate() const;
};

struct AssociationRule {
    ItemList antecedent;
    ItemList consequent;
    Ratio support;     // count(antecedent + consequent) / |D|
    Ratio confidence;  // count(antecedent + consequent) / count(antecedent)

    friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

struct FrequentItemsets {
    // levels[k - 1] holds the frequent k-itemsets in lexicographic order.
    std::vector<std::vector<Itemset>> levels;
    std::uint64_t db_size = 0;
    std::uint64_t min_count = 0;
    // Full scans of the transaction database performed while mining.
    std::size_t database_passes = 0;

    std::optional<std::uint64_t> support_of(const ItemList& items) const;
    std::size_t total() const;

private:
    friend FrequentItemsets mine_frequent(const TransactionDB&, const MiningParams&);
    std::map<ItemList, std::uint64_t> lookup_;
};

/// Number of transactions containing each candidate, in one pass over db.
std::map<ItemList, std::uint64_t> count_support(std::span<const ItemList> candidates, const TransactionDB& db);

/// Join then prune. frequent_prev must be same-length (k-1 >= 1), sorted and
/// duplicate-free; throws std::invalid_argument for 0-length itemsets.
std::vector<ItemList> generate_candidates(std::span<const Itemset> frequent_prev);

/// Level-wise search. An itemset is frequent when its count reaches
/// ceil(min_support * |db|).
FrequentItemsets mine_frequent(const TransactionDB& db, const MiningParams& params);

/// Every rule X -> F\X over frequent F (|F| >= 2) whose confidence reaches
/// min_confidence, sorted by rule_order.
std::vector<AssociationRule> generate_rules(const FrequentItemsets& fis, const MiningParams& params,
                                            std::uint64_t db_size);

/// Confidence desc, support desc, antecedent lex, consequent lex.
bool rule_order(const AssociationRule& a, const AssociationRule& b);

}  // namespace coursewise
