#include "coursewise/apriori.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace coursewise {

namespace {

using Code = std::uint32_t;
using CodeList = std::vector<Code>;

// Join step: two sorted (k-1)-lists sharing their first k-2 entries yield a
// k-list. prev is sorted, so lists sharing a prefix are contiguous. Prune
// step: drop candidates with a (k-1)-subset missing from prev.
template <typename List>
std::vector<List> join_and_prune(const std::vector<List>& prev) {
    std::vector<List> out;
    if (prev.size() < 2) return out;
    const std::size_t k_minus_1 = prev.front().size();
    if (k_minus_1 == 0) throw std::invalid_argument("candidate generation needs itemsets of length >= 1");

    auto shares_prefix = [k_minus_1](const List& a, const List& b) {
        return std::equal(a.begin(), a.begin() + (k_minus_1 - 1), b.begin());
    };
    auto is_frequent = [&prev](const List& subset) {
        return std::binary_search(prev.begin(), prev.end(), subset);
    };

    List subset;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        for (std::size_t j = i + 1; j < prev.size() && shares_prefix(prev[i], prev[j]); ++j) {
            List candidate = prev[i];
            candidate.push_back(prev[j].back());

            bool keep = true;
            // The two subsets dropping one of the last two items are prev[i]
            // and prev[j] themselves.
            for (std::size_t drop = 0; keep && drop + 2 < candidate.size(); ++drop) {
                subset.clear();
                for (std::size_t p = 0; p < candidate.size(); ++p) {
                    if (p != drop) subset.push_back(candidate[p]);
                }
                keep = is_frequent(subset);
            }
            if (keep) out.push_back(std::move(candidate));
        }
    }
    return out;
}

struct EncodedDB {
    std::vector<CodeList> transactions;
    std::size_t universe_size = 0;
};

EncodedDB encode(const TransactionDB& db) {
    std::unordered_map<std::string, Code> code_of;
    code_of.reserve(db.item_universe.size());
    for (Code c = 0; c < db.item_universe.size(); ++c) code_of.emplace(db.item_universe[c], c);

    EncodedDB enc;
    enc.universe_size = db.item_universe.size();
    enc.transactions.reserve(db.size());
    for (const auto& t : db.transactions) {
        CodeList codes;
        codes.reserve(t.items.size());
        for (const auto& item : t.items) codes.push_back(code_of.at(item));
        // universe order equals item order, so codes are already sorted
        enc.transactions.push_back(std::move(codes));
    }
    return enc;
}

// One scan over the database.
std::vector<std::uint64_t> count_encoded(const std::vector<CodeList>& candidates, const EncodedDB& db) {
    std::vector<std::uint64_t> counts(candidates.size(), 0);
    if (candidates.empty()) return counts;
    const std::size_t k = candidates.front().size();
    for (const auto& t : db.transactions) {
        if (t.size() < k) continue;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (std::includes(t.begin(), t.end(), candidates[c].begin(), candidates[c].end())) ++counts[c];
        }
    }
    return counts;
}

}  // namespace

void MiningParams::validate() const {
    if (!is_valid_threshold(min_support)) {
        throw std::invalid_argument("min_support " + min_support.str() + " outside (0, 1]");
    }
    if (!is_valid_threshold(min_confidence)) {
        throw std::invalid_argument("min_confidence " + min_confidence.str() + " outside (0, 1]");
    }
    if (max_itemset_len && *max_itemset_len < 1) {
        throw std::invalid_argument("max_itemset_len must be at least 1");
    }
}

std::optional<std::uint64_t> FrequentItemsets::support_of(const ItemList& items) const {
    if (auto it = lookup_.find(items); it != lookup_.end()) return it->second;
    return std::nullopt;
}

std::size_t FrequentItemsets::total() const {
    std::size_t n = 0;
    for (const auto& level : levels) n += level.size();
    return n;
}

std::map<ItemList, std::uint64_t> count_support(std::span<const ItemList> candidates, const TransactionDB& db) {
    std::map<ItemList, std::uint64_t> counts;
    for (const auto& c : candidates) counts.emplace(c, 0);
    for (const auto& t : db.transactions) {
        for (auto& [items, count] : counts) {
            if (std::includes(t.items.begin(), t.items.end(), items.begin(), items.end())) ++count;
        }
    }
    return counts;
}

std::vector<ItemList> generate_candidates(std::span<const Itemset> frequent_prev) {
    std::vector<ItemList> prev;
    prev.reserve(frequent_prev.size());
    for (const auto& s : frequent_prev) prev.push_back(s.items);
    return join_and_prune(prev);
}

FrequentItemsets mine_frequent(const TransactionDB& db, const MiningParams& params) {
    params.validate();
    FrequentItemsets fis;
    fis.db_size = db.size();
    fis.min_count = ceil_count(params.min_support, db.size());
    if (db.empty()) return fis;

    const EncodedDB enc = encode(db);
    const std::size_t max_len = params.max_itemset_len.value_or(enc.universe_size);

    std::vector<CodeList> candidates;
    candidates.reserve(enc.universe_size);
    for (Code c = 0; c < enc.universe_size; ++c) candidates.push_back({c});

    for (std::size_t k = 1; k <= max_len && !candidates.empty(); ++k) {
        const auto counts = count_encoded(candidates, enc);
        ++fis.database_passes;

        std::vector<CodeList> frequent;
        std::vector<Itemset> level;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (counts[i] < fis.min_count) continue;
            ItemList items;
            items.reserve(k);
            for (Code c : candidates[i]) items.push_back(db.item_universe[c]);
            fis.lookup_.emplace(items, counts[i]);
            level.push_back(Itemset{std::move(items), counts[i]});
            frequent.push_back(std::move(candidates[i]));
        }
        if (level.empty()) break;
        fis.levels.push_back(std::move(level));
        candidates = k < max_len ? join_and_prune(frequent) : std::vector<CodeList>{};
    }
    return fis;
}

bool rule_order(const AssociationRule& a, const AssociationRule& b) {
    if (auto c = compare_value(a.confidence, b.confidence); c != 0) return c > 0;
    if (auto c = compare_value(a.support, b.support); c != 0) return c > 0;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
}

std::vector<AssociationRule> generate_rules(const FrequentItemsets& fis, const MiningParams& params,
                                            std::uint64_t db_size) {
    params.validate();
    std::vector<AssociationRule> rules;
    for (std::size_t k = 2; k <= fis.levels.size(); ++k) {
        if (k >= 64) throw std::length_error("itemsets longer than 63 items are not supported");
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        for (const auto& itemset : fis.levels[k - 1]) {
            for (std::uint64_t mask = 1; mask < full; ++mask) {
                ItemList antecedent, consequent;
                for (std::size_t p = 0; p < k; ++p) {
                    (mask >> p & 1 ? antecedent : consequent).push_back(itemset.items[p]);
                }
                const auto antecedent_count = fis.support_of(antecedent);
                if (!antecedent_count) {
                    throw std::logic_error("frequent itemsets are not downward closed");
                }
                Ratio confidence{itemset.support_count, *antecedent_count};
                if (compare_value(confidence, params.min_confidence) < 0) continue;
                rules.push_back(AssociationRule{std::move(antecedent), std::move(consequent),
                                                Ratio{itemset.support_count, db_size}, confidence});
            }
        }
    }
    std::sort(rules.begin(), rules.end(), rule_order);
    return rules;
}

}  // namespace coursewise
