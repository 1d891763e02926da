#include "coursewise/ratio.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace coursewise {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a fraction: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

std::uint64_t Ratio::percent() const {
    // floor(100 * num / den + 1/2) == floor((200 * num + den) / (2 * den))
    const u128 top = u128{200} * num + den;
    return static_cast<std::uint64_t>(top / (u128{2} * den));
}

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Ratio Ratio::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Ratio r{parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text)};
        if (r.den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return r;
    }
    auto dot = text.find('.');
    std::string_view whole_part = text.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole_part.empty() && frac_part.empty()) {
        throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
    }
    if (frac_part.size() > 18) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");

    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::uint64_t whole = whole_part.empty() ? 0 : parse_u64(whole_part, text);
    const std::uint64_t frac = frac_part.empty() ? 0 : parse_u64(frac_part, text);
    const u128 num = u128{whole} * den + frac;
    if (num > std::numeric_limits<std::uint64_t>::max()) {
        throw std::invalid_argument("out of range: '" + std::string(text) + "'");
    }
    return Ratio{static_cast<std::uint64_t>(num), den};
}

std::strong_ordering compare_value(const Ratio& a, const Ratio& b) {
    return u128{a.num} * b.den <=> u128{b.num} * a.den;
}

std::uint64_t ceil_count(const Ratio& r, std::uint64_t total) {
    const u128 top = u128{r.num} * total;
    return static_cast<std::uint64_t>((top + r.den - 1) / r.den);
}

bool is_valid_threshold(const Ratio& r) { return r.den != 0 && r.num > 0 && r.num <= r.den; }

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.num << '/' << r.den; }

}  // namespace coursewise
