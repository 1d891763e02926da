#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coursewise {

// An exact non-negative fraction kept in the form it was produced, e.g. a
// support of 2/6 stays 2/6. Equality is representational; use
// compare_value() to order by magnitude.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Ratio&, const Ratio&) = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Integer percent, rounded half-up: 0.485 -> 49, 1/3 -> 33.
    std::uint64_t percent() const;

    // "num/den"
    std::string str() const;

    // Accepts "a/b" or a plain decimal such as "0.33" or "1". Decimals are
    // converted exactly (0.33 -> 33/100). Throws std::invalid_argument.
    static Ratio parse(std::string_view text);
};

std::strong_ordering compare_value(const Ratio& a, const Ratio& b);

// Smallest integer c with c / total >= r, i.e. ceil(r * total).
std::uint64_t ceil_count(const Ratio& r, std::uint64_t total);

// true when 0 < r <= 1
bool is_valid_threshold(const Ratio& r);

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace coursewise
