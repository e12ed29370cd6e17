#pragma once

#include <compare>
#include <string>

namespace ccm {

// Exact half-integer. Stores twice the value so that all J/M arithmetic
// stays in integers; nothing in this library ever touches floating point.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool is_negative() const { return twice < 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return HalfInt{twice < 0 ? -twice : twice}; }

    // "3/2", "-1/2", "0", "2"
    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

} // namespace ccm
