#pragma once

#include <stdexcept>
#include <string>

#include "ccm/half_int.hpp"

namespace ccm {

// One sl(2) crystal basis element: weight m inside the (2j+1)-chain B(j).
struct Sl2State {
    HalfInt j;
    HalfInt m;

    friend constexpr bool operator==(const Sl2State&, const Sl2State&) = default;

    std::string str() const { return "(" + j.str() + "," + m.str() + ")"; }
};

constexpr bool valid(const Sl2State& s) {
    return !s.j.is_negative() && s.m.abs() <= s.j && (s.j - s.m).is_integer();
}

// Number of lowering steps available: phi = j + m.
constexpr int phi(const Sl2State& s) { return (s.j.twice + s.m.twice) / 2; }
// Number of raising steps available: eps = j - m.
constexpr int eps(const Sl2State& s) { return (s.j.twice - s.m.twice) / 2; }

// Connected component of `first (x) second` in the crystal B(j1) (x) B(j2),
// together with its weight. Closed form of the signature rule: the reduced
// signature of (-)^eps1 (+)^phi1 (-)^eps2 (+)^phi2 keeps the left factor's
// raising budget when phi1 >= eps2 and the right factor's lowering budget
// otherwise. The product is not commutative; the order of the arguments is
// the order of the tensor factors.
inline Sl2State tensor_pair(const Sl2State& first, const Sl2State& second) {
    if (!valid(first) || !valid(second))
        throw std::invalid_argument("tensor_pair: invalid sl(2) crystal state " + first.str() +
                                    " (x) " + second.str());
    const HalfInt big_j = phi(first) >= eps(second) ? first.j + second.m : second.j - first.m;
    return Sl2State{big_j, first.m + second.m};
}

} // namespace ccm
