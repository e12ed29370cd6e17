#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccm/half_int.hpp"

namespace ccm {

// Alphabet order C < U < G < A everywhere (matches the reference table layout).
enum class Nucleotide : std::uint8_t { C = 0, U = 1, G = 2, A = 3 };

inline constexpr std::array<Nucleotide, 4> all_nucleotides{Nucleotide::C, Nucleotide::U,
                                                           Nucleotide::G, Nucleotide::A};

constexpr char to_char(Nucleotide n) {
    constexpr char k[4] = {'C', 'U', 'G', 'A'};
    return k[static_cast<int>(n)];
}

inline Nucleotide nucleotide_from_char(char c) {
    switch (c) {
    case 'C': return Nucleotide::C;
    case 'U': return Nucleotide::U;
    case 'G': return Nucleotide::G;
    case 'A': return Nucleotide::A;
    default: throw std::invalid_argument(std::string("not a nucleotide: ") + c);
    }
}

// Fundamental-irrep weights: C=(+1/2,+1/2), U=(-1/2,+1/2), G=(+1/2,-1/2), A=(-1/2,-1/2).
constexpr HalfInt h_weight(Nucleotide n) {
    return HalfInt::from_twice(n == Nucleotide::C || n == Nucleotide::G ? 1 : -1);
}
constexpr HalfInt v_weight(Nucleotide n) {
    return HalfInt::from_twice(n == Nucleotide::C || n == Nucleotide::U ? 1 : -1);
}

// Pyrimidines Y = {C,U}, purines R = {G,A}.
constexpr bool is_pyrimidine(Nucleotide n) { return n == Nucleotide::C || n == Nucleotide::U; }
constexpr bool is_purine(Nucleotide n) { return !is_pyrimidine(n); }

struct Codon {
    Nucleotide n1, n2, n3;

    friend constexpr bool operator==(const Codon&, const Codon&) = default;
    friend constexpr auto operator<=>(const Codon&, const Codon&) = default;

    constexpr int index() const {
        return 16 * static_cast<int>(n1) + 4 * static_cast<int>(n2) + static_cast<int>(n3);
    }
    static constexpr Codon from_index(int i) {
        return Codon{static_cast<Nucleotide>((i / 16) & 3), static_cast<Nucleotide>((i / 4) & 3),
                     static_cast<Nucleotide>(i & 3)};
    }
    std::string str() const { return {to_char(n1), to_char(n2), to_char(n3)}; }
};

struct Dinucleotide {
    Nucleotide n1, n2;

    friend constexpr bool operator==(const Dinucleotide&, const Dinucleotide&) = default;
    friend constexpr auto operator<=>(const Dinucleotide&, const Dinucleotide&) = default;

    constexpr int index() const { return 4 * static_cast<int>(n1) + static_cast<int>(n2); }
    static constexpr Dinucleotide from_index(int i) {
        return Dinucleotide{static_cast<Nucleotide>((i / 4) & 3), static_cast<Nucleotide>(i & 3)};
    }
    std::string str() const { return {to_char(n1), to_char(n2)}; }
};

inline Codon codon_from_string(std::string_view s) {
    if (s.size() != 3) throw std::invalid_argument("codon must have three letters: " + std::string(s));
    return Codon{nucleotide_from_char(s[0]), nucleotide_from_char(s[1]), nucleotide_from_char(s[2])};
}

inline Dinucleotide dinucleotide_from_string(std::string_view s) {
    if (s.size() != 2) throw std::invalid_argument("dinucleotide must have two letters: " + std::string(s));
    return Dinucleotide{nucleotide_from_char(s[0]), nucleotide_from_char(s[1])};
}

constexpr Dinucleotide prefix(const Codon& c) { return Dinucleotide{c.n1, c.n2}; }

// All 64 codons in index (lexicographic C<U<G<A) order.
std::vector<Codon> all_codons();
// The 64 codons in the layout of the reference table: rows are read left then
// right, first letters (C,U) for the top half and (G,A) for the bottom half.
std::vector<Codon> codons_in_table_order();
// All 16 dinucleotides in the reference table's reading order.
std::vector<Dinucleotide> dinucleotides_in_table_order();

} // namespace ccm
