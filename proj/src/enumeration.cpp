#include "ccm/enumeration.hpp"

#include <numeric>
#include <stdexcept>

namespace ccm {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i; // exact: C(n-k+i, i) is an integer
        if (acc > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t count_quartet_choices() { return binomial(16, 8); }

StageCounts reference_stage_counts() { return StageCounts{12870, 420, 24}; }

Rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return Rational{g ? num / g : num, g ? den / g : den};
}

Rational pattern_probability(const StageCounts& counts) {
    if (counts.quartet_choices == 0 || counts.sextet2_choices == 0 ||
        counts.sextet3_choices == 0)
        throw std::invalid_argument("stage counts must be positive");
    const unsigned __int128 den = static_cast<unsigned __int128>(counts.quartet_choices) *
                                  counts.sextet2_choices * counts.sextet3_choices;
    if (den > UINT64_MAX) throw std::overflow_error("pattern space overflows 64 bits");
    return make_rational(1, static_cast<std::uint64_t>(den));
}

std::string scientific(const Rational& r, int sig) {
    if (sig < 1 || sig > 18) throw std::invalid_argument("significant digits must be 1..18");
    if (r.num == 0) return "0";

    // Scale num/den into [1, 10) by powers of ten, tracking the exponent.
    unsigned __int128 num = r.num, den = r.den;
    int exp10 = 0;
    while (num < den) {
        num *= 10;
        --exp10;
    }
    while (num >= 10 * den) {
        den *= 10;
        ++exp10;
    }
    // First `sig` digits, rounded half up on the last one.
    unsigned __int128 scaled = num;
    for (int i = 1; i < sig; ++i) scaled *= 10;
    unsigned __int128 digits = (2 * scaled + den) / (2 * den);
    unsigned __int128 bound = 1;
    for (int i = 0; i < sig; ++i) bound *= 10;
    if (digits >= bound) { // rounding carried into a new decade
        digits /= 10;
        ++exp10;
    }

    std::string mantissa = "";
    for (unsigned __int128 d = digits; d > 0; d /= 10)
        mantissa.insert(mantissa.begin(), static_cast<char>('0' + static_cast<int>(d % 10)));
    while (static_cast<int>(mantissa.size()) < sig) mantissa.insert(mantissa.begin(), '0');
    if (sig > 1) mantissa.insert(mantissa.begin() + 1, '.');

    const bool neg = exp10 < 0;
    const int e = neg ? -exp10 : exp10;
    return mantissa + "e" + (neg ? "-" : "+") + (e < 10 ? "0" : "") + std::to_string(e);
}

StageCountModel model_stage_counts() {
    // After the quartet stage: 8 quartets, 16 doublets. Two sextets: choose
    // two quartets and attach a distinct doublet to each. Third sextet: one
    // of the remaining quartets with one of the remaining doublets.
    StageCountModel m;
    m.sextet2_choices = binomial(8, 2) * 16 * 15;
    m.sextet3_choices = (8 - 2) * (16 - 2);
    const StageCounts ref = reference_stage_counts();
    m.matches_reference =
        m.sextet2_choices == ref.sextet2_choices && m.sextet3_choices == ref.sextet3_choices;
    return m;
}

} // namespace ccm
