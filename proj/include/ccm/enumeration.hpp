#pragma once

#include <cstdint>
#include <string>

namespace ccm {

// Exact binomial coefficient; throws on overflow of uint64.
std::uint64_t binomial(unsigned n, unsigned k);

// Ways to pick the 8 quartet-forming slots among the 16 doublet pairs.
std::uint64_t count_quartet_choices();

struct StageCounts {
    std::uint64_t quartet_choices = 0;
    std::uint64_t sextet2_choices = 0;
    std::uint64_t sextet3_choices = 0;
};

// The published stage counts: 12870 quartet patterns, 420 ways to place the
// first two sextets, 24 for the third.
StageCounts reference_stage_counts();

// Reduced positive rational.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::uint64_t num, std::uint64_t den);

// 1 / (quartet_choices * sextet2_choices * sextet3_choices), exact.
Rational pattern_probability(const StageCounts& counts);

// Exact scientific rendering with `sig` significant digits, e.g. "7.7e-09".
// Digits come from integer long division; no floating point involved.
std::string scientific(const Rational& r, int sig);

// Candidate reconstruction of the sextet stage counts from the multiplets
// available after each stage (pairings of remaining quartets and doublets).
// Kept behind this call for comparison; disagreement with the reference
// numbers is reported by the caller, never patched over.
struct StageCountModel {
    std::uint64_t sextet2_choices = 0;
    std::uint64_t sextet3_choices = 0;
    bool matches_reference = false;
};

StageCountModel model_stage_counts();

} // namespace ccm
