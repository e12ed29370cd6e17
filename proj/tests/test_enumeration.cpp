#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>

#include "ccm/enumeration.hpp"

using namespace ccm;

namespace {

// brute-force k-subset count by popcount, n <= 20
std::uint64_t subsets_by_popcount(unsigned n, unsigned k) {
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == static_cast<int>(k)) ++count;
    return count;
}

} // namespace

TEST_CASE("binomial against brute-force subset enumeration") {
    for (unsigned n = 0; n <= 16; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == subsets_by_popcount(n, k));
}

TEST_CASE("quartet pattern count") {
    CHECK(count_quartet_choices() == 12870);
    CHECK(binomial(16, 8) == 12870);
    CHECK(binomial(16, 0) == 1);
}

TEST_CASE("pattern probability is exact and renders to two figures") {
    const Rational p = pattern_probability(reference_stage_counts());
    CHECK(p == make_rational(1, 129729600));
    CHECK(p.num == 1);
    CHECK(p.den == 12870ull * 420 * 24);
    CHECK(scientific(p, 2) == "7.7e-09");
    CHECK(scientific(p, 4) == "7.709e-09");

    CHECK(pattern_probability(StageCounts{1, 1, 1}) == make_rational(1, 1));
    CHECK(scientific(make_rational(1, 1), 2) == "1.0e+00");
    CHECK(pattern_probability(StageCounts{12870, 1, 1}) == make_rational(1, 12870));
    CHECK(scientific(make_rational(1, 12870), 2) == "7.8e-05");

    CHECK_THROWS_AS(pattern_probability(StageCounts{0, 420, 24}), std::invalid_argument);
    CHECK_THROWS_AS(pattern_probability(StageCounts{12870, 0, 24}), std::invalid_argument);
}

TEST_CASE("rendering handles carries and plain values") {
    CHECK(scientific(make_rational(999, 1000), 2) == "1.0e+00"); // 0.999 rounds up a decade
    CHECK(scientific(make_rational(95, 1000), 1) == "1e-01");
    CHECK(scientific(make_rational(12870, 1), 3) == "1.29e+04");
    CHECK(scientific(make_rational(2, 3), 3) == "6.67e-01");
}

TEST_CASE("the pairing model disagrees with the reference counts and says so") {
    const StageCountModel m = model_stage_counts();
    CHECK(m.sextet2_choices == binomial(8, 2) * 16 * 15);
    CHECK(m.sextet3_choices == 6 * 14);
    CHECK(!m.matches_reference); // the reference 420 / 24 are kept as data
}

TEST_CASE("rationals reduce") {
    CHECK(make_rational(6, 8) == make_rational(3, 4));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}
