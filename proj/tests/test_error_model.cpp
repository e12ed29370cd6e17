#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccm/codon_space.hpp"
#include "ccm/error_model.hpp"

using namespace ccm;

namespace {

Codon c(const char* s) { return codon_from_string(s); }

std::set<std::string> as_set(const std::vector<CodonPair>& v) {
    std::set<std::string> s;
    for (const CodonPair& p : v) s.insert(p.str());
    return s;
}

std::set<std::string> pairs(std::initializer_list<const char*> v) {
    std::set<std::string> s;
    for (const char* p : v) s.insert(p);
    return s;
}

std::set<std::string> allowed(const char* family, Scheme scheme = Scheme::A) {
    return as_set(allowed_pairs(family_by_id(family, scheme)));
}

std::set<std::string> forbidden(const char* family, Scheme scheme = Scheme::A) {
    return as_set(forbidden_pairs(family_by_id(family, scheme)));
}

// first two nucleotides of the sources of an allowed set
std::set<std::string> source_prefixes(const std::set<std::string>& pair_strings) {
    std::set<std::string> s;
    for (const std::string& p : pair_strings) s.insert(p.substr(0, 2));
    return s;
}

} // namespace

TEST_CASE("level 1: third-position transitions split the codons into 32 doublets") {
    CHECK(allowed("t3_c2u").size() == 16);
    CHECK(forbidden("t3_c2u").empty());
    CHECK(allowed("t3_g2a").size() == 16);
    CHECK(forbidden("t3_g2a").empty());
    CHECK(allowed_set(1, Scheme::A).size() == 32);
}

TEST_CASE("level 2: the three forbidden transversion lists, verbatim") {
    CHECK(forbidden("tv3_c2g") == pairs({"UUC->UUG", "AUC->AUG", "AAC->AAG", "UAC->UAG",
                                         "GAC->GAG", "CAC->CAG"}));
    CHECK(forbidden("tv3_u2a") == pairs({"UUU->UUA", "AUU->AUA", "AAU->AAA", "UAU->UAA",
                                         "AGU->AGA", "GAU->GAA", "UGU->UGA", "CAU->CAA"}));
    CHECK(forbidden("tv3_c2a") == pairs({"UUC->UUA", "AUC->AUA", "AAC->AAA", "UAC->UAA",
                                         "AGC->AGA", "GAC->GAA", "UGC->UGA", "CAC->CAA"}));
    // the connections that motivate the stop/rare choices for AGG and UGG
    CHECK(allowed("tv3_c2g").count("AGC->AGG"));
    CHECK(allowed("tv3_c2g").count("UGC->UGG"));
}

TEST_CASE("level 2: the eight quartet prefixes") {
    std::set<std::string> all_connected = source_prefixes(allowed("tv3_c2g"));
    for (const char* f : {"tv3_u2a", "tv3_c2a"}) {
        std::set<std::string> s = source_prefixes(allowed(f));
        std::set<std::string> inter;
        std::set_intersection(all_connected.begin(), all_connected.end(), s.begin(), s.end(),
                              std::inserter(inter, inter.begin()));
        all_connected = inter;
    }
    CHECK(all_connected == pairs({"CC", "CU", "CG", "UC", "GG", "GC", "GU", "AC"}));
    // the two direct transversions already cut the same eight
    std::set<std::string> two;
    std::set<std::string> cg = source_prefixes(allowed("tv3_c2g"));
    std::set<std::string> ua = source_prefixes(allowed("tv3_u2a"));
    std::set_intersection(cg.begin(), cg.end(), ua.begin(), ua.end(),
                          std::inserter(two, two.begin()));
    CHECK(two == all_connected);
}

TEST_CASE("level 2 rank rules restated through irrep membership agree where the rank matters") {
    // alternative formulation: rank 2 when source and target share an irrep
    // or the source has J_H = 3/2. Equivalent to the dinucleotide rule for
    // the direct transversions (not for the diagonal one).
    for (const char* fam : {"tv3_c2g", "tv3_u2a"}) {
        const Family f = family_by_id(fam, Scheme::A);
        for (const CodonPair& p : f.candidates) {
            const int b = third_position_b(prefix(p.source));
            const int rank_used =
                fam == std::string("tv3_c2g") ? b : b - 1; // u2a uses rank b-1
            const bool same = codon_state(p.source).irrep == codon_state(p.target).irrep;
            const bool jh32 = codon_state(p.source).irrep.j_h == HalfInt::from_twice(3);
            const int restated = (same || jh32) ? 2 : 1;
            const int restated_rank = fam == std::string("tv3_c2g") ? restated : restated - 1;
            // ranks may differ only where the outcome is insensitive to them
            if (restated_rank != rank_used) {
                const Family alt{f.id + "_restated", 2, {p},
                                 [&](const CodonPair&) {
                                     return OpPlan{{make_op(2 * restated_rank, 0, 2, -2)}};
                                 },
                                 true};
                CHECK(pair_connects(f, p) == pair_connects(alt, p));
            }
        }
    }
}

TEST_CASE("level 3: first-position transition and transversion enumerations") {
    CHECK(allowed("t1") == pairs({"CCU->UCU", "CCA->UCA", "CUU->UUU", "CUA->UUA", "CGU->UGU",
                                  "CAU->UAU", "GCU->ACU", "GUU->AUU", "GGU->AGU", "GAU->AAU"}));
    CHECK(allowed("tv1_u2a") == pairs({"UCG->ACG", "UGG->AGG"}));
    CHECK(allowed("tv1_c2a") == pairs({"CCA->ACA", "CGA->AGA", "CUG->AUG", "CAG->AAG"}));
    // the published first-position C->G list omits CUG->GUG, which the
    // operators derive; the divergence is kept on record
    CHECK(allowed("tv1_c2g") == pairs({"CCG->GCG", "CCA->GCA", "CGA->GGA", "CAG->GAG",
                                       "CGG->GGG", "CUG->GUG"}));
}

TEST_CASE("level 4: second-position enumerations") {
    CHECK(allowed("t2") == pairs({"CCC->CUC", "GCC->GUC"}));
    CHECK(allowed("t2_all") == pairs({"CCC->CUC", "GCC->GUC", "CCU->CUU", "GCU->GUU",
                                      "UCU->UUU", "ACU->AUU"}));
    // published: MCC->MGC for M != C; the operators also derive CCC->CGC,
    // CCU->CGU and GCU->GGU
    CHECK(allowed("tv2_c2g") == pairs({"UCC->UGC", "GCC->GGC", "ACC->AGC", "CCC->CGC",
                                       "CCU->CGU", "GCU->GGU"}));
    CHECK(allowed("tv2_u2a").empty());
    // published: CCC->CAC, UCU->UAU, ACU->AAU; the operators derive
    CHECK(allowed("tv2_c2a") == pairs({"CCC->CAC", "GCC->GAC"}));
}

TEST_CASE("level 5: two-nucleotide families") {
    CHECK(allowed("tt") == pairs({"CCU->UUU", "GCU->AUU"}));
    CHECK(allowed("ttv").empty()); // published lists CUC->UAC
    CHECK(allowed("ttvd") == pairs({"CCC->UAC", "GCC->AAC"}));
    CHECK(allowed("tvt") == pairs({"CCC->GUC", "CCU->GUU", "UCU->AUU"}));
    CHECK(allowed("tvtd") == pairs({"CCU->AUU"}));
    CHECK(allowed("tvtv") == pairs({"UCC->AGC", "CCC->GGC", "CCU->GGU"}));
    CHECK(allowed("tvtvd1").empty());
    CHECK(allowed("tvtvd2") == pairs({"CCC->GAC", "UCC->AAC"}));
    CHECK(allowed("tvtvdd") == pairs({"CCC->AAC"}));
    // the closing discussion quotes UCA->AGA as the serine trigger; the
    // derived trigger is UCC->AGC
    CHECK(!allowed("tvtv").count("UCA->AGA"));
}

TEST_CASE("exhaustive family closure") {
    for (Scheme scheme : {Scheme::A, Scheme::B, Scheme::B0})
        for (int level = 1; level <= 5; ++level)
            for (const Family& f : families(level, scheme)) {
                CHECK(allowed_pairs(f).size() + forbidden_pairs(f).size() == f.candidates.size());
                for (const CodonPair& p : f.candidates) {
                    CHECK(p.source != p.target);
                }
            }
}

TEST_CASE("scheme B third-position specifics") {
    const auto c2g = allowed("tv3_c2g_b", Scheme::B);
    const auto u2a = allowed("tv3_u2a_b", Scheme::B);
    for (const char* p : {"AGC->AGG", "UGC->UGG", "UAC->UAG", "CAC->CAG", "GAC->GAG"})
        CHECK(c2g.count(p));
    for (const char* p : {"UUC->UUG", "AUC->AUG"}) CHECK(!c2g.count(p));
    for (const char* p : {"UUU->UUA", "AUU->AUA"}) CHECK(u2a.count(p));
    for (const char* p : {"AGU->AGA", "UGU->UGA"}) CHECK(!u2a.count(p));
    // same eight quartets as scheme A
    std::set<std::string> both;
    const auto s1 = source_prefixes(c2g), s2 = source_prefixes(u2a);
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::inserter(both, both.begin()));
    CHECK(both == pairs({"CC", "CU", "CG", "UC", "GG", "GC", "GU", "AC"}));
}

TEST_CASE("scheme B first-position alternative") {
    CHECK(allowed("t1_b", Scheme::B).size() == 16);
    for (const char* p : {"CCU->UCU", "CCA->UCA", "CGU->UGU", "CGA->UGA", "CUU->UUU",
                          "CUA->UUA", "GGU->AGU", "GGA->AGA", "GCU->ACU", "GCA->ACA",
                          "GUU->AUU", "GUA->AUA", "CAU->UAU", "CAA->UAA", "GAU->AAU",
                          "GAA->AAA"})
        CHECK(allowed("t1_b", Scheme::B).count(p));
    CHECK(allowed("tv1_c2a_2step", Scheme::B) ==
          pairs({"CCA->ACA", "CUA->AUA", "CGA->AGA", "CAA->AAA"}));
}

TEST_CASE("scheme B0 merges eight doublets into the four strong quartets") {
    CHECK(allowed("tv3_c2g_b0", Scheme::B0).size() == 16);
    CHECK(allowed("tv3_u2a_b0", Scheme::B0) ==
          pairs({"CCU->CCA", "CGU->CGA", "GCU->GCA", "GGU->GGA"}));
}

TEST_CASE("robustness variants") {
    // rank-1 vertical part leaves the third-position transition set unchanged
    CHECK(allowed("t3_c2u_vrank1") == allowed("t3_c2u"));
    // fixing both first-position direct transversions to rank 2
    CHECK(allowed("tv1_c2g_rank2") == pairs({"CCG->GCG", "CGG->GGG"}));
    // fixing both to rank 1
    CHECK(allowed("tv1_u2a_rank1") ==
          pairs({"UCG->ACG", "UGG->AGG", "UUG->AUG", "UAG->AAG"}));
    // rank-2 second-position C->G equals the published list plus CCC->CGC
    CHECK(allowed("tv2_c2g_rank2") == pairs({"CCC->CGC", "UCC->UGC", "GCC->GGC", "ACC->AGC"}));
    // the alternative double-transition pair connects a different set; the
    // final pattern comparison lives with the derivation tests
    CHECK(allowed("tt_alt") == pairs({"CCC->UUC", "CCG->UUG", "CGC->UAC", "CGG->UAG",
                                      "GCC->AUC", "GCG->AUG", "GGC->AAC", "GGG->AAG"}));
}

TEST_CASE("operator assignment for named events") {
    const SubstitutionEvent t3{SubstitutionKind::Transition, CodonPosition::Third, c("CCC"),
                               c("CCU")};
    CHECK(operator_for(t3, Scheme::A) == make_op(2, -2, 0, 0));

    const SubstitutionEvent cac{SubstitutionKind::TransversionCG, CodonPosition::Third, c("CAC"),
                                c("CAG")};
    CHECK(operator_for(cac, Scheme::A).rank_h == HalfInt::whole(2)); // CA is in the b=2 set

    const SubstitutionEvent ccu{SubstitutionKind::TransversionUA, CodonPosition::Third, c("CCU"),
                                c("CCA")};
    CHECK(operator_for(ccu, Scheme::A).rank_h == HalfInt::whole(0)); // b-1 with b=1
    const SubstitutionEvent uuu{SubstitutionKind::TransversionUA, CodonPosition::Third, c("UUU"),
                                c("UUA")};
    CHECK(operator_for(uuu, Scheme::A).rank_h == HalfInt::whole(1)); // b-1 with b=2

    // c-rank of the diagonal transversion: same irrep copy keeps rank 1
    const SubstitutionEvent cca{SubstitutionKind::TransversionCA, CodonPosition::First, c("CCA"),
                                c("ACA")};
    CHECK(operator_for(cca, Scheme::A).rank_h == HalfInt::whole(1));
    const SubstitutionEvent cug{SubstitutionKind::TransversionCA, CodonPosition::First, c("CUG"),
                                c("AUG")};
    CHECK(operator_for(cug, Scheme::A).rank_h == HalfInt::whole(2));
}

TEST_CASE("events outside the modelled set are rejected") {
    CHECK_THROWS_AS(make_event(c("UUU"), c("GUU")), std::invalid_argument); // U->G
    CHECK_THROWS_AS(make_event(c("UUU"), c("CUU")), std::invalid_argument); // reversed
    CHECK_THROWS_AS(make_event(c("CCC"), c("UUC")), std::invalid_argument); // two changes
    CHECK_THROWS_AS(make_event(c("CCC"), c("CCC")), std::invalid_argument); // no change
    const SubstitutionEvent b_ca{SubstitutionKind::TransversionCA, CodonPosition::First, c("CCA"),
                                 c("ACA")};
    CHECK_THROWS_AS(operator_for(b_ca, Scheme::B), std::domain_error);
    CHECK_NOTHROW(two_step_operators_for(b_ca, Scheme::B));
    CHECK_THROWS_AS(two_step_operators_for(b_ca, Scheme::A), std::domain_error);
}

TEST_CASE("double operator assignment") {
    const auto tt = double_operator_for(DoubleSubstitution{DoubleFamilyKind::TT, c("CCC"), c("UUC")});
    CHECK(tt.first == make_op(2, -2, 2, 0));
    CHECK(tt.second == make_op(2, -2, 4, 0));
    const auto dd =
        double_operator_for(DoubleSubstitution{DoubleFamilyKind::TVTVDD, c("CCC"), c("AAC")});
    CHECK(dd.first == make_op(2, -2, 2, -2));
    CHECK(dd.second == make_op(4, -2, 4, -2));
    CHECK_THROWS_AS(
        double_operator_for(DoubleSubstitution{DoubleFamilyKind::TT, c("CCC"), c("GGC")}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        double_operator_for(DoubleSubstitution{DoubleFamilyKind::TT, c("CCC"), c("UUU")}),
        std::invalid_argument);
}
