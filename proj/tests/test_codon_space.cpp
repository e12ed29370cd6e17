#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ccm/codon_space.hpp"
#include "ccm/json_io.hpp"

using namespace ccm;

namespace {

Codon c(const char* s) { return codon_from_string(s); }
Dinucleotide d(const char* s) { return dinucleotide_from_string(s); }

std::set<std::string> dinucleotide_set(std::initializer_list<const char*> names) {
    std::set<std::string> s;
    for (const char* n : names) s.insert(n);
    return s;
}

} // namespace

TEST_CASE("every computed codon state matches the reference table row") {
    CHECK(reference_codon_rows().size() == 64);
    for (const CodonRow& row : reference_codon_rows()) {
        CAPTURE(row.codon.str());
        CHECK(codon_state(row.codon) == row.state);
    }
}

TEST_CASE("every computed dinucleotide state matches the reference table row") {
    CHECK(reference_dinucleotide_rows().size() == 16);
    for (const DinucleotideRow& row : reference_dinucleotide_rows()) {
        CAPTURE(row.dinucleotide.str());
        CHECK(dinucleotide_state(row.dinucleotide) == row.state);
    }
}

TEST_CASE("named rows") {
    CHECK(codon_state(c("CCC")) == CrystalState{IrrepLabel{HalfInt::from_twice(3),
                                                           HalfInt::from_twice(3), 1},
                                                HalfInt::from_twice(3), HalfInt::from_twice(3)});
    CHECK(codon_state(c("CUG")).irrep == IrrepLabel{HalfInt::from_twice(1), HalfInt::from_twice(1), 3});
    CHECK(codon_state(c("AAA")).m_h == HalfInt::from_twice(-3));
    CHECK(codon_state(c("AAA")).m_v == HalfInt::from_twice(-3));
    CHECK(dinucleotide_state(d("CA")) ==
          CrystalState{IrrepLabel{HalfInt::whole(0), HalfInt::whole(0), 1}, HalfInt::whole(0),
                       HalfInt::whole(0)});
    CHECK(dinucleotide_state(d("GA")).irrep.j_h == HalfInt::whole(0));
    CHECK(dinucleotide_state(d("GA")).m_v == HalfInt::whole(-1));
    CHECK(dinucleotide_state(d("UU")).m_h == HalfInt::whole(-1));
}

TEST_CASE("table orders enumerate everything exactly once") {
    std::set<int> codon_indices;
    for (const Codon& x : codons_in_table_order()) codon_indices.insert(x.index());
    CHECK(codon_indices.size() == 64);
    CHECK(codons_in_table_order().front() == c("CCC"));
    CHECK(codons_in_table_order()[1] == c("UCC"));
    CHECK(codons_in_table_order()[2] == c("CCU"));
    std::set<int> dn_indices;
    for (const Dinucleotide& x : dinucleotides_in_table_order()) dn_indices.insert(x.index());
    CHECK(dn_indices.size() == 16);
    CHECK(dinucleotides_in_table_order().front() == d("CC"));
    CHECK(dinucleotides_in_table_order()[1] == d("UC"));
    CHECK(dinucleotides_in_table_order()[2] == d("CG"));
}

TEST_CASE("code tables: sizes and the four differing codons") {
    int vmc_ter = 0;
    std::set<std::string> vmc_aas;
    for (const auto& [codon, aa] : vmc().map) {
        if (aa == "Ter")
            ++vmc_ter;
        else
            vmc_aas.insert(aa);
    }
    CHECK(vmc_ter == 4);
    CHECK(vmc_aas.size() == 20);

    std::set<std::string> diff;
    for (const Codon& x : all_codons())
        if (vmc().amino_acid(x) != suc().amino_acid(x)) diff.insert(x.str());
    CHECK(diff == std::set<std::string>{"UGA", "AUA", "AGA", "AGG"});
    CHECK(suc().amino_acid(c("UGA")) == "Ter");
    CHECK(suc().amino_acid(c("AUA")) == "Ile");
    CHECK(suc().amino_acid(c("AGA")) == "Arg");
    CHECK(suc().amino_acid(c("AGG")) == "Arg");
}

TEST_CASE("dinucleotide predicate sets") {
    std::set<std::string> b2, alpha2, unchanged;
    for (int i = 0; i < 16; ++i) {
        const Dinucleotide x = Dinucleotide::from_index(i);
        if (third_position_b(x) == 2) b2.insert(x.str());
        if (third_position_alpha(x) == 2) alpha2.insert(x.str());
        if (third_position_beta(x) == 0) unchanged.insert(x.str());
    }
    CHECK(b2 == dinucleotide_set({"CA", "GA", "CG", "UG", "UA", "UU", "AU", "AA", "GG", "AG"}));
    CHECK(alpha2 == dinucleotide_set({"UU", "AU", "AA"}));
    // the set left fixed by the rank-1 vertical vector operator
    CHECK(unchanged == dinucleotide_set({"CU", "GU", "CC", "UC", "UU", "GC", "AC", "AU"}));

    CHECK(dinucleotide_predicates(d("CG")).jv_zero);
    CHECK(dinucleotide_predicates(d("UU")).lowest_weight_h_nonzero_jh);
    CHECK(third_position_b(d("CC")) == 1);
    // the raw lowest-weight-H flag also holds for UA; only the J_V != 0 ones
    // enter the alpha rule
    CHECK(dinucleotide_predicates(d("UA")).lowest_weight_h_nonzero_jh);
    CHECK(third_position_alpha(d("UA")) == 1);
}

TEST_CASE("json export round-trips") {
    const json j = codon_table_json();
    CHECK(codon_table_roundtrips(j));
    const json reparsed = json::parse(j.dump());
    CHECK(reparsed == j);
    CHECK(codon_table_roundtrips(reparsed));
    CHECK(dinucleotide_table_json().size() == 16);
}
