#include "ccm/codon_space.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "ccm/sl2.hpp"

namespace ccm {

namespace {

HalfInt parse_half(const std::string& s) {
    if (auto pos = s.find('/'); pos != std::string::npos) {
        if (s.substr(pos) != "/2") throw std::invalid_argument("bad half-integer: " + s);
        return HalfInt::from_twice(std::stoi(s.substr(0, pos)));
    }
    return HalfInt::whole(std::stoi(s));
}

// codon vmc suc j_h j_v mult m3_h m3_v, in table reading order.
constexpr const char* kCodonTable[64] = {
    "CCC Pro Pro 3/2 3/2 1 3/2 3/2",   "UCC Ser Ser 3/2 3/2 1 1/2 3/2",
    "CCU Pro Pro 1/2 3/2 1 1/2 3/2",   "UCU Ser Ser 1/2 3/2 1 -1/2 3/2",
    "CCG Pro Pro 3/2 1/2 1 3/2 1/2",   "UCG Ser Ser 3/2 1/2 1 1/2 1/2",
    "CCA Pro Pro 1/2 1/2 1 1/2 1/2",   "UCA Ser Ser 1/2 1/2 1 -1/2 1/2",
    "CUC Leu Leu 1/2 3/2 2 1/2 3/2",   "UUC Phe Phe 3/2 3/2 1 -1/2 3/2",
    "CUU Leu Leu 1/2 3/2 2 -1/2 3/2",  "UUU Phe Phe 3/2 3/2 1 -3/2 3/2",
    "CUG Leu Leu 1/2 1/2 3 1/2 1/2",   "UUG Leu Leu 3/2 1/2 1 -1/2 1/2",
    "CUA Leu Leu 1/2 1/2 3 -1/2 1/2",  "UUA Leu Leu 3/2 1/2 1 -3/2 1/2",
    "CGC Arg Arg 3/2 1/2 2 3/2 1/2",   "UGC Cys Cys 3/2 1/2 2 1/2 1/2",
    "CGU Arg Arg 1/2 1/2 2 1/2 1/2",   "UGU Cys Cys 1/2 1/2 2 -1/2 1/2",
    "CGG Arg Arg 3/2 1/2 2 3/2 -1/2",  "UGG Trp Trp 3/2 1/2 2 1/2 -1/2",
    "CGA Arg Arg 1/2 1/2 2 1/2 -1/2",  "UGA Trp Ter 1/2 1/2 2 -1/2 -1/2",
    "CAC His His 1/2 1/2 4 1/2 1/2",   "UAC Tyr Tyr 3/2 1/2 2 -1/2 1/2",
    "CAU His His 1/2 1/2 4 -1/2 1/2",  "UAU Tyr Tyr 3/2 1/2 2 -3/2 1/2",
    "CAG Gln Gln 1/2 1/2 4 1/2 -1/2",  "UAG Ter Ter 3/2 1/2 2 -1/2 -1/2",
    "CAA Gln Gln 1/2 1/2 4 -1/2 -1/2", "UAA Ter Ter 3/2 1/2 2 -3/2 -1/2",
    "GCC Ala Ala 3/2 3/2 1 3/2 1/2",   "ACC Thr Thr 3/2 3/2 1 1/2 1/2",
    "GCU Ala Ala 1/2 3/2 1 1/2 1/2",   "ACU Thr Thr 1/2 3/2 1 -1/2 1/2",
    "GCG Ala Ala 3/2 1/2 1 3/2 -1/2",  "ACG Thr Thr 3/2 1/2 1 1/2 -1/2",
    "GCA Ala Ala 1/2 1/2 1 1/2 -1/2",  "ACA Thr Thr 1/2 1/2 1 -1/2 -1/2",
    "GUC Val Val 1/2 3/2 2 1/2 1/2",   "AUC Ile Ile 3/2 3/2 1 -1/2 1/2",
    "GUU Val Val 1/2 3/2 2 -1/2 1/2",  "AUU Ile Ile 3/2 3/2 1 -3/2 1/2",
    "GUG Val Val 1/2 1/2 3 1/2 -1/2",  "AUG Met Met 3/2 1/2 1 -1/2 -1/2",
    "GUA Val Val 1/2 1/2 3 -1/2 -1/2", "AUA Met Ile 3/2 1/2 1 -3/2 -1/2",
    "GGC Gly Gly 3/2 3/2 1 3/2 -1/2",  "AGC Ser Ser 3/2 3/2 1 1/2 -1/2",
    "GGU Gly Gly 1/2 3/2 1 1/2 -1/2",  "AGU Ser Ser 1/2 3/2 1 -1/2 -1/2",
    "GGG Gly Gly 3/2 3/2 1 3/2 -3/2",  "AGG Ter Arg 3/2 3/2 1 1/2 -3/2",
    "GGA Gly Gly 1/2 3/2 1 1/2 -3/2",  "AGA Ter Arg 1/2 3/2 1 -1/2 -3/2",
    "GAC Asp Asp 1/2 3/2 2 1/2 -1/2",  "AAC Asn Asn 3/2 3/2 1 -1/2 -1/2",
    "GAU Asp Asp 1/2 3/2 2 -1/2 -1/2", "AAU Asn Asn 3/2 3/2 1 -3/2 -1/2",
    "GAG Glu Glu 1/2 3/2 2 1/2 -3/2",  "AAG Lys Lys 3/2 3/2 1 -1/2 -3/2",
    "GAA Glu Glu 1/2 3/2 2 -1/2 -3/2", "AAA Lys Lys 3/2 3/2 1 -3/2 -3/2",
};

// dinucleotide j_h j_v m3_h m3_v, in table reading order.
constexpr const char* kDinucleotideTable[16] = {
    "CC 1 1 1 1",  "UC 1 1 0 1",  "CG 1 0 1 0",   "UG 1 0 0 0",
    "CU 0 1 0 1",  "UU 1 1 -1 1", "CA 0 0 0 0",   "UA 1 0 -1 0",
    "GC 1 1 1 0",  "AC 1 1 0 0",  "GG 1 1 1 -1",  "AG 1 1 0 -1",
    "GU 0 1 0 0",  "AU 1 1 -1 0", "GA 0 1 0 -1",  "AA 1 1 -1 -1",
};

} // namespace

std::vector<Codon> all_codons() {
    std::vector<Codon> v;
    v.reserve(64);
    for (int i = 0; i < 64; ++i) v.push_back(Codon::from_index(i));
    return v;
}

std::vector<Codon> codons_in_table_order() {
    std::vector<Codon> v;
    v.reserve(64);
    const std::array<std::pair<Nucleotide, Nucleotide>, 2> halves{
        std::pair{Nucleotide::C, Nucleotide::U}, std::pair{Nucleotide::G, Nucleotide::A}};
    for (auto [left, right] : halves)
        for (Nucleotide n2 : all_nucleotides)
            for (Nucleotide n3 : all_nucleotides) {
                v.push_back(Codon{left, n2, n3});
                v.push_back(Codon{right, n2, n3});
            }
    return v;
}

std::vector<Dinucleotide> dinucleotides_in_table_order() {
    std::vector<Dinucleotide> v;
    v.reserve(16);
    const std::array<Nucleotide, 4> seconds{Nucleotide::C, Nucleotide::G, Nucleotide::U,
                                            Nucleotide::A};
    const std::array<std::pair<Nucleotide, Nucleotide>, 2> halves{
        std::pair{Nucleotide::C, Nucleotide::U}, std::pair{Nucleotide::G, Nucleotide::A}};
    for (auto [left, right] : halves)
        for (Nucleotide n2 : seconds) {
            v.push_back(Dinucleotide{left, n2});
            v.push_back(Dinucleotide{right, n2});
        }
    return v;
}

CrystalState codon_state(const Codon& c) {
    static const std::array<CrystalState, 64> cache = [] {
        std::array<CrystalState, 64> a{};
        for (int i = 0; i < 64; ++i) {
            const Codon c = Codon::from_index(i);
            const std::array<DoubledWeight, 3> f{
                DoubledWeight{h_weight(c.n1), v_weight(c.n1)},
                DoubledWeight{h_weight(c.n2), v_weight(c.n2)},
                DoubledWeight{h_weight(c.n3), v_weight(c.n3)}};
            a[i] = product_state(f);
        }
        return a;
    }();
    return cache[c.index()];
}

CrystalState dinucleotide_state(const Dinucleotide& d) {
    static const std::array<CrystalState, 16> cache = [] {
        std::array<CrystalState, 16> a{};
        for (int i = 0; i < 16; ++i) {
            const Dinucleotide d = Dinucleotide::from_index(i);
            const std::array<DoubledWeight, 2> f{
                DoubledWeight{h_weight(d.n1), v_weight(d.n1)},
                DoubledWeight{h_weight(d.n2), v_weight(d.n2)}};
            a[i] = product_state(f);
        }
        return a;
    }();
    return cache[d.index()];
}

const std::vector<CodonRow>& reference_codon_rows() {
    static const std::vector<CodonRow> rows = [] {
        std::vector<CodonRow> v;
        v.reserve(64);
        for (const char* line : kCodonTable) {
            std::istringstream in(line);
            std::string codon, vmc, suc, jh, jv, m3h, m3v;
            int mult = 0;
            in >> codon >> vmc >> suc >> jh >> jv >> mult >> m3h >> m3v;
            if (!in) throw std::logic_error(std::string("bad reference row: ") + line);
            v.push_back(CodonRow{
                codon_from_string(codon),
                CrystalState{IrrepLabel{parse_half(jh), parse_half(jv), mult}, parse_half(m3h),
                             parse_half(m3v)},
                vmc, suc});
        }
        return v;
    }();
    return rows;
}

const std::vector<DinucleotideRow>& reference_dinucleotide_rows() {
    static const std::vector<DinucleotideRow> rows = [] {
        std::vector<DinucleotideRow> v;
        v.reserve(16);
        for (const char* line : kDinucleotideTable) {
            std::istringstream in(line);
            std::string d, jh, jv, m3h, m3v;
            in >> d >> jh >> jv >> m3h >> m3v;
            if (!in) throw std::logic_error(std::string("bad reference row: ") + line);
            v.push_back(DinucleotideRow{
                dinucleotide_from_string(d),
                CrystalState{IrrepLabel{parse_half(jh), parse_half(jv), 1}, parse_half(m3h),
                             parse_half(m3v)}});
        }
        return v;
    }();
    return rows;
}

const CodonRow& reference_row(const Codon& c) {
    static const std::array<const CodonRow*, 64> index = [] {
        std::array<const CodonRow*, 64> a{};
        for (const CodonRow& r : reference_codon_rows()) a[r.codon.index()] = &r;
        return a;
    }();
    return *index[c.index()];
}

std::vector<std::vector<Codon>> GeneticCodeTable::synonym_groups() const {
    std::map<std::string, std::vector<Codon>> by_aa;
    for (const auto& [codon, aa] : map) by_aa[aa].push_back(codon);
    std::vector<std::vector<Codon>> groups;
    for (auto& [aa, codons] : by_aa) {
        std::sort(codons.begin(), codons.end());
        groups.push_back(codons);
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

const GeneticCodeTable& vmc() {
    static const GeneticCodeTable t = [] {
        GeneticCodeTable t{CodeName::VMC, {}};
        for (const CodonRow& r : reference_codon_rows()) t.map[r.codon] = r.vmc_aa;
        return t;
    }();
    return t;
}

const GeneticCodeTable& suc() {
    static const GeneticCodeTable t = [] {
        GeneticCodeTable t{CodeName::SUC, {}};
        for (const CodonRow& r : reference_codon_rows()) t.map[r.codon] = r.suc_aa;
        return t;
    }();
    return t;
}

const GeneticCodeTable& code_table(CodeName n) { return n == CodeName::VMC ? vmc() : suc(); }

std::string code_name(CodeName n) { return n == CodeName::VMC ? "VMC" : "SUC"; }

DinucleotidePredicates dinucleotide_predicates(const Dinucleotide& d) {
    const CrystalState s = dinucleotide_state(d);
    DinucleotidePredicates p;
    p.jv_zero = s.irrep.j_v == HalfInt::whole(0);
    p.lowest_weight_v = s.m_v == -s.irrep.j_v;
    p.lowest_weight_h_nonzero_jh =
        s.m_h == -s.irrep.j_h && s.irrep.j_h != HalfInt::whole(0);
    const Sl2State v{s.irrep.j_v, s.m_v};
    p.unchanged_by_vertical_vector_op =
        tensor_pair(v, Sl2State{HalfInt::whole(1), HalfInt::whole(0)}) == v;
    return p;
}

int third_position_b(const Dinucleotide& d) {
    const DinucleotidePredicates p = dinucleotide_predicates(d);
    return (p.jv_zero || p.lowest_weight_v || p.lowest_weight_h_nonzero_jh) ? 2 : 1;
}

int third_position_alpha(const Dinucleotide& d) {
    const DinucleotidePredicates p = dinucleotide_predicates(d);
    const bool jv_nonzero = dinucleotide_state(d).irrep.j_v != HalfInt::whole(0);
    return (p.lowest_weight_h_nonzero_jh && jv_nonzero) ? 2 : 1;
}

int third_position_beta(const Dinucleotide& d) {
    return dinucleotide_predicates(d).unchanged_by_vertical_vector_op ? 0 : 1;
}

} // namespace ccm
