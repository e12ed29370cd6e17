#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccm/codon.hpp"
#include "ccm/crystal_algebra.hpp"

namespace ccm {

// Crystal state of a codon / dinucleotide, computed from the nucleotide
// weights by the left-associated fold. Cached; cheap to call everywhere.
CrystalState codon_state(const Codon& c);
CrystalState dinucleotide_state(const Dinucleotide& d);

// One row of the embedded reference assignment (the published table the
// computation must reproduce, kept as independent data on purpose).
struct CodonRow {
    Codon codon;
    CrystalState state;
    std::string vmc_aa; // "Pro", ..., "Ter"
    std::string suc_aa;
};

struct DinucleotideRow {
    Dinucleotide dinucleotide;
    CrystalState state;
};

// Rows in table reading order (64 / 16 entries).
const std::vector<CodonRow>& reference_codon_rows();
const std::vector<DinucleotideRow>& reference_dinucleotide_rows();
const CodonRow& reference_row(const Codon& c);

enum class CodeName { VMC, SUC };

struct GeneticCodeTable {
    CodeName name;
    std::map<Codon, std::string> map;

    const std::string& amino_acid(const Codon& c) const { return map.at(c); }
    // Synonym classes (Ter counts as one class), sorted for determinism.
    std::vector<std::vector<Codon>> synonym_groups() const;
};

const GeneticCodeTable& vmc();
const GeneticCodeTable& suc();
const GeneticCodeTable& code_table(CodeName n);
std::string code_name(CodeName n);

// Crystal-theoretic flags of a dinucleotide state used by the rank rules of
// the third-position transversion operators.
struct DinucleotidePredicates {
    bool jv_zero = false;                 // J_V == 0
    bool lowest_weight_v = false;         // M_V == -J_V
    bool lowest_weight_h_nonzero_jh = false; // M_H == -J_H with J_H != 0
    bool unchanged_by_vertical_vector_op = false; // rank-1 comp-0 vertical op keeps the labels
};

DinucleotidePredicates dinucleotide_predicates(const Dinucleotide& d);

// Horizontal rank b of the third-position transversion operators:
// 2 when the dinucleotide has J_V = 0 or is lowest weight vertically, or
// lowest weight horizontally with J_H != 0; 1 otherwise.
int third_position_b(const Dinucleotide& d);

// Scheme-B variant ranks for the same operators.
int third_position_alpha(const Dinucleotide& d); // 2 on the lowest-weight-H set with J_V != 0
int third_position_beta(const Dinucleotide& d);  // 0 when the vertical vector op keeps the labels

} // namespace ccm
