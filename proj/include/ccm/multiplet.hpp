#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccm/codon_space.hpp"
#include "ccm/error_model.hpp"

namespace ccm {

struct MultipletClass {
    std::vector<Codon> codons;           // sorted by index
    std::vector<std::string> notes;      // singlet-split / stop-codon candidates etc.

    friend bool operator==(const MultipletClass& a, const MultipletClass& b) {
        return a.codons == b.codons;
    }
};

struct MultipletPartition {
    int level = 0;
    std::vector<MultipletClass> classes; // sorted by first codon

    bool covers_all_codons() const;
    // class size -> number of classes
    std::map<int, int> shape() const;
    const MultipletClass* class_of(const Codon& c) const;
    bool same_classes(const MultipletPartition& other) const;
};

// One evaluated whole-multiplet merge opportunity.
struct MergeEvent {
    int level = 0;
    std::vector<Codon> class_a;               // source side, pre-merge
    std::vector<Codon> class_b;               // target side, pre-merge
    std::vector<CodonPair> allowed_connections;
    std::vector<std::string> families;        // families contributing connections
    bool applied = false;
    std::string note;                         // reason when not applied
};

struct DeriveOptions {
    bool damping = true;  // second-position merges need a two-nucleotide corroboration
    int level_max = 5;
    // How the serine-sextet merge evidence is read: the computed connections,
    // or insisting on the single pair quoted in the closing discussion of the
    // source (computed forbidden, so that mode suppresses the merge).
    enum class SerTrigger { Computed, RequireUcaAga } ser_trigger = SerTrigger::Computed;
    // Swap catalog families for variants (by id) before deriving; used by the
    // robustness checks that re-run the derivation under alternative ranks.
    std::map<std::string, std::string> family_substitutions;
};

struct LevelOutcome {
    MultipletPartition partition;
    std::vector<MergeEvent> events;
};

struct Derivation {
    Scheme scheme = Scheme::A;
    DeriveOptions options;
    std::vector<LevelOutcome> levels; // levels[i] is level i+1

    const MultipletPartition& partition(int level) const { return levels.at(level - 1).partition; }
};

Derivation derive(Scheme scheme, DeriveOptions options = {});

// Doublets left holding an unprotected allowed connection (a weak codon maps
// into them but the multiplets did not merge); these are the candidates for
// stop codons or singlet splits.
std::vector<MultipletClass> singlet_candidates(const Derivation& d, int level);

struct DiffReport {
    int matched_classes = 0;
    std::vector<std::vector<Codon>> mixed_classes; // classes mixing amino acids
    std::vector<std::vector<Codon>> split_groups;  // synonym groups spanning several classes
    std::map<int, int> size_histogram;
};

DiffReport diff_against(const MultipletPartition& p, const GeneticCodeTable& table);

} // namespace ccm
