#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ccm/codon.hpp"
#include "ccm/wigner_eckart.hpp"

namespace ccm {

// A: the primary modelisation. B: the alternative rank rules (alpha/beta
// third-position transversions, vector-operator first-position transitions,
// two-step C->A). B0: scheme B with both third-position transversions
// modelled by the plain vector operator.
enum class Scheme { A, B, B0 };

Scheme scheme_from_string(const std::string& s);
std::string scheme_name(Scheme s);

enum class SubstitutionKind {
    Transition,      // C->U or G->A
    TransversionCG,  // C->G
    TransversionUA,  // U->A
    TransversionCA,  // C->A
};

enum class CodonPosition { First = 1, Second = 2, Third = 3 };

struct SubstitutionEvent {
    SubstitutionKind kind;
    CodonPosition position;
    Codon source;
    Codon target;
};

// Derives kind and position from the changed nucleotide; rejects every
// substitution outside the modelled set (U->G in particular, and all
// reversed directions).
SubstitutionEvent make_event(const Codon& source, const Codon& target);

struct CodonPair {
    Codon source;
    Codon target;

    friend constexpr bool operator==(const CodonPair&, const CodonPair&) = default;
    friend constexpr auto operator<=>(const CodonPair&, const CodonPair&) = default;

    std::string str() const { return source.str() + "->" + target.str(); }
};

CodonPair pair_from_string(const std::string& s); // "CCU->UUU"

// How one candidate is evaluated: a single operator, or two operators
// composed through a virtual state (first entry applied first).
struct OpPlan {
    std::vector<CrystalTensorOp> steps;
};

struct Family {
    std::string id;
    int level = 0;
    std::vector<CodonPair> candidates;
    std::function<OpPlan(const CodonPair&)> plan;
    // Only families with this flag drive multiplet merges at their level;
    // at level 5 solely the plain double transversion does.
    bool merge_eligible = true;
};

// The catalog of one level, in a fixed order.
std::vector<Family> families(int level, Scheme scheme);
// Robustness variants and exhaustive-scope queries, by id.
std::vector<Family> variant_families(Scheme scheme);
// Looks through both lists. Throws on unknown id.
Family family_by_id(const std::string& id, Scheme scheme);
std::vector<std::string> family_ids(Scheme scheme, bool include_variants);

bool pair_connects(const Family& family, const CodonPair& pair);
std::vector<CodonPair> allowed_pairs(const Family& family);
std::vector<CodonPair> forbidden_pairs(const Family& family);
// Union over the level's families, sorted and deduplicated.
std::vector<CodonPair> allowed_set(int level, Scheme scheme);

// Operator assignment for a single-substitution event. Throws
// std::invalid_argument for malformed events and std::domain_error for
// events the scheme models as a two-step composition.
CrystalTensorOp operator_for(const SubstitutionEvent& event, Scheme scheme);
// The two-step C->A decomposition (C->G then G->A) used by scheme B in
// first position; each step acts on one sl(2) factor only.
std::pair<CrystalTensorOp, CrystalTensorOp> two_step_operators_for(const SubstitutionEvent& event,
                                                                   Scheme scheme);

enum class DoubleFamilyKind { TT, TTV, TTVD, TVT, TVTD, TVTV, TVTVD1, TVTVD2, TVTVDD };

std::string double_family_name(DoubleFamilyKind k);
DoubleFamilyKind double_family_from_string(const std::string& s);

struct DoubleSubstitution {
    DoubleFamilyKind family;
    Codon source;
    Codon target; // differs from source in the first two nucleotides only
};

// The (first, second) operator pair of the two-nucleotide family, with the
// horizontal rank of each transversion part resolved by its own kind
// (1 for C->G, 2 for U->A).
std::pair<CrystalTensorOp, CrystalTensorOp> double_operator_for(const DoubleSubstitution& d);

} // namespace ccm
