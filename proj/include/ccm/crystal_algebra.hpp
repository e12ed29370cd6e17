#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccm/half_int.hpp"
#include "ccm/sl2.hpp"

namespace ccm {

// Which copy of (j_h, j_v) a state lives in. `mult` counts from 1 in the
// canonical order fixed by the component bookkeeping below.
struct IrrepLabel {
    HalfInt j_h;
    HalfInt j_v;
    int mult = 1;

    friend constexpr bool operator==(const IrrepLabel&, const IrrepLabel&) = default;

    std::string str() const {
        return "(" + j_h.str() + "," + j_v.str() + ")^" + std::to_string(mult);
    }
};

struct CrystalState {
    IrrepLabel irrep;
    HalfInt m_h;
    HalfInt m_v;

    friend constexpr bool operator==(const CrystalState&, const CrystalState&) = default;

    std::string str() const {
        return irrep.str() + "[" + m_h.str() + "," + m_v.str() + "]";
    }
};

// One factor of the doubled fundamental irrep (1/2,1/2): its two weights.
struct DoubledWeight {
    HalfInt m_h;
    HalfInt m_v;
};

// Left-associated fold of an sl(2) factor chain, recording the intermediate
// J values. Two elements of the n-fold product of B(1/2) sit in the same
// connected component exactly when their J paths coincide, so the path also
// identifies the irrep copy.
struct FoldResult {
    Sl2State state;
    std::vector<HalfInt> path; // J after each factor, path.front() == 1/2
};

FoldResult fold_fundamental(std::span<const HalfInt> weights);

// Index of the component identified by `path` among the components of the
// n-fold product, in order of first appearance when the 2^n weight sequences
// are enumerated with +1/2 before -1/2. Supports n = 1, 2, 3.
int component_index(std::span<const HalfInt> path);

// Full doubled-crystal product of 1..3 fundamental factors. The multiplicity
// label orders the copies of (j_h, j_v) by the lexicographic rank of the pair
// (horizontal component index, vertical component index); that ordering
// reproduces the reference table superscripts, which joint first-appearance
// order does not.
CrystalState product_state(std::span<const DoubledWeight> factors);

} // namespace ccm
