#pragma once

#include <optional>
#include <string>

#include "ccm/codon.hpp"
#include "ccm/crystal_algebra.hpp"

namespace ccm {

// One component of a crystal tensor operator: a (rank, component) pair per
// sl(2) factor. A factor with |component| > rank makes the whole operator
// vanish.
struct CrystalTensorOp {
    HalfInt rank_h;
    HalfInt comp_h;
    HalfInt rank_v;
    HalfInt comp_v;

    friend constexpr bool operator==(const CrystalTensorOp&, const CrystalTensorOp&) = default;

    constexpr bool vanishing() const {
        return comp_h.abs() > rank_h || comp_v.abs() > rank_v;
    }
    std::string str() const {
        return "t[" + rank_h.str() + "," + comp_h.str() + "|" + rank_v.str() + "," + comp_v.str() +
               "]";
    }
};

constexpr CrystalTensorOp make_op(int rank_h2, int comp_h2, int rank_v2, int comp_v2) {
    return CrystalTensorOp{HalfInt::from_twice(rank_h2), HalfInt::from_twice(comp_h2),
                           HalfInt::from_twice(rank_v2), HalfInt::from_twice(comp_v2)};
}

// State labels without the multiplicity index. The selection rule compares
// these quadruples only; several required connections cross irrep copies, so
// the copy index must not take part in the match.
struct LabelQuad {
    HalfInt j_h;
    HalfInt j_v;
    HalfInt m_h;
    HalfInt m_v;

    friend constexpr bool operator==(const LabelQuad&, const LabelQuad&) = default;

    std::string str() const {
        return "(" + j_h.str() + "," + j_v.str() + ";" + m_h.str() + "," + m_v.str() + ")";
    }
};

constexpr LabelQuad labels_of(const CrystalState& s) {
    return LabelQuad{s.irrep.j_h, s.irrep.j_v, s.m_h, s.m_v};
}

LabelQuad codon_labels(const Codon& c);

// Labels of `source (x) op`, state in the first tensor slot, operator in the
// second; nullopt when the operator vanishes.
std::optional<LabelQuad> apply_op(const LabelQuad& source, const CrystalTensorOp& op);

// Does the component carry the source codon's state onto the target codon's
// label quadruple?
bool connects(const Codon& source, const CrystalTensorOp& op, const Codon& target);

// Two-step connection via a virtual state: apply op_one, treat the resulting
// labels as a bare state, apply op_two, compare with the target's labels.
bool connects_sequential(const Codon& source, const CrystalTensorOp& op_one,
                         const CrystalTensorOp& op_two, const Codon& target);

} // namespace ccm
