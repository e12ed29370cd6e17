#include "ccm/wigner_eckart.hpp"

#include "ccm/codon_space.hpp"
#include "ccm/sl2.hpp"

namespace ccm {

LabelQuad codon_labels(const Codon& c) { return labels_of(codon_state(c)); }

std::optional<LabelQuad> apply_op(const LabelQuad& source, const CrystalTensorOp& op) {
    if (op.vanishing()) return std::nullopt;
    const Sl2State h = tensor_pair(Sl2State{source.j_h, source.m_h},
                                   Sl2State{op.rank_h, op.comp_h});
    const Sl2State v = tensor_pair(Sl2State{source.j_v, source.m_v},
                                   Sl2State{op.rank_v, op.comp_v});
    return LabelQuad{h.j, v.j, h.m, v.m};
}

bool connects(const Codon& source, const CrystalTensorOp& op, const Codon& target) {
    const auto result = apply_op(codon_labels(source), op);
    return result && *result == codon_labels(target);
}

bool connects_sequential(const Codon& source, const CrystalTensorOp& op_one,
                         const CrystalTensorOp& op_two, const Codon& target) {
    const auto virtual_state = apply_op(codon_labels(source), op_one);
    if (!virtual_state) return false;
    const auto result = apply_op(*virtual_state, op_two);
    return result && *result == codon_labels(target);
}

} // namespace ccm
