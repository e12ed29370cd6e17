#include "ccm/error_model.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "ccm/codon_space.hpp"

namespace ccm {

namespace {

constexpr CrystalTensorOp op_int(int rank_h, int comp_h, int rank_v, int comp_v) {
    return make_op(2 * rank_h, 2 * comp_h, 2 * rank_v, 2 * comp_v);
}

OpPlan single(const CrystalTensorOp& op) { return OpPlan{{op}}; }

Codon with_nucleotide(const Codon& c, CodonPosition pos, Nucleotide n) {
    Codon out = c;
    switch (pos) {
    case CodonPosition::First: out.n1 = n; break;
    case CodonPosition::Second: out.n2 = n; break;
    case CodonPosition::Third: out.n3 = n; break;
    }
    return out;
}

Nucleotide at(const Codon& c, CodonPosition pos) {
    switch (pos) {
    case CodonPosition::First: return c.n1;
    case CodonPosition::Second: return c.n2;
    case CodonPosition::Third: return c.n3;
    }
    throw std::logic_error("bad position");
}

bool same_irrep(const Codon& a, const Codon& b) {
    return codon_state(a).irrep == codon_state(b).irrep;
}

// All candidates changing `pos` from `from` to `to`, in codon index order.
std::vector<CodonPair> position_candidates(CodonPosition pos, Nucleotide from, Nucleotide to) {
    std::vector<CodonPair> v;
    for (const Codon& c : all_codons())
        if (at(c, pos) == from) v.push_back(CodonPair{c, with_nucleotide(c, pos, to)});
    return v;
}

std::vector<CodonPair> merged(std::vector<CodonPair> a, const std::vector<CodonPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// The exhaustive second-position transition candidates.
std::vector<CodonPair> t2_all_candidates() {
    return merged(position_candidates(CodonPosition::Second, Nucleotide::C, Nucleotide::U),
                  position_candidates(CodonPosition::Second, Nucleotide::G, Nucleotide::A));
}

// Second-position transitions that can trigger whole-multiplet merges; this
// is the candidate set the published discussion actually scans (weakest
// codons of each adjacent multiplet pair).
std::vector<CodonPair> t2_trigger_candidates() {
    std::vector<CodonPair> v;
    auto add = [&v](const char* src, const char* tgt) {
        v.push_back(CodonPair{codon_from_string(src), codon_from_string(tgt)});
    };
    for (char V : {'C', 'G'})
        for (char K : {'C', 'A'}) {
            const std::string s{V, 'C', K}, t{V, 'U', K};
            add(s.c_str(), t.c_str());
        }
    for (char W : {'U', 'A'}) {
        add((std::string{W} + "CA").c_str(), (std::string{W} + "UA").c_str());
        add((std::string{W} + "CC").c_str(), (std::string{W} + "UC").c_str());
    }
    for (char V : {'C', 'G'}) {
        add((std::string{V} + "GA").c_str(), (std::string{V} + "AA").c_str());
        add((std::string{V} + "GC").c_str(), (std::string{V} + "AC").c_str());
    }
    for (char W : {'U', 'A'}) {
        add((std::string{W} + "GA").c_str(), (std::string{W} + "AA").c_str());
        add((std::string{W} + "GC").c_str(), (std::string{W} + "AC").c_str());
    }
    std::sort(v.begin(), v.end());
    return v;
}

Family make_family(std::string id, int level, std::vector<CodonPair> candidates,
                   std::function<OpPlan(const CodonPair&)> plan, bool merge_eligible = true) {
    Family f;
    f.id = std::move(id);
    f.level = level;
    f.candidates = std::move(candidates);
    f.plan = std::move(plan);
    f.merge_eligible = merge_eligible;
    return f;
}

// --- two-nucleotide families ---------------------------------------------

struct DoublePattern {
    Dinucleotide from;
    Dinucleotide to;
    CrystalTensorOp op_one;
    CrystalTensorOp op_two;
};

Dinucleotide dn(const char* s) { return dinucleotide_from_string(s); }

const std::map<DoubleFamilyKind, std::vector<DoublePattern>>& double_patterns() {
    // Horizontal transversion ranks fixed per that step's own kind:
    // 1 for C->G, 2 for U->A.
    static const std::map<DoubleFamilyKind, std::vector<DoublePattern>> m = {
        {DoubleFamilyKind::TT,
         {{dn("CC"), dn("UU"), op_int(1, -1, 1, 0), op_int(1, -1, 2, 0)},
          {dn("GG"), dn("AA"), op_int(1, -1, 1, 0), op_int(1, -1, 2, 0)},
          {dn("CG"), dn("UA"), op_int(1, -1, 1, 0), op_int(1, -1, 2, 0)},
          {dn("GC"), dn("AU"), op_int(1, -1, 1, 0), op_int(1, -1, 2, 0)}}},
        {DoubleFamilyKind::TTV,
         {{dn("CC"), dn("UG"), op_int(1, -1, 1, 0), op_int(1, 0, 2, -1)},
          {dn("CU"), dn("UA"), op_int(1, -1, 1, 0), op_int(2, 0, 2, -1)},
          {dn("GC"), dn("AG"), op_int(1, -1, 1, 0), op_int(1, 0, 2, -1)},
          {dn("GU"), dn("AA"), op_int(1, -1, 1, 0), op_int(2, 0, 2, -1)}}},
        {DoubleFamilyKind::TTVD,
         {{dn("CC"), dn("UA"), op_int(1, -1, 1, 0), op_int(2, -1, 2, -1)},
          {dn("GC"), dn("AA"), op_int(1, -1, 1, 0), op_int(2, -1, 2, -1)}}},
        {DoubleFamilyKind::TVT,
         {{dn("CC"), dn("GU"), op_int(1, 0, 1, -1), op_int(1, -1, 2, 0)},
          {dn("CG"), dn("GA"), op_int(1, 0, 1, -1), op_int(1, -1, 2, 0)},
          {dn("UC"), dn("AU"), op_int(2, 0, 1, -1), op_int(1, -1, 2, 0)},
          {dn("UG"), dn("AA"), op_int(2, 0, 1, -1), op_int(1, -1, 2, 0)}}},
        {DoubleFamilyKind::TVTD,
         {{dn("CC"), dn("AU"), op_int(1, -1, 1, -1), op_int(1, -1, 2, 0)},
          {dn("CG"), dn("AA"), op_int(1, -1, 1, -1), op_int(1, -1, 2, 0)}}},
        {DoubleFamilyKind::TVTV,
         {{dn("CC"), dn("GG"), op_int(1, 0, 1, -1), op_int(1, 0, 2, -1)},
          {dn("CU"), dn("GA"), op_int(1, 0, 1, -1), op_int(2, 0, 2, -1)},
          {dn("UU"), dn("AA"), op_int(2, 0, 1, -1), op_int(2, 0, 2, -1)},
          {dn("UC"), dn("AG"), op_int(2, 0, 1, -1), op_int(1, 0, 2, -1)}}},
        {DoubleFamilyKind::TVTVD1,
         {{dn("CC"), dn("AG"), op_int(1, -1, 1, -1), op_int(1, 0, 2, -1)},
          {dn("CU"), dn("AA"), op_int(1, -1, 1, -1), op_int(2, 0, 2, -1)}}},
        {DoubleFamilyKind::TVTVD2,
         {{dn("CC"), dn("GA"), op_int(1, 0, 1, -1), op_int(2, -1, 2, -1)},
          {dn("UC"), dn("AA"), op_int(2, 0, 1, -1), op_int(2, -1, 2, -1)}}},
        {DoubleFamilyKind::TVTVDD,
         {{dn("CC"), dn("AA"), op_int(1, -1, 1, -1), op_int(2, -1, 2, -1)}}},
    };
    return m;
}

Family make_double_family(DoubleFamilyKind kind, bool merge_eligible) {
    std::vector<CodonPair> candidates;
    for (const DoublePattern& p : double_patterns().at(kind))
        for (Nucleotide n : all_nucleotides)
            candidates.push_back(
                CodonPair{Codon{p.from.n1, p.from.n2, n}, Codon{p.to.n1, p.to.n2, n}});
    std::sort(candidates.begin(), candidates.end());
    auto plan = [kind](const CodonPair& pair) {
        const auto ops = double_operator_for(DoubleSubstitution{kind, pair.source, pair.target});
        return OpPlan{{ops.first, ops.second}};
    };
    return make_family(double_family_name(kind), 5, std::move(candidates), plan, merge_eligible);
}

} // namespace

Scheme scheme_from_string(const std::string& s) {
    if (s == "a" || s == "A") return Scheme::A;
    if (s == "b" || s == "B") return Scheme::B;
    if (s == "b0" || s == "B0") return Scheme::B0;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::string scheme_name(Scheme s) {
    switch (s) {
    case Scheme::A: return "a";
    case Scheme::B: return "b";
    case Scheme::B0: return "b0";
    }
    return "?";
}

SubstitutionEvent make_event(const Codon& source, const Codon& target) {
    int changed = 0;
    CodonPosition pos = CodonPosition::First;
    for (CodonPosition p : {CodonPosition::First, CodonPosition::Second, CodonPosition::Third})
        if (at(source, p) != at(target, p)) {
            ++changed;
            pos = p;
        }
    if (changed != 1)
        throw std::invalid_argument("event must change exactly one nucleotide: " + source.str() +
                                    "->" + target.str());
    const Nucleotide from = at(source, pos), to = at(target, pos);
    SubstitutionKind kind;
    if ((from == Nucleotide::C && to == Nucleotide::U) ||
        (from == Nucleotide::G && to == Nucleotide::A))
        kind = SubstitutionKind::Transition;
    else if (from == Nucleotide::C && to == Nucleotide::G)
        kind = SubstitutionKind::TransversionCG;
    else if (from == Nucleotide::U && to == Nucleotide::A)
        kind = SubstitutionKind::TransversionUA;
    else if (from == Nucleotide::C && to == Nucleotide::A)
        kind = SubstitutionKind::TransversionCA;
    else
        throw std::invalid_argument(std::string("substitution not modelled: ") + to_char(from) +
                                    "->" + to_char(to));
    return SubstitutionEvent{kind, pos, source, target};
}

CodonPair pair_from_string(const std::string& s) {
    const auto pos = s.find("->");
    if (pos == std::string::npos || s.size() != pos + 5)
        throw std::invalid_argument("expected SRC->TGT: " + s);
    return CodonPair{codon_from_string(s.substr(0, pos)), codon_from_string(s.substr(pos + 2))};
}

CrystalTensorOp operator_for(const SubstitutionEvent& event, Scheme scheme) {
    const SubstitutionEvent checked = make_event(event.source, event.target);
    if (checked.kind != event.kind || checked.position != event.position)
        throw std::invalid_argument("event fields do not match its codons");

    const Dinucleotide xz = prefix(event.source);
    switch (event.kind) {
    case SubstitutionKind::Transition:
        switch (event.position) {
        case CodonPosition::Third: return op_int(1, -1, 0, 0);
        case CodonPosition::First:
            return scheme == Scheme::A ? op_int(1, -1, 1, 0) : op_int(1, -1, 0, 0);
        case CodonPosition::Second: return op_int(1, -1, 2, 0);
        }
        break;
    case SubstitutionKind::TransversionCG:
        switch (event.position) {
        case CodonPosition::Third:
            if (scheme == Scheme::A) return op_int(third_position_b(xz), 0, 1, -1);
            if (scheme == Scheme::B) return op_int(third_position_alpha(xz), 0, 1, -1);
            return op_int(1, 0, 1, -1);
        case CodonPosition::First: return op_int(1, 0, 1, -1);
        case CodonPosition::Second: return op_int(1, 0, 2, -1);
        }
        break;
    case SubstitutionKind::TransversionUA:
        switch (event.position) {
        case CodonPosition::Third:
            if (scheme == Scheme::A) return op_int(third_position_b(xz) - 1, 0, 1, -1);
            if (scheme == Scheme::B) return op_int(third_position_beta(xz), 0, 1, -1);
            return op_int(1, 0, 1, -1);
        case CodonPosition::First: return op_int(2, 0, 1, -1);
        case CodonPosition::Second: return op_int(2, 0, 2, -1);
        }
        break;
    case SubstitutionKind::TransversionCA:
        switch (event.position) {
        case CodonPosition::Third:
            if (scheme == Scheme::A) return op_int(third_position_b(xz), -1, 1, -1);
            throw std::domain_error("schemes b/b0 do not model a direct third-position C->A");
        case CodonPosition::First: {
            if (scheme != Scheme::A)
                throw std::domain_error(
                    "schemes b/b0 model first-position C->A as a two-step composition; "
                    "use two_step_operators_for");
            const Codon u_first = with_nucleotide(event.source, CodonPosition::First, Nucleotide::U);
            const int c = same_irrep(event.source, u_first) ? 1 : 2;
            return op_int(c, -1, 1, -1);
        }
        case CodonPosition::Second: {
            const Codon u_mid = with_nucleotide(event.source, CodonPosition::Second, Nucleotide::U);
            const int c = same_irrep(event.source, u_mid) ? 1 : 2;
            return op_int(c, -1, 2, -1);
        }
        }
        break;
    }
    throw std::logic_error("unreachable");
}

std::pair<CrystalTensorOp, CrystalTensorOp> two_step_operators_for(const SubstitutionEvent& event,
                                                                   Scheme scheme) {
    if (scheme == Scheme::A || event.kind != SubstitutionKind::TransversionCA ||
        event.position != CodonPosition::First)
        throw std::domain_error("two-step composition only models first-position C->A in scheme b");
    // C->G (vertical lowering) then G->A (horizontal lowering).
    return {op_int(0, 0, 1, -1), op_int(1, -1, 0, 0)};
}

std::string double_family_name(DoubleFamilyKind k) {
    switch (k) {
    case DoubleFamilyKind::TT: return "tt";
    case DoubleFamilyKind::TTV: return "ttv";
    case DoubleFamilyKind::TTVD: return "ttvd";
    case DoubleFamilyKind::TVT: return "tvt";
    case DoubleFamilyKind::TVTD: return "tvtd";
    case DoubleFamilyKind::TVTV: return "tvtv";
    case DoubleFamilyKind::TVTVD1: return "tvtvd1";
    case DoubleFamilyKind::TVTVD2: return "tvtvd2";
    case DoubleFamilyKind::TVTVDD: return "tvtvdd";
    }
    return "?";
}

DoubleFamilyKind double_family_from_string(const std::string& s) {
    for (DoubleFamilyKind k :
         {DoubleFamilyKind::TT, DoubleFamilyKind::TTV, DoubleFamilyKind::TTVD,
          DoubleFamilyKind::TVT, DoubleFamilyKind::TVTD, DoubleFamilyKind::TVTV,
          DoubleFamilyKind::TVTVD1, DoubleFamilyKind::TVTVD2, DoubleFamilyKind::TVTVDD})
        if (double_family_name(k) == s) return k;
    throw std::invalid_argument("unknown double-substitution family: " + s);
}

std::pair<CrystalTensorOp, CrystalTensorOp> double_operator_for(const DoubleSubstitution& d) {
    if (d.source.n3 != d.target.n3)
        throw std::invalid_argument("two-nucleotide substitution must keep the third nucleotide");
    for (const DoublePattern& p : double_patterns().at(d.family))
        if (prefix(d.source) == p.from && prefix(d.target) == p.to)
            return {p.op_one, p.op_two};
    throw std::invalid_argument("codons do not match family " + double_family_name(d.family) +
                                ": " + d.source.str() + "->" + d.target.str());
}

std::vector<Family> families(int level, Scheme scheme) {
    std::vector<Family> out;
    const auto plan_for = [scheme](const CodonPair& p) {
        return single(operator_for(make_event(p.source, p.target), scheme));
    };
    switch (level) {
    case 1:
        out.push_back(make_family(
            "t3_c2u", 1, position_candidates(CodonPosition::Third, Nucleotide::C, Nucleotide::U),
            plan_for));
        out.push_back(make_family(
            "t3_g2a", 1, position_candidates(CodonPosition::Third, Nucleotide::G, Nucleotide::A),
            plan_for));
        break;
    case 2: {
        const auto cg = position_candidates(CodonPosition::Third, Nucleotide::C, Nucleotide::G);
        const auto ua = position_candidates(CodonPosition::Third, Nucleotide::U, Nucleotide::A);
        const auto ca = position_candidates(CodonPosition::Third, Nucleotide::C, Nucleotide::A);
        if (scheme == Scheme::A) {
            out.push_back(make_family("tv3_c2g", 2, cg, plan_for));
            out.push_back(make_family("tv3_u2a", 2, ua, plan_for));
            out.push_back(make_family("tv3_c2a", 2, ca, plan_for));
        } else {
            const char* suffix = scheme == Scheme::B ? "_b" : "_b0";
            out.push_back(make_family(std::string("tv3_c2g") + suffix, 2, cg, plan_for));
            out.push_back(make_family(std::string("tv3_u2a") + suffix, 2, ua, plan_for));
        }
        break;
    }
    case 3: {
        const auto transitions =
            merged(position_candidates(CodonPosition::First, Nucleotide::C, Nucleotide::U),
                   position_candidates(CodonPosition::First, Nucleotide::G, Nucleotide::A));
        const auto cg = position_candidates(CodonPosition::First, Nucleotide::C, Nucleotide::G);
        const auto ua = position_candidates(CodonPosition::First, Nucleotide::U, Nucleotide::A);
        const auto ca = position_candidates(CodonPosition::First, Nucleotide::C, Nucleotide::A);
        if (scheme == Scheme::A) {
            out.push_back(make_family("t1", 3, transitions, plan_for));
            out.push_back(make_family("tv1_c2g", 3, cg, plan_for));
            out.push_back(make_family("tv1_u2a", 3, ua, plan_for));
            out.push_back(make_family("tv1_c2a", 3, ca, plan_for));
        } else {
            out.push_back(make_family("t1_b", 3, transitions, plan_for));
            out.push_back(make_family("tv1_c2g", 3, cg, plan_for));
            out.push_back(make_family("tv1_u2a", 3, ua, plan_for));
            out.push_back(make_family("tv1_c2a_2step", 3, ca, [](const CodonPair& p) {
                const auto ops =
                    two_step_operators_for(make_event(p.source, p.target), Scheme::B);
                return OpPlan{{ops.first, ops.second}};
            }));
        }
        break;
    }
    case 4:
        out.push_back(make_family("t2", 4, t2_trigger_candidates(), plan_for));
        out.push_back(make_family(
            "tv2_c2g", 4, position_candidates(CodonPosition::Second, Nucleotide::C, Nucleotide::G),
            plan_for));
        out.push_back(make_family(
            "tv2_u2a", 4, position_candidates(CodonPosition::Second, Nucleotide::U, Nucleotide::A),
            plan_for));
        out.push_back(make_family(
            "tv2_c2a", 4, position_candidates(CodonPosition::Second, Nucleotide::C, Nucleotide::A),
            plan_for));
        break;
    case 5:
        for (DoubleFamilyKind k :
             {DoubleFamilyKind::TT, DoubleFamilyKind::TTV, DoubleFamilyKind::TTVD,
              DoubleFamilyKind::TVT, DoubleFamilyKind::TVTD, DoubleFamilyKind::TVTV,
              DoubleFamilyKind::TVTVD1, DoubleFamilyKind::TVTVD2, DoubleFamilyKind::TVTVDD})
            out.push_back(make_double_family(k, k == DoubleFamilyKind::TVTV));
        break;
    default:
        throw std::invalid_argument("level must be 1..5");
    }
    return out;
}

std::vector<Family> variant_families(Scheme scheme) {
    std::vector<Family> out;
    if (scheme != Scheme::A) return out;

    // Third-position C->U transition with a rank-1 vertical part.
    out.push_back(make_family(
        "t3_c2u_vrank1", 1,
        position_candidates(CodonPosition::Third, Nucleotide::C, Nucleotide::U),
        [](const CodonPair&) { return single(op_int(1, -1, 1, 0)); }));
    // First-position transversions with the horizontal rank forced to 1 / 2.
    out.push_back(make_family(
        "tv1_c2g_rank2", 3, position_candidates(CodonPosition::First, Nucleotide::C, Nucleotide::G),
        [](const CodonPair&) { return single(op_int(2, 0, 1, -1)); }));
    out.push_back(make_family(
        "tv1_u2a_rank1", 3, position_candidates(CodonPosition::First, Nucleotide::U, Nucleotide::A),
        [](const CodonPair&) { return single(op_int(1, 0, 1, -1)); }));
    // Second-position C->G with a rank-2 horizontal part.
    out.push_back(make_family(
        "tv2_c2g_rank2", 4,
        position_candidates(CodonPosition::Second, Nucleotide::C, Nucleotide::G),
        [](const CodonPair&) { return single(op_int(2, 0, 2, -1)); }));
    // Second-position transitions over every candidate, not only the
    // merge-trigger scan.
    out.push_back(make_family("t2_all", 4, t2_all_candidates(), [](const CodonPair& p) {
        return single(operator_for(make_event(p.source, p.target), Scheme::A));
    }));
    // Alternative double-transition operator pair.
    {
        Family tt = make_double_family(DoubleFamilyKind::TT, false);
        tt.id = "tt_alt";
        tt.plan = [](const CodonPair&) {
            return OpPlan{{op_int(1, -1, 0, 0), op_int(2, -1, 0, 0)}};
        };
        out.push_back(std::move(tt));
    }
    return out;
}

Family family_by_id(const std::string& id, Scheme scheme) {
    for (int level = 1; level <= 5; ++level)
        for (Family& f : families(level, scheme))
            if (f.id == id) return std::move(f);
    for (Family& f : variant_families(scheme))
        if (f.id == id) return std::move(f);
    throw std::invalid_argument("unknown family: " + id + " (scheme " + scheme_name(scheme) + ")");
}

std::vector<std::string> family_ids(Scheme scheme, bool include_variants) {
    std::vector<std::string> ids;
    for (int level = 1; level <= 5; ++level)
        for (const Family& f : families(level, scheme)) ids.push_back(f.id);
    if (include_variants)
        for (const Family& f : variant_families(scheme)) ids.push_back(f.id);
    return ids;
}

bool pair_connects(const Family& family, const CodonPair& pair) {
    const OpPlan plan = family.plan(pair);
    if (plan.steps.size() == 1) return connects(pair.source, plan.steps[0], pair.target);
    if (plan.steps.size() == 2)
        return connects_sequential(pair.source, plan.steps[0], plan.steps[1], pair.target);
    throw std::logic_error("operator plan must have one or two steps");
}

std::vector<CodonPair> allowed_pairs(const Family& family) {
    std::vector<CodonPair> v;
    for (const CodonPair& p : family.candidates)
        if (pair_connects(family, p)) v.push_back(p);
    return v;
}

std::vector<CodonPair> forbidden_pairs(const Family& family) {
    std::vector<CodonPair> v;
    for (const CodonPair& p : family.candidates)
        if (!pair_connects(family, p)) v.push_back(p);
    return v;
}

std::vector<CodonPair> allowed_set(int level, Scheme scheme) {
    std::vector<CodonPair> v;
    for (const Family& f : families(level, scheme)) {
        const auto a = allowed_pairs(f);
        v.insert(v.end(), a.begin(), a.end());
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace ccm
