#include "ccm/json_io.hpp"

namespace ccm {

json codon_table_json() {
    json rows = json::array();
    for (const Codon& c : codons_in_table_order()) {
        const CodonRow& r = reference_row(c);
        const CrystalState s = codon_state(c);
        rows.push_back(json{{"codon", c.str()},
                            {"jh", s.irrep.j_h.str()},
                            {"jv", s.irrep.j_v.str()},
                            {"mult", s.irrep.mult},
                            {"m3h", s.m_h.str()},
                            {"m3v", s.m_v.str()},
                            {"vmc_aa", r.vmc_aa},
                            {"suc_aa", r.suc_aa}});
    }
    return rows;
}

json dinucleotide_table_json() {
    json rows = json::array();
    for (const Dinucleotide& d : dinucleotides_in_table_order()) {
        const CrystalState s = dinucleotide_state(d);
        rows.push_back(json{{"dinucleotide", d.str()},
                            {"jh", s.irrep.j_h.str()},
                            {"jv", s.irrep.j_v.str()},
                            {"m3h", s.m_h.str()},
                            {"m3v", s.m_v.str()}});
    }
    return rows;
}

bool codon_table_roundtrips(const json& j) {
    if (!j.is_array() || j.size() != 64) return false;
    for (const json& row : j) {
        const Codon c = codon_from_string(row.at("codon").get<std::string>());
        const CrystalState s = codon_state(c);
        const CodonRow& r = reference_row(c);
        if (row.at("jh").get<std::string>() != s.irrep.j_h.str()) return false;
        if (row.at("jv").get<std::string>() != s.irrep.j_v.str()) return false;
        if (row.at("mult").get<int>() != s.irrep.mult) return false;
        if (row.at("m3h").get<std::string>() != s.m_h.str()) return false;
        if (row.at("m3v").get<std::string>() != s.m_v.str()) return false;
        if (row.at("vmc_aa").get<std::string>() != r.vmc_aa) return false;
        if (row.at("suc_aa").get<std::string>() != r.suc_aa) return false;
    }
    return true;
}

json pairs_json(const std::vector<CodonPair>& pairs) {
    json a = json::array();
    for (const CodonPair& p : pairs) a.push_back(p.str());
    return a;
}

json family_report_json(const Family& family) {
    json entries = json::array();
    for (const CodonPair& p : family.candidates)
        entries.push_back(json{{"family", family.id},
                               {"source", p.source.str()},
                               {"target", p.target.str()},
                               {"allowed", pair_connects(family, p)}});
    return entries;
}

json partition_json(const MultipletPartition& p) {
    json classes = json::array();
    for (const MultipletClass& m : p.classes) {
        json codons = json::array();
        for (const Codon& c : m.codons) codons.push_back(c.str());
        json cls{{"codons", codons}, {"size", m.codons.size()}};
        if (!m.notes.empty()) cls["notes"] = m.notes;
        classes.push_back(cls);
    }
    json shape = json::object();
    for (const auto& [size, count] : p.shape()) shape[std::to_string(size)] = count;
    return json{{"level", p.level}, {"classes", classes}, {"shape", shape}};
}

json derivation_json(const Derivation& d) {
    json levels = json::array();
    for (const LevelOutcome& lo : d.levels) {
        json events = json::array();
        for (const MergeEvent& e : lo.events) {
            json ja = json::array(), jb = json::array();
            for (const Codon& c : e.class_a) ja.push_back(c.str());
            for (const Codon& c : e.class_b) jb.push_back(c.str());
            events.push_back(json{{"class_a", ja},
                                  {"class_b", jb},
                                  {"connections", pairs_json(e.allowed_connections)},
                                  {"families", e.families},
                                  {"applied", e.applied},
                                  {"note", e.note}});
        }
        levels.push_back(json{{"partition", partition_json(lo.partition)}, {"merges", events}});
    }
    return json{{"scheme", scheme_name(d.scheme)},
                {"damping", d.options.damping},
                {"levels", levels}};
}

json diff_json(const DiffReport& r, const MultipletPartition& p, const GeneticCodeTable& t) {
    json mixed = json::array();
    for (const auto& cls : r.mixed_classes) {
        json codons = json::array();
        for (const Codon& c : cls) codons.push_back(c.str() + ":" + t.amino_acid(c));
        mixed.push_back(codons);
    }
    json splits = json::array();
    for (const auto& grp : r.split_groups) {
        json codons = json::array();
        for (const Codon& c : grp) codons.push_back(c.str());
        splits.push_back(json{{"aa", t.amino_acid(grp.front())}, {"codons", codons}});
    }
    json histogram = json::object();
    for (const auto& [size, count] : r.size_histogram) histogram[std::to_string(size)] = count;
    return json{{"code", code_name(t.name)},
                {"level", p.level},
                {"matched_classes", r.matched_classes},
                {"mixed_classes", mixed},
                {"split_groups", splits},
                {"size_histogram", histogram}};
}

json counts_json() {
    const StageCounts ref = reference_stage_counts();
    const Rational prob = pattern_probability(ref);
    const StageCountModel model = model_stage_counts();
    return json{{"quartet_choices", count_quartet_choices()},
                {"sextet2_choices", ref.sextet2_choices},
                {"sextet3_choices", ref.sextet3_choices},
                {"probability", {{"num", prob.num},
                                 {"den", prob.den},
                                 {"scientific_2sig", scientific(prob, 2)}}},
                {"pairing_model",
                 {{"sextet2_choices", model.sextet2_choices},
                  {"sextet3_choices", model.sextet3_choices},
                  {"matches_reference", model.matches_reference}}}};
}

} // namespace ccm
