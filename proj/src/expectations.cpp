#include "ccm/expectations.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

namespace ccm {

namespace {

using json = nlohmann::json;

Discrepancy::Kind kind_from_string(const std::string& s) {
    if (s == "extra_computed") return Discrepancy::Kind::ExtraComputed;
    if (s == "missing_computed") return Discrepancy::Kind::MissingComputed;
    if (s == "note") return Discrepancy::Kind::Note;
    throw std::invalid_argument("unknown discrepancy kind: " + s);
}

std::set<std::string> as_set(const std::vector<CodonPair>& pairs) {
    std::set<std::string> s;
    for (const CodonPair& p : pairs) s.insert(p.str());
    return s;
}

} // namespace

ExpectationsFile load_expectations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open expectations file: " + path);
    json j;
    in >> j;

    ExpectationsFile file;
    file.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    for (const json& jf : j.at("families")) {
        FamilyExpectation fe;
        fe.family = jf.at("family").get<std::string>();
        fe.level = jf.at("level").get<int>();
        fe.citation = jf.at("citation").get<std::string>();
        for (const json& p : jf.value("expected_allowed", json::array()))
            fe.expected_allowed.push_back(p.get<std::string>());
        for (const json& p : jf.value("expected_forbidden", json::array()))
            fe.expected_forbidden.push_back(p.get<std::string>());
        for (const json& jd : jf.value("discrepancies", json::array())) {
            Discrepancy d;
            d.kind = kind_from_string(jd.at("kind").get<std::string>());
            d.pair = jd.value("pair", "");
            d.citation = jd.at("citation").get<std::string>();
            d.detail = jd.value("detail", "");
            fe.discrepancies.push_back(std::move(d));
        }
        file.families.push_back(std::move(fe));
    }
    if (j.contains("derivation")) {
        const json& jd = j.at("derivation");
        for (const json& q : jd.value("level2_quartet_prefixes", json::array()))
            file.derivation.level2_quartet_prefixes.push_back(q.get<std::string>());
        for (const json& s : jd.value("final_sextets", json::array())) {
            std::vector<std::string> codons;
            for (const json& c : s) codons.push_back(c.get<std::string>());
            file.derivation.final_sextets.push_back(std::move(codons));
        }
        for (const auto& [level, shape] : jd.value("shapes", json::object()).items()) {
            std::map<int, int> m;
            for (const auto& [size, count] : shape.items())
                m[std::stoi(size)] = count.get<int>();
            file.derivation.shapes[std::stoi(level)] = std::move(m);
        }
    }
    return file;
}

VerifyReport verify_expectations(const ExpectationsFile& file) {
    VerifyReport report;

    for (const FamilyExpectation& fe : file.families) {
        ++report.families_checked;
        Family family;
        try {
            family = family_by_id(fe.family, file.scheme);
        } catch (const std::exception& e) {
            report.issues.push_back({fe.family, e.what(), true});
            continue;
        }

        const std::set<std::string> computed = as_set(allowed_pairs(family));
        std::set<std::string> adjusted(fe.expected_allowed.begin(), fe.expected_allowed.end());

        for (const Discrepancy& d : fe.discrepancies) {
            switch (d.kind) {
            case Discrepancy::Kind::ExtraComputed:
                if (!computed.count(d.pair)) {
                    report.issues.push_back(
                        {fe.family, "stale discrepancy: " + d.pair +
                                        " flagged extra_computed but the engine does not derive it",
                         true});
                } else if (adjusted.count(d.pair)) {
                    report.issues.push_back(
                        {fe.family, "stale discrepancy: " + d.pair +
                                        " flagged extra_computed but also listed as expected",
                         true});
                } else {
                    adjusted.insert(d.pair);
                    ++report.discrepancies_confirmed;
                    report.issues.push_back(
                        {fe.family, "divergence on record (" + d.citation + "): computed " +
                                        d.pair + " missing from the published list",
                         false});
                }
                break;
            case Discrepancy::Kind::MissingComputed:
                if (computed.count(d.pair)) {
                    report.issues.push_back(
                        {fe.family, "stale discrepancy: " + d.pair +
                                        " flagged missing_computed but the engine derives it",
                         true});
                } else if (!adjusted.count(d.pair)) {
                    report.issues.push_back(
                        {fe.family, "stale discrepancy: " + d.pair +
                                        " flagged missing_computed but not in the expected list",
                         true});
                } else {
                    adjusted.erase(d.pair);
                    ++report.discrepancies_confirmed;
                    report.issues.push_back(
                        {fe.family, "divergence on record (" + d.citation + "): published " +
                                        d.pair + " is not a computed connection",
                         false});
                }
                break;
            case Discrepancy::Kind::Note:
                ++report.discrepancies_confirmed;
                report.issues.push_back(
                    {fe.family, "note on record (" + d.citation + "): " + d.detail, false});
                break;
            }
        }

        for (const std::string& p : adjusted)
            if (!computed.count(p))
                report.issues.push_back(
                    {fe.family, "expected allowed pair not derived: " + p, true});
        for (const std::string& p : computed)
            if (!adjusted.count(p))
                report.issues.push_back(
                    {fe.family, "derived pair not expected: " + p, true});

        const std::set<std::string> forbidden = as_set(forbidden_pairs(family));
        for (const std::string& p : fe.expected_forbidden)
            if (!forbidden.count(p))
                report.issues.push_back(
                    {fe.family, "expected forbidden pair is derived as allowed: " + p, true});
    }

    if (!file.derivation.level2_quartet_prefixes.empty() || !file.derivation.final_sextets.empty() ||
        !file.derivation.shapes.empty()) {
        const Derivation d = derive(file.scheme);

        if (!file.derivation.level2_quartet_prefixes.empty()) {
            std::set<std::string> expected(file.derivation.level2_quartet_prefixes.begin(),
                                           file.derivation.level2_quartet_prefixes.end());
            std::set<std::string> got;
            for (const MultipletClass& m : d.partition(std::min(2, d.options.level_max)).classes)
                if (m.codons.size() == 4) got.insert(prefix(m.codons.front()).str());
            if (expected != got) {
                std::string msg = "level-2 quartets differ; computed:";
                for (const std::string& q : got) msg += " " + q;
                report.issues.push_back({"derivation", msg, true});
            }
        }
        if (!file.derivation.final_sextets.empty()) {
            std::set<std::vector<std::string>> expected(file.derivation.final_sextets.begin(),
                                                        file.derivation.final_sextets.end());
            std::set<std::vector<std::string>> got;
            for (const MultipletClass& m : d.partition(d.options.level_max).classes)
                if (m.codons.size() == 6) {
                    std::vector<std::string> cls;
                    for (const Codon& c : m.codons) cls.push_back(c.str());
                    got.insert(cls);
                }
            if (expected != got)
                report.issues.push_back({"derivation", "final sextet classes differ", true});
        }
        for (const auto& [level, shape] : file.derivation.shapes) {
            if (level > d.options.level_max) continue;
            if (d.partition(level).shape() != shape)
                report.issues.push_back(
                    {"derivation", "shape mismatch at level " + std::to_string(level), true});
        }
    }

    return report;
}

} // namespace ccm
