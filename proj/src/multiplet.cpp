#include "ccm/multiplet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ccm {

namespace {

struct Evidence {
    int src_class = 0;
    int tgt_class = 0;
    std::vector<CodonPair> candidates;
    std::vector<CodonPair> allowed;
    std::set<std::string> families;
};

int class_index_of(const std::vector<MultipletClass>& classes, const Codon& c) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].codons.begin(), classes[i].codons.end(), c))
            return static_cast<int>(i);
    throw std::logic_error("codon missing from partition: " + c.str());
}

bool has_weak_allowed(const Evidence& e, Nucleotide third) {
    return std::any_of(e.allowed.begin(), e.allowed.end(),
                       [third](const CodonPair& p) { return p.source.n3 == third; });
}

bool suc_synonymous(const std::vector<Codon>& a, const std::vector<Codon>& b) {
    const std::string& aa = suc().amino_acid(a.front());
    auto all = [&aa](const std::vector<Codon>& v) {
        return std::all_of(v.begin(), v.end(),
                           [&aa](const Codon& c) { return suc().amino_acid(c) == aa; });
    };
    return all(a) && all(b);
}

std::vector<MultipletClass> rebuild(const std::vector<MultipletClass>& classes,
                                    std::vector<int> root) {
    // root is a union-find parent array over class indices
    std::function<int(int)> find = [&](int i) {
        return root[i] == i ? i : root[i] = find(root[i]);
    };
    std::map<int, MultipletClass> merged;
    std::map<int, int> members;
    for (std::size_t i = 0; i < classes.size(); ++i) ++members[find(static_cast<int>(i))];
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const int r = find(static_cast<int>(i));
        MultipletClass& m = merged[r];
        m.codons.insert(m.codons.end(), classes[i].codons.begin(), classes[i].codons.end());
        // A class absorbed into a larger multiplet got its protection; its
        // outstanding flags are resolved and dropped.
        if (members[r] == 1)
            m.notes.insert(m.notes.end(), classes[i].notes.begin(), classes[i].notes.end());
    }
    std::vector<MultipletClass> out;
    for (auto& [_, m] : merged) {
        std::sort(m.codons.begin(), m.codons.end());
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(),
              [](const MultipletClass& a, const MultipletClass& b) { return a.codons < b.codons; });
    return out;
}

} // namespace

bool MultipletPartition::covers_all_codons() const {
    std::set<Codon> seen;
    for (const MultipletClass& c : classes) seen.insert(c.codons.begin(), c.codons.end());
    std::size_t total = 0;
    for (const MultipletClass& c : classes) total += c.codons.size();
    return seen.size() == 64 && total == 64;
}

std::map<int, int> MultipletPartition::shape() const {
    std::map<int, int> s;
    for (const MultipletClass& c : classes) ++s[static_cast<int>(c.codons.size())];
    return s;
}

const MultipletClass* MultipletPartition::class_of(const Codon& c) const {
    for (const MultipletClass& m : classes)
        if (std::binary_search(m.codons.begin(), m.codons.end(), c)) return &m;
    return nullptr;
}

bool MultipletPartition::same_classes(const MultipletPartition& other) const {
    if (classes.size() != other.classes.size()) return false;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].codons != other.classes[i].codons) return false;
    return true;
}

Derivation derive(Scheme scheme, DeriveOptions options) {
    if (options.level_max < 1 || options.level_max > 5)
        throw std::invalid_argument("level_max must be 1..5");

    Derivation d;
    d.scheme = scheme;
    d.options = options;

    const auto catalog = [&](int level) {
        std::vector<Family> fams = families(level, scheme);
        for (Family& f : fams)
            if (auto it = options.family_substitutions.find(f.id);
                it != options.family_substitutions.end())
                f = family_by_id(it->second, scheme);
        return fams;
    };

    std::vector<MultipletClass> classes;
    for (const Codon& c : all_codons()) classes.push_back(MultipletClass{{c}, {}});

    // Allowed two-nucleotide connections, used by the damping gate.
    std::vector<CodonPair> level5_allowed;
    for (const Family& f : catalog(5)) {
        const auto a = allowed_pairs(f);
        level5_allowed.insert(level5_allowed.end(), a.begin(), a.end());
    }

    for (int level = 1; level <= options.level_max; ++level) {
        // Collect per class-pair evidence from the level's merge-driving families.
        std::map<std::pair<int, int>, Evidence> evidence;
        for (const Family& f : catalog(level)) {
            if (!f.merge_eligible) continue;
            for (const CodonPair& cand : f.candidates) {
                const int si = class_index_of(classes, cand.source);
                const int ti = class_index_of(classes, cand.target);
                if (si == ti) continue;
                Evidence& e = evidence[{si, ti}];
                e.src_class = si;
                e.tgt_class = ti;
                e.candidates.push_back(cand);
                if (pair_connects(f, cand)) {
                    e.allowed.push_back(cand);
                    e.families.insert(f.id);
                }
            }
        }

        std::vector<int> root(classes.size());
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int i) {
            return root[i] == i ? i : root[i] = find(root[i]);
        };

        std::vector<MergeEvent> events;
        for (auto& [key, e] : evidence) {
            if (e.allowed.empty()) continue;

            const MultipletClass& src = classes[e.src_class];
            const MultipletClass& tgt = classes[e.tgt_class];
            bool apply = false;
            std::string note;

            if (level == 1) {
                apply = true;
            } else if (level == 2) {
                // A quartet forms only when every third-position transversion
                // of the scheme connects the two doublets.
                apply = e.allowed.size() == e.candidates.size();
                if (!apply) note = "partial transversion cover keeps the doublets apart";
            } else {
                // Weakest-codon protection: for two multiplets of size >= 4
                // both the C- and the A-ending misreadings must be allowed,
                // otherwise one of them suffices.
                const bool octet_rule = src.codons.size() >= 4 && tgt.codons.size() >= 4;
                const bool weak_c = has_weak_allowed(e, Nucleotide::C);
                const bool weak_a = has_weak_allowed(e, Nucleotide::A);
                apply = octet_rule ? (weak_c && weak_a) : (weak_c || weak_a);
                if (!apply)
                    note = octet_rule ? "octet needs both C- and A-ending misreadings"
                                      : "no C- or A-ending misreading is allowed";

                if (apply && level == 4 && options.damping) {
                    const bool corroborated = std::any_of(
                        level5_allowed.begin(), level5_allowed.end(), [&](const CodonPair& p) {
                            return std::binary_search(src.codons.begin(), src.codons.end(),
                                                      p.source) &&
                                   std::binary_search(tgt.codons.begin(), tgt.codons.end(),
                                                      p.target);
                        });
                    if (!corroborated) {
                        apply = false;
                        note = "damped: no simultaneous two-nucleotide misreading backs the merge";
                    }
                }
                if (apply && level == 5 &&
                    options.ser_trigger == DeriveOptions::SerTrigger::RequireUcaAga) {
                    // Insist on the literal trigger quoted in the closing
                    // discussion for merges out of the UCN quartet.
                    const CodonPair quoted{codon_from_string("UCA"), codon_from_string("AGA")};
                    const bool ucn_source =
                        std::binary_search(src.codons.begin(), src.codons.end(), quoted.source);
                    if (ucn_source &&
                        std::find(e.allowed.begin(), e.allowed.end(), quoted) == e.allowed.end()) {
                        apply = false;
                        note = "configured trigger UCA->AGA is not a computed connection";
                    }
                }
                if (apply && scheme != Scheme::A &&
                    !suc_synonymous(src.codons, tgt.codons)) {
                    apply = false;
                    note = "expected merge not applied: classes are not synonymous in SUC";
                }
            }

            MergeEvent ev;
            ev.level = level;
            ev.class_a = src.codons;
            ev.class_b = tgt.codons;
            ev.allowed_connections = e.allowed;
            ev.families.assign(e.families.begin(), e.families.end());
            ev.applied = apply;
            ev.note = note;
            events.push_back(std::move(ev));

            if (apply) root[find(e.src_class)] = find(e.tgt_class);
        }

        classes = rebuild(classes, root);

        // Unprotected weak-codon connections into doublets that stayed apart
        // mark stop-codon / singlet-split candidates.
        for (const MergeEvent& ev : events) {
            if (ev.applied || ev.class_b.size() != 2) continue;
            bool weak = false;
            std::string via;
            for (const CodonPair& p : ev.allowed_connections)
                if (p.source.n3 == Nucleotide::C || p.source.n3 == Nucleotide::A) {
                    weak = true;
                    via = p.str();
                    break;
                }
            if (!weak) continue;
            for (MultipletClass& m : classes)
                if (m.codons == ev.class_b)
                    m.notes.push_back("stop/singlet candidate: unprotected connection " + via);
        }

        MultipletPartition p;
        p.level = level;
        p.classes = classes;
        std::sort(events.begin(), events.end(), [](const MergeEvent& a, const MergeEvent& b) {
            return std::tie(a.class_a, a.class_b) < std::tie(b.class_a, b.class_b);
        });
        d.levels.push_back(LevelOutcome{std::move(p), std::move(events)});
    }
    return d;
}

std::vector<MultipletClass> singlet_candidates(const Derivation& d, int level) {
    std::vector<MultipletClass> out;
    for (const MultipletClass& m : d.partition(level).classes)
        if (!m.notes.empty()) out.push_back(m);
    return out;
}

DiffReport diff_against(const MultipletPartition& p, const GeneticCodeTable& table) {
    DiffReport r;
    for (const MultipletClass& m : p.classes) {
        ++r.size_histogram[static_cast<int>(m.codons.size())];
        std::set<std::string> aas;
        for (const Codon& c : m.codons) aas.insert(table.amino_acid(c));
        if (aas.size() == 1)
            ++r.matched_classes;
        else
            r.mixed_classes.push_back(m.codons);
    }
    for (const std::vector<Codon>& group : table.synonym_groups()) {
        std::set<const MultipletClass*> touched;
        for (const Codon& c : group) touched.insert(p.class_of(c));
        if (touched.size() > 1) r.split_groups.push_back(group);
    }
    return r;
}

} // namespace ccm
