#pragma once

#include <string>
#include <vector>

#include "ccm/error_model.hpp"
#include "ccm/multiplet.hpp"

namespace ccm {

// One recorded divergence between a published enumeration and the computed
// selection rule. `ExtraComputed`: the engine derives the pair although the
// source omits it. `MissingComputed`: the source lists the pair but the
// operators do not connect it. `Note`: a textual inconsistency kept for the
// record (no set adjustment).
struct Discrepancy {
    enum class Kind { ExtraComputed, MissingComputed, Note };
    Kind kind = Kind::Note;
    std::string pair;     // "SRC->TGT" for the set-adjusting kinds
    std::string citation; // where the published claim lives
    std::string detail;
};

struct FamilyExpectation {
    std::string family;
    int level = 0;
    std::string citation;
    std::vector<std::string> expected_allowed;   // the published enumeration, verbatim
    std::vector<std::string> expected_forbidden; // explicit published forbidden lists
    std::vector<Discrepancy> discrepancies;
};

struct DerivationExpectation {
    std::vector<std::string> level2_quartet_prefixes; // e.g. "CC"
    std::vector<std::vector<std::string>> final_sextets;
    std::map<int, std::map<int, int>> shapes; // level -> (class size -> count)
};

struct ExpectationsFile {
    Scheme scheme = Scheme::A;
    std::vector<FamilyExpectation> families;
    DerivationExpectation derivation;
};

ExpectationsFile load_expectations(const std::string& path);

struct VerifyIssue {
    std::string where;
    std::string message;
    bool fatal = true;
};

struct VerifyReport {
    int families_checked = 0;
    int discrepancies_confirmed = 0;
    std::vector<VerifyIssue> issues;

    bool ok() const {
        for (const VerifyIssue& i : issues)
            if (i.fatal) return false;
        return true;
    }
};

// Replays every expectation against the engine. A family passes when the
// computed allowed set equals the published enumeration adjusted by its
// flagged discrepancies, each of which must itself still be real.
VerifyReport verify_expectations(const ExpectationsFile& file);

} // namespace ccm
