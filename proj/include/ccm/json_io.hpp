#pragma once

#include <json.hpp>

#include "ccm/enumeration.hpp"
#include "ccm/multiplet.hpp"

namespace ccm {

using json = nlohmann::json;

json codon_table_json();        // 64 rows, table reading order
json dinucleotide_table_json(); // 16 rows, table reading order

// Parses the output of codon_table_json back into rows and checks it against
// the embedded reference; used by the round-trip guarantees.
bool codon_table_roundtrips(const json& j);

json pairs_json(const std::vector<CodonPair>& pairs);
json family_report_json(const Family& family);
json partition_json(const MultipletPartition& p);
json derivation_json(const Derivation& d);
json diff_json(const DiffReport& r, const MultipletPartition& p, const GeneticCodeTable& t);
json counts_json();

} // namespace ccm
