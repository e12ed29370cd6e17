#include "ccm/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccm/expectations.hpp"
#include "ccm/json_io.hpp"

namespace ccm {

namespace {

struct GlobalOpts {
    std::string scheme = "a";
    std::string format = "text";
    std::string damping = "on";
    std::string ser_trigger = "computed";
};

DeriveOptions derive_options(const GlobalOpts& g, int level_max) {
    DeriveOptions o;
    o.damping = g.damping == "on";
    o.level_max = level_max;
    o.ser_trigger = g.ser_trigger == "uca_aga" ? DeriveOptions::SerTrigger::RequireUcaAga
                                               : DeriveOptions::SerTrigger::Computed;
    return o;
}

void print_codon_tables(std::ostream& out) {
    out << "codon aa(vmc) aa(suc) J_H J_V mult J3_H J3_V\n";
    for (const Codon& c : codons_in_table_order()) {
        const CodonRow& r = reference_row(c);
        const CrystalState s = codon_state(c);
        out << c.str() << ' ' << r.vmc_aa << ' ' << r.suc_aa << ' ' << s.irrep.j_h.str() << ' '
            << s.irrep.j_v.str() << ' ' << s.irrep.mult << ' ' << s.m_h.str() << ' '
            << s.m_v.str() << '\n';
    }
}

void print_dinucleotide_tables(std::ostream& out) {
    out << "dinucl J_H J_V J3_H J3_V\n";
    for (const Dinucleotide& d : dinucleotides_in_table_order()) {
        const CrystalState s = dinucleotide_state(d);
        out << d.str() << ' ' << s.irrep.j_h.str() << ' ' << s.irrep.j_v.str() << ' '
            << s.m_h.str() << ' ' << s.m_v.str() << '\n';
    }
}

void print_partition(std::ostream& out, const MultipletPartition& p) {
    out << "level " << p.level << ":";
    for (const auto& [size, count] : p.shape()) out << ' ' << count << 'x' << size;
    out << '\n';
    for (const MultipletClass& m : p.classes) {
        out << " ";
        for (const Codon& c : m.codons) out << ' ' << c.str();
        for (const std::string& n : m.notes) out << "   [" << n << "]";
        out << '\n';
    }
}

void print_derivation(std::ostream& out, const Derivation& d) {
    for (const LevelOutcome& lo : d.levels) {
        for (const MergeEvent& e : lo.events) {
            out << "level " << lo.partition.level << (e.applied ? " merge " : " no-merge ");
            for (const Codon& c : e.class_a) out << c.str();
            out << " + ";
            for (const Codon& c : e.class_b) out << c.str();
            out << " via";
            for (const CodonPair& p : e.allowed_connections) out << ' ' << p.str();
            if (!e.note.empty()) out << " (" << e.note << ")";
            out << '\n';
        }
        print_partition(out, lo.partition);
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crystal-basis model of the genetic code: multiplet derivation and checks"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--scheme", g.scheme, "Operator scheme: a, b or b0")
        ->check(CLI::IsMember({"a", "b", "b0"}));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--damping", g.damping, "Second-position merge damping")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--ser-trigger", g.ser_trigger, "Evidence rule for the serine-sextet merge")
        ->check(CLI::IsMember({"computed", "uca_aga"}));

    auto* tables = app.add_subcommand("tables", "Print the codon or dinucleotide assignment");
    std::string which = "codons";
    tables->add_option("which", which, "codons or dinucleotides")
        ->check(CLI::IsMember({"codons", "dinucleotides"}));

    auto* derive_cmd = app.add_subcommand("derive", "Run the multiplet derivation");
    int level_max = 5;
    derive_cmd->add_option("--level", level_max, "Stop after this level")->check(CLI::Range(1, 5));

    auto* allowed_cmd = app.add_subcommand("allowed", "List allowed substitution pairs");
    auto* forbidden_cmd = app.add_subcommand("forbidden", "List forbidden substitution pairs");
    int set_level = 1;
    std::string family_id;
    for (CLI::App* cmd : {allowed_cmd, forbidden_cmd}) {
        cmd->add_option("--level", set_level, "Error level 1..5")->check(CLI::Range(1, 5));
        cmd->add_option("--family", family_id, "Restrict to one operator family");
    }

    auto* verify_cmd = app.add_subcommand("verify", "Check an expectations file against the engine");
    std::string expectations_path;
    verify_cmd->add_option("--expectations", expectations_path, "Expectations JSON")->required();

    auto* count_cmd = app.add_subcommand("count", "Pattern counting and probability");
    (void)count_cmd;

    auto* diff_cmd = app.add_subcommand("diff", "Diff the derived partition against a code table");
    std::string code = "vmc";
    int diff_level = 5;
    diff_cmd->add_option("--code", code, "vmc or suc")->check(CLI::IsMember({"vmc", "suc"}));
    diff_cmd->add_option("--level", diff_level, "Partition level")->check(CLI::Range(1, 5));

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const bool as_json = g.format == "json";
    const Scheme scheme = scheme_from_string(g.scheme);

    try {
        if (tables->parsed()) {
            if (which == "codons") {
                if (as_json)
                    out << codon_table_json().dump(2) << '\n';
                else
                    print_codon_tables(out);
            } else {
                if (as_json)
                    out << dinucleotide_table_json().dump(2) << '\n';
                else
                    print_dinucleotide_tables(out);
            }
            return 0;
        }

        if (derive_cmd->parsed()) {
            const Derivation d = derive(scheme, derive_options(g, level_max));
            if (as_json)
                out << derivation_json(d).dump(2) << '\n';
            else
                print_derivation(out, d);
            return 0;
        }

        if (allowed_cmd->parsed() || forbidden_cmd->parsed()) {
            const bool want_allowed = allowed_cmd->parsed();
            std::vector<Family> fams;
            if (!family_id.empty())
                fams.push_back(family_by_id(family_id, scheme));
            else
                fams = families(set_level, scheme);
            json j = json::array();
            for (const Family& f : fams) {
                const auto pairs = want_allowed ? allowed_pairs(f) : forbidden_pairs(f);
                if (as_json)
                    j.push_back(json{{"family", f.id}, {"pairs", pairs_json(pairs)}});
                else {
                    out << f.id << ":";
                    for (const CodonPair& p : pairs) out << ' ' << p.str();
                    out << '\n';
                }
            }
            if (as_json) out << j.dump(2) << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            const ExpectationsFile file = load_expectations(expectations_path);
            const VerifyReport report = verify_expectations(file);
            for (const VerifyIssue& i : report.issues)
                out << (i.fatal ? "FAIL " : "info ") << i.where << ": " << i.message << '\n';
            out << (report.ok() ? "OK" : "FAILED") << ": " << report.families_checked
                << " families checked, " << report.discrepancies_confirmed
                << " recorded divergences confirmed\n";
            return report.ok() ? 0 : 1;
        }

        if (count_cmd->parsed()) {
            if (as_json) {
                out << counts_json().dump(2) << '\n';
            } else {
                const StageCounts ref = reference_stage_counts();
                const Rational prob = pattern_probability(ref);
                const StageCountModel model = model_stage_counts();
                out << "quartet choices: " << count_quartet_choices() << '\n';
                out << "sextet stage counts (reference): " << ref.sextet2_choices << ", "
                    << ref.sextet3_choices << '\n';
                out << "pattern probability: 1/" << prob.den << " = " << scientific(prob, 2)
                    << '\n';
                out << "pairing model: " << model.sextet2_choices << ", " << model.sextet3_choices
                    << (model.matches_reference ? " (matches reference)"
                                                : " (differs from reference; kept on record)")
                    << '\n';
            }
            return 0;
        }

        if (diff_cmd->parsed()) {
            const Derivation d = derive(scheme, derive_options(g, diff_level));
            const MultipletPartition& p = d.partition(diff_level);
            const GeneticCodeTable& t = code == "vmc" ? vmc() : suc();
            const DiffReport r = diff_against(p, t);
            if (as_json) {
                out << diff_json(r, p, t).dump(2) << '\n';
            } else {
                out << "level " << p.level << " vs " << code_name(t.name) << ": "
                    << r.matched_classes << " classes synonymous, " << r.mixed_classes.size()
                    << " mixed, " << r.split_groups.size() << " synonym groups split\n";
                for (const auto& cls : r.mixed_classes) {
                    out << "  mixed:";
                    for (const Codon& c : cls) out << ' ' << c.str() << ':' << t.amino_acid(c);
                    out << '\n';
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace ccm
