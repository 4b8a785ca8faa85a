#include "ggl/cli.hpp"

#include "ggl/blowup_chain.hpp"
#include "ggl/canonical.hpp"
#include "ggl/error.hpp"
#include "ggl/herzog.hpp"
#include "ggl/idealization.hpp"
#include "ggl/report.hpp"
#include "ggl/scan.hpp"
#include "ggl/ulrich.hpp"
#include "ggl/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace ggl {

namespace {

struct Options {
    std::vector<int> gens;
    std::string format = "json";
    bool json = false;

    bool enumerate = false;
    std::vector<int> ideal;

    std::string family;
    int alpha = 0;
    int alpha_p = 0;

    int cap = default_step_cap;

    int overring_index = -1;
    bool full_closure = false;

    bool three_gen = false;
    int max_gen = 0;
    std::string gens_file;
    std::string out_path;
    std::string scan_format = "csv";
    int jobs = 1;
};

ReportDocument document(const std::string& command, const std::vector<int>& input) {
    ReportDocument doc;
    doc.command = command;
    doc.input = input;
    return doc;
}

int status_of(const RouteChecks& checks) { return all_passed(checks) ? exit_ok : exit_verification; }

int cmd_classify(const Options& o, std::ostream& out) {
    const auto h = share(NumericalSemigroup(o.gens));
    auto doc = document("classify", o.gens);
    doc.reports.push_back(classify(h));
    doc.checks = doc.reports.front().route_consistency;
    if (o.format == "table") {
        out << render_table(doc.reports.front());
    } else {
        out << serialize(doc);
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const NumericalSemigroup h(o.gens);
    auto doc = document("verify", o.gens);
    doc.checks = verify_all(h);
    doc.exit_status = status_of(doc.checks);
    if (o.json) {
        out << serialize(doc);
    } else {
        for (const auto& [name, ok] : doc.checks) out << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (doc.exit_status == exit_ok) {
            out << h.to_string() << ": all " << doc.checks.size() << " checks hold\n";
        } else {
            out << h.to_string() << ": first violation: " << first_failed(doc.checks) << '\n';
        }
    }
    return doc.exit_status;
}

int cmd_ulrich(const Options& o, std::ostream& out) {
    const auto h = share(NumericalSemigroup(o.gens));
    auto doc = document("ulrich", o.gens);
    if (o.enumerate) {
        doc.ulrich = enumerate_ulrich(h);
    } else if (!o.ideal.empty()) {
        doc.ulrich.push_back(is_ulrich(RelativeIdeal::from_generators(h, o.ideal)));
    } else {
        if (!h->is_whole_line()) doc.ulrich.push_back(is_ulrich(RelativeIdeal::maximal_ideal(h)));
        if (!h->is_symmetric()) {
            const bool trace = trace_is_ulrich(h);
            doc.ulrich.push_back(is_ulrich(trace_of_canonical(h)));
            doc.checks.emplace_back("trace_is_ulrich", trace);
        }
    }
    out << serialize(doc);
    return exit_ok;
}

int cmd_herzog(const Options& o, std::ostream& out) {
    std::vector<int> gens = o.gens;
    if (!o.family.empty()) {
        const auto triple = family_mult_le5(parse_family(o.family), o.alpha, o.alpha_p);
        gens.assign(triple.begin(), triple.end());
    }
    if (gens.size() != 3) {
        fail(ErrorKind::NotThreeGenerated, "herzog needs exactly three generators or --family");
    }
    auto doc = document("herzog", gens);
    doc.herzog = herzog_data(gens[0], gens[1], gens[2]);
    doc.herzog_ggl = ggl_by_exponents(*doc.herzog);
    doc.herzog_pairs = trace_ulrich_by_pairs(*doc.herzog);
    const NumericalSemigroup h(gens);
    doc.reports.push_back(classify(share(h)));
    doc.checks = three_generated_checks(h);
    doc.exit_status = status_of(doc.checks);
    out << serialize(doc);
    return doc.exit_status;
}

int cmd_chain(const Options& o, std::ostream& out) {
    auto doc = document("chain", o.gens);
    doc.chain = blowup_chain(NumericalSemigroup(o.gens), o.cap);
    for (const auto& rec : doc.chain) {
        if (rec.step_theorem) doc.checks.emplace_back("step_" + std::to_string(rec.step), *rec.step_theorem);
    }
    doc.exit_status = status_of(doc.checks);
    out << serialize(doc);
    return doc.exit_status;
}

int cmd_idealize(const Options& o, std::ostream& out) {
    const auto h = share(NumericalSemigroup(o.gens));
    auto doc = document("idealize", o.gens);
    if (o.full_closure) {
        doc.idealization = idealization_of_conductor(h);
    } else {
        const auto rings = overrings(*h);
        if (o.overring_index < 0 || o.overring_index >= static_cast<int>(rings.size())) {
            fail(ErrorKind::ParameterOutOfRange, "overring index must lie in [0, " +
                                                     std::to_string(rings.size()) + ")");
        }
        doc.idealization = idealization_is_ggl(h, rings[static_cast<std::size_t>(o.overring_index)]);
    }
    doc.checks.emplace_back("routes_agree", doc.idealization->route1 == doc.idealization->route2);
    out << serialize(doc);
    return exit_ok;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::vector<int>> inputs;
    if (o.three_gen) {
        if (o.max_gen < 3) fail(ErrorKind::ParameterOutOfRange, "--max must be at least 3");
        inputs = three_generated_family(o.max_gen);
    } else {
        std::ifstream file(o.gens_file);
        if (!file) fail(ErrorKind::PreconditionFailed, "cannot read '" + o.gens_file + "'");
        inputs = read_gens_file(file);
        for (const auto& gens : inputs) NumericalSemigroup check(gens);
    }
    const auto rows = run_scan(std::move(inputs), o.jobs);

    std::ostringstream text;
    if (!rows.empty() && o.scan_format == "csv") text << csv_header << '\n';
    int failures = 0;
    for (const auto& row : rows) {
        text << (o.scan_format == "csv" ? to_csv(row) : to_jsonl(row)) << '\n';
        if (!row.route_consistent) {
            ++failures;
            err << "inconsistent: " << to_csv(row) << " (" << row.failure << ")\n";
        }
    }
    if (o.out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) fail(ErrorKind::PreconditionFailed, "cannot write '" + o.out_path + "'");
        file << text.str();
    }
    err << rows.size() << " rows, " << failures << " inconsistent\n";
    return failures == 0 ? exit_ok : exit_verification;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Classify numerical semigroup rings: Gorenstein, AGL, GGL, 2-AGL, NGL", "ggl"};
    app.require_subcommand(1);

    auto gens_option = [&](CLI::App* sub) {
        sub->add_option("gens", o.gens, "semigroup generators")->required()->check(CLI::PositiveNumber);
    };

    auto* classify_cmd = app.add_subcommand("classify", "full classification report");
    gens_option(classify_cmd);
    classify_cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto* verify_cmd = app.add_subcommand("verify", "run every cross-check; exit 1 on the first violation");
    gens_option(verify_cmd);
    verify_cmd->add_flag("--json", o.json, "emit a JSON document");

    auto* ulrich_cmd = app.add_subcommand("ulrich", "test or enumerate monomial Ulrich ideals");
    gens_option(ulrich_cmd);
    auto* enumerate_flag = ulrich_cmd->add_flag("--enumerate", o.enumerate, "list every monomial Ulrich ideal");
    ulrich_cmd->add_option("--ideal", o.ideal, "comma-separated generators of the ideal to test")
        ->delimiter(',')
        ->excludes(enumerate_flag);

    auto* herzog_cmd = app.add_subcommand("herzog", "exponent data of a 3-generated semigroup");
    herzog_cmd->add_option("gens", o.gens, "three generators")->check(CLI::PositiveNumber);
    auto* family_opt = herzog_cmd->add_option("--family", o.family, "mult4, mult5_i or mult5_ii")
                           ->check(CLI::IsMember({"mult4", "mult5_i", "mult5_ii"}));
    herzog_cmd->add_option("--alpha", o.alpha, "family parameter α")->needs(family_opt);
    herzog_cmd->add_option("--alpha-prime", o.alpha_p, "family parameter α'")->needs(family_opt);

    auto* chain_cmd = app.add_subcommand("chain", "iterate B = m:m until Gorenstein");
    gens_option(chain_cmd);
    chain_cmd->add_option("--cap", o.cap, "maximum number of blow-ups")->check(CLI::PositiveNumber);

    auto* idealize_cmd = app.add_subcommand("idealize", "GGL test for R⋉(R:T)");
    gens_option(idealize_cmd);
    auto* index_opt = idealize_cmd->add_option("--overring-index", o.overring_index,
                                               "position of T in the overring listing");
    auto* closure_flag = idealize_cmd->add_flag("--full-closure", o.full_closure, "use T = S");
    index_opt->excludes(closure_flag);

    auto* scan_cmd = app.add_subcommand("scan", "classify a family and write one row per semigroup");
    auto* three_flag = scan_cmd->add_flag("--three-gen", o.three_gen, "all 3-generated semigroups");
    auto* max_opt = scan_cmd->add_option("--max", o.max_gen, "largest generator for --three-gen");
    auto* file_opt = scan_cmd->add_option("--gens-file", o.gens_file, "file with one generator list per line");
    scan_cmd->add_option("--out", o.out_path, "output file (default stdout)");
    scan_cmd->add_option("--format", o.scan_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    scan_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    three_flag->needs(max_opt);
    three_flag->excludes(file_opt);
    max_opt->needs(three_flag);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    if (idealize_cmd->parsed() && !o.full_closure && o.overring_index < 0) {
        err << "error: idealize needs --overring-index K or --full-closure\n";
        return exit_input;
    }
    if (scan_cmd->parsed() && !o.three_gen && o.gens_file.empty()) {
        err << "error: scan needs --three-gen --max N or --gens-file PATH\n";
        return exit_input;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (ulrich_cmd->parsed()) return cmd_ulrich(o, out);
        if (herzog_cmd->parsed()) return cmd_herzog(o, out);
        if (chain_cmd->parsed()) return cmd_chain(o, out);
        if (idealize_cmd->parsed()) return cmd_idealize(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.is_input_error()) return exit_input;
        if (verify_cmd->parsed() && e.kind() == ErrorKind::ConsistencyFailure) return exit_verification;
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}

} // namespace ggl
