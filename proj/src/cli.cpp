#include "opacity/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "opacity/bench.hpp"
#include "opacity/io.hpp"
#include "opacity/language.hpp"
#include "opacity/opacity.hpp"
#include "opacity/oracles.hpp"
#include "opacity/reductions.hpp"

namespace opacity {

namespace {

struct Options {
    std::string what;
    std::string input;
    std::string second;
    std::string output;
    std::string report;
    std::optional<std::size_t> k;
    std::size_t n = 0;
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    std::uint32_t seed = 0;
};

std::string join_words(const std::vector<std::string>& w) {
    std::string s;
    for (const auto& tok : w) {
        if (!s.empty()) s += ' ';
        s += tok;
    }
    return s;
}

void write_check_report(const std::string& path, const std::string& what, const Verdict& v) {
    nlohmann::json j;
    j["check"] = what;
    j["holds"] = v.holds;
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
    j["split"] = v.split ? nlohmann::json(*v.split) : nlohmann::json(nullptr);
    j["explored"] = v.stats.explored_nodes;
    j["millis"] = v.stats.elapsed.count();
    write_file(path, j.dump(2) + "\n");
}

// Both automata over the union of their alphabets.
std::pair<Nfa, Nfa> on_shared_alphabet(const Nfa& a, const Nfa& b) {
    auto sigma = merged_alphabet(a, b);
    return {extend_alphabet(a, sigma), extend_alphabet(b, sigma)};
}

Verdict run_check(const Options& o) {
    NfaDocument doc = parse_nfa(read_file(o.input));
    const std::string& w = o.what;
    if (w == "universal") return is_universal(doc.nfa);
    if (w == "included" || w == "equivalent" || (w == "lbo" && !o.second.empty())) {
        if (o.second.empty()) throw InputError("'" + w + "' needs a second automaton (-j)");
        NfaDocument other = parse_nfa(read_file(o.second));
        if (w == "included") return is_included(doc.nfa, other.nfa);
        if (w == "equivalent") return is_equivalent(doc.nfa, other.nfa);
        auto [s, ns] = on_shared_alphabet(doc.nfa, other.nfa);
        std::vector<std::string> hidden = doc.notes.unobservable.value_or(std::vector<std::string>{});
        for (const auto& h : other.notes.unobservable.value_or(std::vector<std::string>{}))
            if (std::find(hidden.begin(), hidden.end(), h) == hidden.end()) hidden.push_back(h);
        return check_lbo({s, ns}, ObservationMap::with_unobservable(s, hidden));
    }
    if (w == "cso") return check_cso(doc.nfa, doc.cso(), doc.omap());
    if (w == "iso") return check_iso(doc.nfa, doc.iso(), doc.omap());
    if (w == "ifo") return check_ifo(doc.nfa, doc.ifo(), doc.omap());
    if (w == "kso") {
        if (!o.k) throw InputError("'kso' needs --k");
        return check_kso(doc.nfa, doc.kso(*o.k), doc.omap());
    }
    if (w == "inso") return check_inso(doc.nfa, doc.inso(), doc.omap());
    if (w == "lbo") return check_lbo(doc.lbo(), doc.omap());
    throw InputError("unknown check '" + w + "'");
}

int cmd_check(const Options& o, std::ostream& out) {
    Verdict v = run_check(o);
    out << (v.holds ? "holds" : "fails");
    if (v.split) out << " split=" << *v.split;
    out << '\n';
    if (v.witness) out << join_words(*v.witness) << '\n';
    if (!o.report.empty()) write_check_report(o.report, o.what, v);
    return v.holds ? 0 : 1;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const std::string text = read_file(o.input);
    NfaDocument result;
    if (o.what == "sat2cso") {
        result = document_for(sat_to_cso(parse_dimacs_cnf(text)));
    } else if (o.what == "col2cso") {
        result = document_for(coloring_to_cso(parse_graph(text)));
    } else if (o.what == "iso2ifo") {
        NfaDocument doc = parse_nfa(text);
        result = document_for(iso_to_ifo({doc.nfa, doc.iso(), doc.omap()}));
    } else {
        NfaDocument doc = parse_nfa(text);
        CsoInstance inst = make_cso_instance(doc.nfa, doc.cso(), doc.omap());
        if (o.what == "cso2lbo") {
            result = document_for(cso_to_lbo(inst), inst.omap);
        } else if (o.what == "cso2iso") {
            if (inst.family == ReductionFamily::sat)
                result = document_for(cso_to_iso_direct(inst));
            else
                result = document_for(cso_to_iso_split(inst));
        } else if (o.what == "cso2univ") {
            result = document_for(cso_to_universality(inst), inst.omap);
        } else {
            throw InputError("unknown reduction '" + o.what + "'");
        }
    }
    write_file(o.output, serialize_nfa(result));
    out << "wrote " << o.output << " (" << result.nfa.num_states() << " states, " << result.nfa.num_symbols()
        << " symbols, " << result.nfa.num_transitions() << " transitions)\n";
    return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::string line;
    for (std::size_t i : zimin_indices(o.n)) {
        if (!line.empty()) line += ' ';
        line += 'a' + std::to_string(i);
    }
    out << line << '\n';
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const std::string text = read_file(o.input);
    if (o.what == "sat") {
        auto a = sat_brute(parse_dimacs_cnf(text));
        if (!a) {
            out << "unsatisfiable\n";
            return 1;
        }
        out << "satisfiable\n";
        std::string line;
        for (std::size_t i = 0; i < a->size(); ++i) {
            if (i) line += ' ';
            line += ((*a)[i] ? "" : "-") + std::to_string(i + 1);
        }
        out << line << '\n';
        return 0;
    }
    auto c = coloring_brute(parse_graph(text));
    if (!c) {
        out << "not 3-colourable\n";
        return 1;
    }
    out << "3-colourable\n" << *c << '\n';
    return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
    auto family = o.what == "sat-family" ? BenchFamily::sat : BenchFamily::coloring;
    BenchReport report = bench_family(family, o.n_min, o.n_max, o.seed);
    const std::string tsv = report.to_tsv();
    out << tsv;
    if (!o.report.empty()) write_file(o.report, tsv);
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Opacity verification for partially observed automata", "opacity"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "decide an opacity notion or a language question");
    check->add_option("notion", o.what, "cso|iso|ifo|kso|inso|lbo|universal|included|equivalent")
        ->required()
        ->check(CLI::IsMember({"cso", "iso", "ifo", "kso", "inso", "lbo", "universal", "included", "equivalent"}));
    check->add_option("-i,--input", o.input, "automaton document")->required();
    check->add_option("-j,--second", o.second, "second automaton document");
    check->add_option("--k", o.k, "step bound for kso");
    check->add_option("--report", o.report, "write a JSON report");

    auto* reduce = app.add_subcommand("reduce", "build a reduction instance");
    reduce->add_option("reduction", o.what, "sat2cso|col2cso|cso2lbo|cso2iso|iso2ifo|cso2univ")
        ->required()
        ->check(CLI::IsMember({"sat2cso", "col2cso", "cso2lbo", "cso2iso", "iso2ifo", "cso2univ"}));
    reduce->add_option("-i,--input", o.input)->required();
    reduce->add_option("-o,--output", o.output)->required();

    auto* gen = app.add_subcommand("gen", "generate index sequences");
    gen->add_option("sequence", o.what)->required()->check(CLI::IsMember({"zimin"}));
    gen->add_option("-n", o.n, "order")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force SAT and 3-colouring");
    oracle->add_option("problem", o.what)->required()->check(CLI::IsMember({"sat", "col3"}));
    oracle->add_option("-i,--input", o.input)->required();

    auto* bench = app.add_subcommand("bench", "scaling runs over a reduction family");
    bench->add_option("family", o.what)->required()->check(CLI::IsMember({"sat-family", "col-family"}));
    bench->add_option("--n-min", o.n_min)->required();
    bench->add_option("--n-max", o.n_max)->required();
    bench->add_option("--seed", o.seed);
    bench->add_option("--report", o.report, "write the TSV table here as well");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        if (gen->parsed()) return cmd_gen(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        return cmd_bench(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace opacity
