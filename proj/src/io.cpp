#include "opacity/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace opacity {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

const std::vector<std::string>& directive_names() {
    static const std::vector<std::string> names = {
        "states",         "alphabet",         "unobservable",      "initial",      "accepting",       "secret-states",
        "nonsecret-states", "secret-initial", "nonsecret-initial", "secret-pairs", "nonsecret-pairs", "trans"};
    return names;
}

struct Section {
    std::size_t line = 0;
    std::vector<std::string> values;
};

struct TransLine {
    std::size_t line;
    std::string src, symbol, dst;
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        out += ' ';
        out += s;
    }
    return out;
}

}  // namespace

NfaDocument parse_nfa(std::string_view text) {
    std::map<std::string, Section> sections;
    std::vector<TransLine> trans;
    bool in_trans = false;

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        std::string_view line = lines[i];
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        // Directives may be written "key: values" or "key:values".
        const auto colon = toks[0].find(':');
        const bool is_directive = colon != std::string::npos &&
                                  (colon + 1 == toks[0].size() || !in_trans) &&
                                  std::find(directive_names().begin(), directive_names().end(),
                                            toks[0].substr(0, colon)) != directive_names().end();
        if (is_directive) {
            std::string key = toks[0].substr(0, colon);
            std::string rest = toks[0].substr(colon + 1);
            if (sections.count(key)) fail_at(lineno, "duplicate section '" + key + ":'");
            Section sec{lineno, {}};
            if (!rest.empty()) sec.values.push_back(rest);
            sec.values.insert(sec.values.end(), toks.begin() + 1, toks.end());
            if (key == "trans") {
                if (!sec.values.empty()) fail_at(lineno, "'trans:' takes no values on its own line");
                in_trans = true;
            } else {
                in_trans = false;
            }
            sections.emplace(key, std::move(sec));
            continue;
        }
        if (in_trans) {
            if (toks.size() != 3) fail_at(lineno, "malformed transition, expected 'src symbol dst'");
            trans.push_back({lineno, toks[0], toks[1], toks[2]});
            continue;
        }
        if (toks[0].back() == ':' || colon != std::string::npos)
            fail_at(lineno, "unknown directive '" + toks[0] + "'");
        fail_at(lineno, "unexpected content outside a section");
    }

    for (const char* required : {"states", "alphabet"})
        if (!sections.count(required)) throw InputError(std::string("missing '") + required + ":' section");

    NfaBuilder b;
    for (const auto& name : sections["states"].values) {
        if (b.has_state(name)) fail_at(sections["states"].line, "state '" + name + "' declared twice");
        b.add_state(name);
    }
    for (const auto& name : sections["alphabet"].values) {
        if (b.has_symbol(name)) fail_at(sections["alphabet"].line, "symbol '" + name + "' declared twice");
        b.add_symbol(name);
    }
    for (const auto& t : trans) {
        if (!b.has_state(t.src)) fail_at(t.line, "undeclared state '" + t.src + "'");
        if (!b.has_symbol(t.symbol)) fail_at(t.line, "undeclared symbol '" + t.symbol + "'");
        if (!b.has_state(t.dst)) fail_at(t.line, "undeclared state '" + t.dst + "'");
        b.add_transition(t.src, t.symbol, t.dst);
    }

    auto state_list = [&](const char* key) -> std::optional<std::vector<std::string>> {
        auto it = sections.find(key);
        if (it == sections.end()) return std::nullopt;
        for (const auto& name : it->second.values)
            if (!b.has_state(name)) fail_at(it->second.line, "undeclared state '" + name + "'");
        return it->second.values;
    };
    auto pair_list = [&](const char* key) -> std::optional<NfaAnnotations::NamePairs> {
        auto it = sections.find(key);
        if (it == sections.end()) return std::nullopt;
        NfaAnnotations::NamePairs pairs;
        for (const auto& tok : it->second.values) {
            auto colon = tok.find(':');
            if (colon == std::string::npos || tok.find(':', colon + 1) != std::string::npos)
                fail_at(it->second.line, "malformed pair '" + tok + "', expected 'initial:final'");
            std::string q = tok.substr(0, colon), f = tok.substr(colon + 1);
            for (const auto& s : {q, f})
                if (!b.has_state(s)) fail_at(it->second.line, "undeclared state '" + s + "'");
            pairs.emplace_back(q, f);
        }
        return pairs;
    };

    if (auto init = state_list("initial"))
        for (const auto& n : *init) b.set_initial(b.state(n));
    if (auto acc = state_list("accepting"))
        for (const auto& n : *acc) b.set_accepting(b.state(n));

    NfaDocument doc;
    doc.nfa = b.build();
    if (auto it = sections.find("unobservable"); it != sections.end()) {
        for (const auto& name : it->second.values)
            if (!b.has_symbol(name)) fail_at(it->second.line, "undeclared symbol '" + name + "'");
        doc.notes.unobservable = it->second.values;
    }
    doc.notes.secret_states = state_list("secret-states");
    doc.notes.nonsecret_states = state_list("nonsecret-states");
    doc.notes.secret_initial = state_list("secret-initial");
    doc.notes.nonsecret_initial = state_list("nonsecret-initial");
    doc.notes.secret_pairs = pair_list("secret-pairs");
    doc.notes.nonsecret_pairs = pair_list("nonsecret-pairs");

    auto overlap = [&](const auto& a, const auto& b2, const char* key) {
        if (!a || !b2) return;
        for (const auto& x : *a)
            if (std::find(b2->begin(), b2->end(), x) != b2->end())
                fail_at(sections[key].line, std::string("secret and non-secret sets overlap in '") + key + ":'");
    };
    overlap(doc.notes.secret_states, doc.notes.nonsecret_states, "nonsecret-states");
    overlap(doc.notes.secret_initial, doc.notes.nonsecret_initial, "nonsecret-initial");
    overlap(doc.notes.secret_pairs, doc.notes.nonsecret_pairs, "nonsecret-pairs");
    return doc;
}

std::string serialize_nfa(const NfaDocument& doc) {
    const Nfa& a = doc.nfa;
    std::ostringstream out;
    out << "states:" << join(a.state_names()) << '\n';
    out << "alphabet:" << join(a.symbol_names()) << '\n';
    const auto& n = doc.notes;
    if (n.unobservable) out << "unobservable:" << join(*n.unobservable) << '\n';
    out << "initial:" << join(a.names(a.initial())) << '\n';
    out << "accepting:" << join(a.names(a.accepting())) << '\n';
    auto names = [&](const char* key, const std::optional<std::vector<std::string>>& v) {
        if (v) out << key << ':' << join(*v) << '\n';
    };
    auto pairs = [&](const char* key, const std::optional<NfaAnnotations::NamePairs>& v) {
        if (!v) return;
        out << key << ':';
        for (const auto& [q, f] : *v) out << ' ' << q << ':' << f;
        out << '\n';
    };
    names("secret-states", n.secret_states);
    names("nonsecret-states", n.nonsecret_states);
    names("secret-initial", n.secret_initial);
    names("nonsecret-initial", n.nonsecret_initial);
    pairs("secret-pairs", n.secret_pairs);
    pairs("nonsecret-pairs", n.nonsecret_pairs);
    out << "trans:\n";
    for (const auto& t : a.transitions())
        out << a.state_name(t.src) << ' ' << a.symbol_name(t.symbol) << ' ' << a.state_name(t.dst) << '\n';
    return out.str();
}

ObservationMap NfaDocument::omap() const {
    return notes.unobservable ? ObservationMap::with_unobservable(nfa, *notes.unobservable)
                              : ObservationMap::all_observable(nfa);
}

CsoQuery NfaDocument::cso() const {
    if (!notes.secret_states) throw InputError("document has no 'secret-states:' section");
    CsoQuery q{nfa.make_set(*notes.secret_states), {}};
    q.nonsecret = notes.nonsecret_states ? nfa.make_set(*notes.nonsecret_states)
                                         : nfa.all_states().subtract(q.secret);
    return q;
}

IsoQuery NfaDocument::iso() const {
    if (!notes.secret_initial) throw InputError("document has no 'secret-initial:' section");
    IsoQuery q{nfa.make_set(*notes.secret_initial), {}};
    if (notes.nonsecret_initial) {
        q.nonsecret_initial = nfa.make_set(*notes.nonsecret_initial);
    } else {
        q.nonsecret_initial = nfa.initial();
        q.nonsecret_initial.subtract(q.secret_initial);
    }
    return q;
}

IfoQuery NfaDocument::ifo() const {
    if (!notes.secret_pairs) throw InputError("document has no 'secret-pairs:' section");
    IfoQuery q;
    for (const auto& [i, f] : *notes.secret_pairs) q.secret_pairs.emplace_back(nfa.state(i), nfa.state(f));
    if (notes.nonsecret_pairs) {
        for (const auto& [i, f] : *notes.nonsecret_pairs) q.nonsecret_pairs.emplace_back(nfa.state(i), nfa.state(f));
    } else {
        std::set<StatePair> secret(q.secret_pairs.begin(), q.secret_pairs.end());
        nfa.initial().for_each([&](State i) {
            nfa.accepting().for_each([&](State f) {
                if (!secret.count({i, f})) q.nonsecret_pairs.emplace_back(i, f);
            });
        });
    }
    return q;
}

KsoQuery NfaDocument::kso(std::size_t k) const {
    auto c = cso();
    return {c.secret, c.nonsecret, k};
}

InsoQuery NfaDocument::inso() const {
    auto c = cso();
    return {c.secret, c.nonsecret};
}

LboQuery NfaDocument::lbo() const {
    auto c = cso();
    StateSet si = notes.secret_initial ? nfa.make_set(*notes.secret_initial) : nfa.initial();
    StateSet nsi = notes.nonsecret_initial ? nfa.make_set(*notes.nonsecret_initial) : nfa.initial();
    return {nfa.with_initial(si).with_accepting(c.secret), nfa.with_initial(nsi).with_accepting(c.nonsecret)};
}

namespace {

std::optional<std::vector<std::string>> hidden_names(const Nfa& nfa, const ObservationMap& omap) {
    omap.validate_for(nfa);
    if (omap.is_identity()) return std::nullopt;
    std::vector<std::string> out;
    for (Symbol a : omap.unobservable_symbols()) out.push_back(nfa.symbol_name(a));
    return out;
}

}  // namespace

NfaDocument document_for(const Nfa& nfa, const ObservationMap& omap) {
    NfaDocument doc{nfa, {}};
    doc.notes.unobservable = hidden_names(nfa, omap);
    return doc;
}

NfaDocument document_for(const CsoInstance& inst) {
    NfaDocument doc = document_for(inst.nfa, inst.omap);
    doc.notes.secret_states = inst.nfa.names(inst.query.secret);
    doc.notes.nonsecret_states = inst.nfa.names(inst.query.nonsecret);
    return doc;
}

NfaDocument document_for(const IsoInstance& inst) {
    NfaDocument doc = document_for(inst.nfa, inst.omap);
    doc.notes.secret_initial = inst.nfa.names(inst.query.secret_initial);
    doc.notes.nonsecret_initial = inst.nfa.names(inst.query.nonsecret_initial);
    return doc;
}

NfaDocument document_for(const IfoInstance& inst) {
    NfaDocument doc = document_for(inst.nfa, inst.omap);
    auto names = [&](const std::vector<StatePair>& pairs) {
        NfaAnnotations::NamePairs out;
        for (auto [i, f] : pairs) out.emplace_back(inst.nfa.state_name(i), inst.nfa.state_name(f));
        return out;
    };
    doc.notes.secret_pairs = names(inst.query.secret_pairs);
    doc.notes.nonsecret_pairs = names(inst.query.nonsecret_pairs);
    return doc;
}

NfaDocument document_for(const LboQuery& q, const ObservationMap& omap) {
    const Nfa& s = q.secret_lang;
    const Nfa& ns = q.nonsecret_lang;
    if (s.state_names() != ns.state_names() || s.symbol_names() != ns.symbol_names() ||
        s.transitions() != ns.transitions())
        throw InputError("LBO languages must come from one automaton to share a document");
    if (s.accepting().intersects(ns.accepting()))
        throw InputError("LBO document needs disjoint secret and non-secret accepting states");

    NfaBuilder b(s);
    ns.initial().for_each([&](State x) { b.set_initial(x); });
    ns.accepting().for_each([&](State x) { b.set_accepting(x); });
    NfaDocument doc = document_for(b.build(), omap);
    doc.notes.secret_states = s.names(s.accepting());
    doc.notes.nonsecret_states = ns.names(ns.accepting());
    if (s.initial() != ns.initial()) {
        if (s.initial().intersects(ns.initial()))
            throw InputError("LBO document needs equal or disjoint initial states");
        doc.notes.secret_initial = s.names(s.initial());
        doc.notes.nonsecret_initial = ns.names(ns.initial());
    }
    return doc;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::optional<std::pair<long, long>> header;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto toks = tokenize(lines[i]);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c' || toks[0] == "%") continue;
        if (toks[0] == "p") {
            if (header) fail_at(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "cnf") fail_at(lineno, "expected 'p cnf <vars> <clauses>'");
            try {
                header = {std::stol(toks[2]), std::stol(toks[3])};
            } catch (const std::exception&) {
                fail_at(lineno, "non-numeric problem line");
            }
            if (header->first < 0 || header->second < 0) fail_at(lineno, "negative counts in problem line");
            continue;
        }
        if (!header) fail_at(lineno, "clause before the problem line");
        for (const auto& tok : toks) {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                fail_at(lineno, "malformed literal '" + tok + "'");
            }
            if (lit == 0) {
                clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::labs(lit) > header->first) fail_at(lineno, "literal " + tok + " out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw InputError("missing 'p cnf' problem line");
    if (!current.empty()) throw InputError("last clause is not terminated by 0");
    if (static_cast<long>(clauses.size()) != header->second)
        throw InputError("problem line announces " + std::to_string(header->second) + " clauses, found " +
                         std::to_string(clauses.size()));
    return CnfFormula(static_cast<std::size_t>(header->first), std::move(clauses));
}

std::string serialize_dimacs_cnf(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars() << ' ' << phi.num_clauses() << '\n';
    for (const auto& c : phi.clauses()) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

ColorGraph parse_graph(std::string_view text) {
    std::optional<std::pair<long, long>> header;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto toks = tokenize(lines[i]);
        if (toks.empty() || toks[0] == "c") continue;
        try {
            if (toks[0] == "p") {
                if (header) fail_at(lineno, "duplicate problem line");
                if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                    fail_at(lineno, "expected 'p edge <vertices> <edges>'");
                header = {std::stol(toks[2]), std::stol(toks[3])};
                if (header->first < 0 || header->second < 0) fail_at(lineno, "negative counts in problem line");
            } else if (toks[0] == "e") {
                if (!header) fail_at(lineno, "edge before the problem line");
                if (toks.size() != 3) fail_at(lineno, "expected 'e <i> <j>'");
                long u = std::stol(toks[1]), v = std::stol(toks[2]);
                if (u == v) fail_at(lineno, "self-loop on vertex " + toks[1]);
                if (u < 1 || v < 1 || u > header->first || v > header->first)
                    fail_at(lineno, "vertex out of range");
                const std::pair<std::size_t, std::size_t> e{std::min(u, v), std::max(u, v)};
                if (!seen.insert(e).second) fail_at(lineno, "duplicate edge " + toks[1] + " " + toks[2]);
                edges.push_back(e);
            } else {
                fail_at(lineno, "unknown line type '" + toks[0] + "'");
            }
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            fail_at(lineno, "non-numeric field");
        }
    }
    if (!header) throw InputError("missing 'p edge' problem line");
    if (static_cast<long>(edges.size()) != header->second)
        throw InputError("problem line announces " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()));
    return ColorGraph(static_cast<std::size_t>(header->first), std::move(edges));
}

std::string serialize_graph(const ColorGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

}  // namespace opacity
