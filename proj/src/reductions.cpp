#include "opacity/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace opacity {

CnfFormula::CnfFormula(std::size_t num_vars, std::vector<std::vector<int>> clauses)
    : num_vars_(num_vars) {
    clauses_.reserve(clauses.size());
    for (auto& c : clauses) {
        for (int lit : c) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
                throw InputError("literal " + std::to_string(lit) + " out of range 1.." +
                                 std::to_string(num_vars));
        }
        std::vector<int> unique;
        for (int lit : c)
            if (std::find(unique.begin(), unique.end(), lit) == unique.end()) unique.push_back(lit);
        clauses_.push_back(std::move(unique));
    }
}

bool CnfFormula::contains(std::size_t clause, int literal) const {
    const auto& c = clauses_.at(clause);
    return std::find(c.begin(), c.end(), literal) != c.end();
}

std::vector<std::size_t> CnfFormula::clauses_with(int literal) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < clauses_.size(); ++j)
        if (contains(j, literal)) out.push_back(j);
    return out;
}

bool CnfFormula::clause_satisfied(std::size_t clause, const std::vector<bool>& assignment) const {
    for (int lit : clauses_.at(clause)) {
        bool value = assignment.at(static_cast<std::size_t>(std::abs(lit)) - 1);
        if ((lit > 0) == value) return true;
    }
    return false;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (std::size_t j = 0; j < clauses_.size(); ++j)
        if (!clause_satisfied(j, assignment)) return false;
    return true;
}

ColorGraph::ColorGraph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : num_vertices_(num_vertices) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > num_vertices || v > num_vertices)
            throw InputError("edge endpoint out of range 1.." + std::to_string(num_vertices));
        const std::pair<std::size_t, std::size_t> e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw InputError("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
        edges_.push_back(e);
    }
}

ColorGraph ColorGraph::complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return ColorGraph(n, std::move(edges));
}

std::string sat_symbol_name(std::size_t letter, std::size_t clause) {
    return "a" + std::to_string(letter) + ".c" + std::to_string(clause);
}

std::string sat_state_name(std::size_t var, int value) {
    return "x" + std::to_string(var) + "_" + std::to_string(value);
}

CsoInstance sat_to_cso(const CnfFormula& phi) {
    const std::size_t n = phi.num_vars();
    const std::size_t m = phi.num_clauses();
    if (n == 0) throw InputError("formula needs at least one variable");
    if (m == 0) throw InputError("formula without clauses yields an empty alphabet");

    NfaBuilder b;
    const State qs = b.add_state("q_s");
    const State qns = b.add_state("q_ns");
    auto x = [&](std::size_t i, int r) { return 2 + 2 * (i - 1) + static_cast<std::size_t>(r); };
    for (std::size_t i = 1; i <= n; ++i) {
        b.add_state(sat_state_name(i, 0));
        b.add_state(sat_state_name(i, 1));
    }
    for (std::size_t i = 1; i <= n + 1; ++i)
        for (std::size_t j = 1; j <= m; ++j) b.add_symbol(sat_symbol_name(i, j));
    auto sym = [&](std::size_t i, std::size_t c) { return (i - 1) * m + c; };

    for (Symbol s = 0; s < (n + 1) * m; ++s) {
        b.add_transition(qs, s, qs);
        b.add_transition(qns, s, qns);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const int var = static_cast<int>(i);
        for (std::size_t c = 0; c < m; ++c) {
            // x_i^0
            b.add_transition(x(i, 0), sym(i, c), x(i, 1));
            for (std::size_t j = 1; j < i; ++j) {
                b.add_transition(x(i, 0), sym(j, c), x(i, 0));
                b.add_transition(x(i, 0), sym(i, c), x(j, 0));
            }
            for (std::size_t j = i + 1; j <= n + 1; ++j) b.add_transition(x(i, 0), sym(j, c), qns);
            if (phi.contains(c, -var))
                for (std::size_t j = 1; j <= n + 1; ++j) b.add_transition(x(i, 0), sym(j, c), qns);
            // x_i^1
            b.add_transition(x(i, 1), sym(i, c), qns);
            for (std::size_t j = 1; j < i; ++j) b.add_transition(x(i, 1), sym(j, c), x(i, 1));
            if (phi.contains(c, var))
                for (std::size_t j = 1; j <= n + 1; ++j) b.add_transition(x(i, 1), sym(j, c), qns);
        }
    }
    b.set_initial(qs);
    for (std::size_t i = 1; i <= n; ++i) b.set_initial(x(i, 0));
    for (State q = 0; q < b.num_states(); ++q) b.set_accepting(q);

    CsoInstance inst;
    inst.nfa = b.build();
    inst.query.secret = StateSet(inst.nfa.num_states(), {qs});
    inst.query.nonsecret = inst.nfa.all_states().subtract(inst.query.secret);
    inst.omap = ObservationMap::all_observable(inst.nfa);
    inst.family = ReductionFamily::sat;
    inst.size_param = n;
    inst.clause_count = m;
    return inst;
}

std::vector<std::size_t> zimin_indices(std::size_t n) {
    if (n < 1 || n > 30) throw InputError("Zimin order must lie in 1..30");
    const std::size_t len = (std::size_t{1} << n) - 1;
    std::vector<std::size_t> out(len);
    for (std::size_t l = 1; l <= len; ++l) out[l - 1] = static_cast<std::size_t>(std::countr_zero(l)) + 1;
    return out;
}

std::optional<Word> canonical_violating_word(const CnfFormula& phi) {
    const std::size_t n = phi.num_vars();
    const std::size_t m = phi.num_clauses();
    if (n == 0 || m == 0) throw InputError("formula must have variables and clauses");
    if (n > 30) throw InputError("too many variables for the counter word");

    auto lowest_falsified = [&](const std::vector<bool>& assignment) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < m; ++c)
            if (!phi.clause_satisfied(c, assignment)) return c;
        return std::nullopt;
    };

    Word w;
    std::vector<bool> assignment(n, false);
    const std::size_t steps = (std::size_t{1} << n) - 1;
    for (std::size_t l = 0; l < steps; ++l) {
        auto c = lowest_falsified(assignment);
        if (!c) return std::nullopt;
        // Reading l+1 flips the lowest zero bit t and clears the bits below it.
        const std::size_t t = static_cast<std::size_t>(std::countr_zero(l + 1)) + 1;
        w.push_back((t - 1) * m + *c);
        assignment[t - 1] = true;
        for (std::size_t i = 0; i + 1 < t; ++i) assignment[i] = false;
    }
    // All-ones assignment: a falsified clause has no positive literal.
    auto c = lowest_falsified(assignment);
    if (!c) return std::nullopt;
    w.push_back(n * m + *c);
    return w;
}

CsoInstance coloring_to_cso(const ColorGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 2) throw InputError("colouring reduction needs at least two vertices");
    static const char* colours[] = {"a", "b", "c"};

    NfaBuilder b;
    for (const char* c : colours) b.add_symbol(c);
    for (std::size_t i = 1; i <= n; ++i) b.add_state("q" + std::to_string(i));
    const State s = b.add_state("s");
    const State f = b.add_state("f");
    for (const char* c : colours)
        for (std::size_t d = 1; d < n; ++d) b.add_state(std::string(c) + std::to_string(d));

    auto q = [&](std::size_t i) { return b.state("q" + std::to_string(i)); };
    auto chi = [&](Symbol c, std::size_t d) { return b.state(std::string(colours[c]) + std::to_string(d)); };

    for (Symbol x = 0; x < 3; ++x) {
        for (std::size_t i = 1; i < n; ++i) b.add_transition(q(i), x, q(i + 1));
        b.add_transition(q(n), x, s);
        b.add_transition(f, x, f);
        for (Symbol c = 0; c < 3; ++c)
            for (std::size_t d = 2; d < n; ++d) b.add_transition(chi(c, d), x, chi(c, d - 1));
        b.add_transition(chi(x, 1), x, f);
    }
    for (auto [i, j] : g.edges())
        for (Symbol c = 0; c < 3; ++c) b.add_transition(q(i), c, chi(c, j - i));
    b.set_initial(q(1));
    for (State p = 0; p < b.num_states(); ++p) b.set_accepting(p);

    CsoInstance inst;
    inst.nfa = b.build();
    inst.query.secret = StateSet(inst.nfa.num_states(), {s});
    inst.query.nonsecret = inst.nfa.all_states().subtract(inst.query.secret);
    inst.omap = ObservationMap::all_observable(inst.nfa);
    inst.family = ReductionFamily::coloring;
    inst.size_param = n;
    return inst;
}

namespace {

bool only_self_loops(const Nfa& nfa, State q, bool require_every_symbol) {
    for (Symbol a = 0; a < nfa.num_symbols(); ++a) {
        const StateSet& next = nfa.successors(q, a);
        if (require_every_symbol && !next.contains(q)) return false;
        StateSet others = next;
        others.erase(q);
        if (!others.empty()) return false;
    }
    return true;
}

bool no_outgoing(const Nfa& nfa, State q) {
    for (Symbol a = 0; a < nfa.num_symbols(); ++a)
        if (!nfa.successors(q, a).empty()) return false;
    return true;
}

bool rest_is_nonsecret(const Nfa& nfa, const CsoQuery& q, State secret) {
    return q.secret == StateSet(nfa.num_states(), {secret}) &&
           q.nonsecret == nfa.all_states().subtract(q.secret);
}

bool looks_like_sat(const Nfa& nfa, const CsoQuery& q) {
    auto qs = nfa.find_state("q_s");
    if (!qs || !nfa.find_state("q_ns") || nfa.num_states() % 2 != 0) return false;
    return rest_is_nonsecret(nfa, q, *qs) && nfa.initial().contains(*qs) && only_self_loops(nfa, *qs, true);
}

bool looks_like_coloring(const Nfa& nfa, const CsoQuery& q) {
    auto s = nfa.find_state("s");
    auto f = nfa.find_state("f");
    auto q1 = nfa.find_state("q1");
    if (!s || !f || !q1 || (nfa.num_states() + 1) % 4 != 0) return false;
    return rest_is_nonsecret(nfa, q, *s) && no_outgoing(nfa, *s) && only_self_loops(nfa, *f, true) &&
           nfa.initial() == StateSet(nfa.num_states(), {*q1});
}

void require_valid(const CsoInstance& inst) {
    validate(inst.nfa, OpacityQuery{inst.query});
    inst.omap.validate_for(inst.nfa);
}

}  // namespace

ReductionFamily detect_family(const Nfa& nfa, const CsoQuery& q) {
    if (q.secret.universe() != nfa.num_states() || q.nonsecret.universe() != nfa.num_states())
        return ReductionFamily::generic;
    if (looks_like_sat(nfa, q)) return ReductionFamily::sat;
    if (looks_like_coloring(nfa, q)) return ReductionFamily::coloring;
    return ReductionFamily::generic;
}

CsoInstance make_cso_instance(Nfa nfa, CsoQuery q, ObservationMap omap) {
    CsoInstance inst;
    inst.family = detect_family(nfa, q);
    if (inst.family == ReductionFamily::sat) {
        inst.size_param = (nfa.num_states() - 2) / 2;
        inst.clause_count = nfa.num_symbols() / (inst.size_param + 1);
    } else if (inst.family == ReductionFamily::coloring) {
        inst.size_param = (nfa.num_states() + 1) / 4;
    }
    inst.nfa = std::move(nfa);
    inst.query = std::move(q);
    inst.omap = std::move(omap);
    return inst;
}

LboQuery cso_to_lbo(const CsoInstance& inst) {
    require_valid(inst);
    const Nfa& a = inst.nfa;
    if (detect_family(a, inst.query) == ReductionFamily::sat) {
        const State qs = a.state("q_s");
        StateSet rest_initial = a.initial();
        rest_initial.erase(qs);
        return {a.with_initial(inst.query.secret).with_accepting(inst.query.secret),
                a.with_initial(rest_initial).with_accepting(a.all_states().subtract(inst.query.secret))};
    }
    return {a.with_accepting(inst.query.secret), a.with_accepting(inst.query.nonsecret)};
}

IsoInstance cso_to_iso_direct(const CsoInstance& inst) {
    require_valid(inst);
    if (detect_family(inst.nfa, inst.query) != ReductionFamily::sat)
        throw InputError("direct ISO reduction expects the SAT-gadget shape");
    const State qs = inst.nfa.state("q_s");
    IsoInstance out{inst.nfa, {StateSet(inst.nfa.num_states(), {qs}), inst.nfa.initial()}, inst.omap};
    out.query.nonsecret_initial.erase(qs);
    return out;
}

IsoInstance cso_to_iso_split(const CsoInstance& inst) {
    require_valid(inst);
    if (detect_family(inst.nfa, inst.query) != ReductionFamily::coloring)
        throw InputError("split ISO reduction expects the colouring-gadget shape");
    const Nfa& a = inst.nfa;
    const std::size_t n = (a.num_states() + 1) / 4;
    const State s = a.state("s");

    NfaBuilder b(a);
    std::vector<State> copy(n + 1);
    for (std::size_t i = 1; i <= n; ++i) copy[i] = b.add_state("q" + std::to_string(i) + "'");
    for (std::size_t i = 1; i <= n; ++i) {
        const State qi = a.state("q" + std::to_string(i));
        const State next = i < n ? a.state("q" + std::to_string(i + 1)) : s;
        for (const auto& t : a.transitions()) {
            if (t.src != qi || t.dst == s) continue;
            // The chain is duplicated so that the copy never joins the original path into s.
            b.add_transition(copy[i], t.symbol, (i < n && t.dst == next) ? copy[i + 1] : t.dst);
        }
    }
    b.set_initial(copy[1]);
    for (std::size_t i = 1; i <= n; ++i)
        b.set_accepting(copy[i], a.accepting().contains(a.state("q" + std::to_string(i))));

    Nfa out = b.build();
    IsoInstance iso{out, {StateSet(out.num_states(), {out.state("q1")}), StateSet(out.num_states(), {copy[1]})},
                    ObservationMap::all_observable(out)};
    return iso;
}

IfoInstance iso_to_ifo(const IsoInstance& inst) {
    const Nfa& a = inst.nfa;
    validate(a, OpacityQuery{inst.query});

    if (auto qs = a.find_state("q_s");
        qs && a.find_state("q_ns") && inst.query.secret_initial == StateSet(a.num_states(), {*qs}) &&
        only_self_loops(a, *qs, true)) {
        Nfa out = a.with_accepting(a.all_states());
        IfoQuery q;
        q.secret_pairs = {{*qs, *qs}};
        inst.query.nonsecret_initial.for_each([&](State i) {
            for (State f = 0; f < out.num_states(); ++f) q.nonsecret_pairs.emplace_back(i, f);
        });
        return {std::move(out), std::move(q), inst.omap};
    }

    auto s = a.find_state("s");
    auto f = a.find_state("f");
    auto q1 = a.find_state("q1");
    auto q1c = a.find_state("q1'");
    if (s && f && q1 && q1c && inst.query.secret_initial == StateSet(a.num_states(), {*q1}) &&
        inst.query.nonsecret_initial == StateSet(a.num_states(), {*q1c}) && no_outgoing(a, *s)) {
        Nfa out = a.with_accepting(StateSet(a.num_states(), {*s, *f}));
        IfoQuery q;
        q.secret_pairs = {{*q1, *s}};
        q.nonsecret_pairs = {{*q1c, *f}};
        return {std::move(out), std::move(q), inst.omap};
    }
    throw InputError("IFO reduction expects an ISO instance from the SAT or colouring reductions");
}

Nfa cso_to_universality(const CsoInstance& inst) {
    require_valid(inst);
    if (inst.query.secret.count() != 1) throw InputError("universality reduction needs exactly one secret state");
    return inst.nfa.with_accepting(inst.nfa.all_states().subtract(inst.query.secret));
}

}  // namespace opacity
