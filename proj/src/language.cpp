#include "opacity/language.hpp"

#include <functional>

#include "opacity/detail/search.hpp"

namespace opacity {

namespace {

Verdict to_verdict(const detail::SearchOutcome& out, const Nfa& alphabet_owner, const Stopwatch& clock) {
    Verdict v;
    v.holds = !out.witness.has_value();
    if (out.witness) v.witness = alphabet_owner.names(*out.witness);
    v.stats.explored_nodes = out.explored;
    v.stats.elapsed = clock.elapsed();
    return v;
}

}  // namespace

std::vector<std::string> merged_alphabet(const Nfa& a, const Nfa& b) {
    std::vector<std::string> names = a.symbol_names();
    for (const auto& n : b.symbol_names())
        if (!a.find_symbol(n)) names.push_back(n);
    return names;
}

Nfa extend_alphabet(const Nfa& nfa, const std::vector<std::string>& alphabet) {
    if (alphabet == nfa.symbol_names()) return nfa;
    NfaBuilder b;
    for (const auto& q : nfa.state_names()) b.add_state(q);
    for (const auto& a : alphabet) b.add_symbol(a);
    for (const auto& t : nfa.transitions()) {
        if (!b.has_symbol(nfa.symbol_name(t.symbol)))
            throw InputError("alphabet extension drops symbol '" + nfa.symbol_name(t.symbol) + "'");
        b.add_transition(t.src, b.symbol(nfa.symbol_name(t.symbol)), t.dst);
    }
    nfa.initial().for_each([&](State q) { b.set_initial(q); });
    nfa.accepting().for_each([&](State q) { b.set_accepting(q); });
    return b.build();
}

Verdict is_empty(const Nfa& nfa) {
    Stopwatch clock;
    detail::BreadthFirstSearch<State, std::hash<State>> bfs;
    auto out = bfs.run(
        nfa.initial().members(),
        [&](State q, auto&& emit) {
            for (Symbol a = 0; a < nfa.num_symbols(); ++a)
                nfa.successors(q, a).for_each([&](State r) { emit(a, r); });
        },
        [&](State q) { return nfa.accepting().contains(q); });
    return to_verdict(out, nfa, clock);
}

Verdict is_universal(const Nfa& nfa) {
    Stopwatch clock;
    const StateSet safe = detail::persistent_core(nfa, nfa.accepting());
    detail::BreadthFirstSearch<StateSet, StateSetHash> bfs;
    auto out = bfs.run(
        {nfa.initial()},
        [&](const StateSet& e, auto&& emit) {
            if (e.intersects(safe)) return;
            for (Symbol a = 0; a < nfa.num_symbols(); ++a) emit(a, step(nfa, e, a));
        },
        [&](const StateSet& e) { return !e.intersects(nfa.accepting()); });
    return to_verdict(out, nfa, clock);
}

Verdict is_included(const Nfa& a, const Nfa& b) {
    Stopwatch clock;
    const auto alphabet = merged_alphabet(a, b);
    const Nfa left = extend_alphabet(a, alphabet);
    const Nfa right = extend_alphabet(b, alphabet);
    auto out = detail::language_difference(left, left.initial(), left.accepting(), right,
                                           right.initial(), right.accepting());
    return to_verdict(out, left, clock);
}

Verdict is_equivalent(const Nfa& a, const Nfa& b) {
    Stopwatch clock;
    Verdict forward = is_included(a, b);
    Verdict backward = is_included(b, a);
    const std::size_t explored = forward.stats.explored_nodes + backward.stats.explored_nodes;

    // Both directions may fail; report the shorter, then lexicographically smaller, witness
    // with symbols ordered as in merged_alphabet(a, b).
    Verdict out = forward.holds ? backward : forward;
    if (!forward.holds && !backward.holds) {
        const Nfa sigma = extend_alphabet(a, merged_alphabet(a, b));
        const Word f = sigma.word(*forward.witness), r = sigma.word(*backward.witness);
        if (r.size() < f.size() || (r.size() == f.size() && r < f)) out = backward;
    }
    out.stats.explored_nodes = explored;
    out.stats.elapsed = clock.elapsed();
    return out;
}

}  // namespace opacity
