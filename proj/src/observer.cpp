#include "opacity/observer.hpp"

#include <deque>
#include <unordered_map>

namespace opacity {

ObservationMap ObservationMap::with_unobservable(const Nfa& nfa, const std::vector<std::string>& hidden) {
    std::vector<bool> observable(nfa.num_symbols(), true);
    for (const auto& name : hidden) observable[nfa.symbol(name)] = false;
    return ObservationMap(std::move(observable));
}

bool ObservationMap::is_identity() const {
    for (bool b : observable_)
        if (!b) return false;
    return true;
}

std::vector<Symbol> ObservationMap::observable_symbols() const {
    std::vector<Symbol> out;
    for (Symbol a = 0; a < observable_.size(); ++a)
        if (observable_[a]) out.push_back(a);
    return out;
}

std::vector<Symbol> ObservationMap::unobservable_symbols() const {
    std::vector<Symbol> out;
    for (Symbol a = 0; a < observable_.size(); ++a)
        if (!observable_[a]) out.push_back(a);
    return out;
}

Word ObservationMap::project(const Word& w) const {
    Word out;
    for (Symbol a : w)
        if (observable(a)) out.push_back(a);
    return out;
}

void ObservationMap::validate_for(const Nfa& nfa) const {
    if (observable_.size() != nfa.num_symbols())
        throw InputError("observation map covers " + std::to_string(observable_.size()) +
                         " symbols, automaton has " + std::to_string(nfa.num_symbols()));
}

std::vector<StateSet> unobservable_closures(const Nfa& nfa, const ObservationMap& omap) {
    omap.validate_for(nfa);
    const auto hidden = omap.unobservable_symbols();
    std::vector<StateSet> closures;
    closures.reserve(nfa.num_states());
    for (State q = 0; q < nfa.num_states(); ++q) {
        StateSet seen(nfa.num_states(), {q});
        std::deque<State> queue{q};
        while (!queue.empty()) {
            State p = queue.front();
            queue.pop_front();
            for (Symbol u : hidden) {
                nfa.successors(p, u).for_each([&](State r) {
                    if (!seen.contains(r)) {
                        seen.insert(r);
                        queue.push_back(r);
                    }
                });
            }
        }
        closures.push_back(std::move(seen));
    }
    return closures;
}

Nfa eliminate_unobservable(const Nfa& nfa, const ObservationMap& omap) {
    const auto closures = unobservable_closures(nfa, omap);
    const auto visible = omap.observable_symbols();

    NfaBuilder b;
    for (const auto& name : nfa.state_names()) b.add_state(name);
    for (Symbol a : visible) b.add_symbol(nfa.symbol_name(a));

    for (State q = 0; q < nfa.num_states(); ++q) {
        for (std::size_t i = 0; i < visible.size(); ++i) {
            StateSet targets = nfa.empty_set();
            closures[q].for_each([&](State p) {
                nfa.successors(p, visible[i]).for_each([&](State r) { targets |= closures[r]; });
            });
            targets.for_each([&](State r) { b.add_transition(q, i, r); });
        }
    }

    nfa.initial().for_each([&](State q) { closures[q].for_each([&](State r) { b.set_initial(r); }); });
    nfa.accepting().for_each([&](State q) { b.set_accepting(q); });
    return b.build();
}

std::size_t ObserverGraph::find(const StateSet& estimate) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == estimate) return i;
    return npos;
}

Word ObserverGraph::path_to(std::size_t node) const {
    Word w;
    while (parent[node] != npos) {
        w.push_back(via[node]);
        node = parent[node];
    }
    return {w.rbegin(), w.rend()};
}

ObserverGraph observer(const Nfa& nfa, const ObservationMap& omap) {
    ObserverGraph g;
    g.projected = eliminate_unobservable(nfa, omap);
    const Nfa& p = g.projected;
    const std::size_t k = p.num_symbols();
    if (p.initial().empty()) return g;

    std::unordered_map<StateSet, std::size_t, StateSetHash> index;
    auto discover = [&](StateSet e, std::size_t parent, Symbol a) {
        auto [it, fresh] = index.try_emplace(e, g.nodes.size());
        if (fresh) {
            g.nodes.push_back(std::move(e));
            g.edges.resize(g.edges.size() + k, ObserverGraph::npos);
            g.parent.push_back(parent);
            g.via.push_back(a);
        }
        return it->second;
    };

    discover(p.initial(), ObserverGraph::npos, 0);
    for (std::size_t head = 0; head < g.nodes.size(); ++head) {
        for (Symbol a = 0; a < k; ++a) {
            StateSet next = step(p, g.nodes[head], a);
            if (next.empty()) continue;
            std::size_t target = discover(std::move(next), head, a);
            g.edges[head * k + a] = target;
        }
    }
    return g;
}

}  // namespace opacity
