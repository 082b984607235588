#include "opacity/detail/search.hpp"

#include <deque>

namespace opacity::detail {

StateSet persistent_core(const Nfa& nfa, const StateSet& allowed) {
    StateSet core = allowed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q : core.members()) {
            for (Symbol a = 0; a < nfa.num_symbols(); ++a) {
                if (!nfa.successors(q, a).intersects(core)) {
                    core.erase(q);
                    changed = true;
                    break;
                }
            }
        }
    }
    return core;
}

StateSet coreachable(const Nfa& nfa, const StateSet& target) {
    std::vector<std::vector<State>> predecessors(nfa.num_states());
    for (const auto& t : nfa.transitions()) predecessors[t.dst].push_back(t.src);
    StateSet seen = target;
    std::deque<State> queue;
    target.for_each([&](State q) { queue.push_back(q); });
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : predecessors[q]) {
            if (!seen.contains(p)) {
                seen.insert(p);
                queue.push_back(p);
            }
        }
    }
    return seen;
}

SearchOutcome language_difference(const Nfa& left, const StateSet& left_root,
                                  const StateSet& left_accepting, const Nfa& right,
                                  const StateSet& right_root, const StateSet& right_accepting) {
    if (left.symbol_names() != right.symbol_names())
        throw InputError("language comparison requires a shared alphabet");

    using Pair = std::pair<StateSet, StateSet>;
    const StateSet live = coreachable(left, left_accepting);
    const StateSet safe = persistent_core(right, right_accepting);
    const std::size_t k = left.num_symbols();

    BreadthFirstSearch<Pair, SetPairHash> bfs;
    std::vector<Pair> roots;
    if (left_root.intersects(live)) roots.emplace_back(left_root, right_root);

    return bfs.run(
        roots,
        [&](const Pair& node, auto&& emit) {
            if (node.second.intersects(safe)) return;
            for (Symbol a = 0; a < k; ++a) {
                StateSet l = step(left, node.first, a);
                if (!l.intersects(live)) continue;
                emit(a, Pair{std::move(l), step(right, node.second, a)});
            }
        },
        [&](const Pair& node) {
            return node.first.intersects(left_accepting) && !node.second.intersects(right_accepting);
        });
}

}  // namespace opacity::detail
