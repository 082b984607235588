#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "opacity/nfa.hpp"

namespace opacity {

/// Partition of an automaton's alphabet into observable and unobservable symbols.
class ObservationMap {
public:
    ObservationMap() = default;
    explicit ObservationMap(std::vector<bool> observable) : observable_(std::move(observable)) {}

    static ObservationMap all_observable(const Nfa& nfa) {
        return ObservationMap(std::vector<bool>(nfa.num_symbols(), true));
    }
    static ObservationMap with_unobservable(const Nfa& nfa, const std::vector<std::string>& hidden);

    std::size_t num_symbols() const { return observable_.size(); }
    bool observable(Symbol a) const { return observable_.at(a); }
    bool is_identity() const;
    std::vector<Symbol> observable_symbols() const;
    std::vector<Symbol> unobservable_symbols() const;

    /// Erases the unobservable symbols of `w`.
    Word project(const Word& w) const;

    /// Throws InputError when the map does not cover exactly the alphabet of `nfa`.
    void validate_for(const Nfa& nfa) const;

private:
    std::vector<bool> observable_;
};

/// Per-state closure under unobservable transitions (each state included in its own closure).
std::vector<StateSet> unobservable_closures(const Nfa& nfa, const ObservationMap& omap);

/// Replaces unobservable transitions by their effect on observable ones.
///
/// The result has the same states (same names and indices) and the observable
/// symbols only, in their original relative order. Its initial states are the
/// unobservable closure of the original ones, and reading v from them reaches
/// exactly the states reachable in `nfa` by some w with P(w) = v.
Nfa eliminate_unobservable(const Nfa& nfa, const ObservationMap& omap);

/// Deterministic graph of nonempty state estimates reachable from the observed root.
struct ObserverGraph {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Nfa projected;                  // the eliminated automaton the graph was built from
    std::vector<StateSet> nodes;    // nodes[0] is the root when nonempty
    std::vector<std::size_t> edges; // edges[node * |Γ| + a], npos when the estimate empties
    std::vector<std::size_t> parent;
    std::vector<Symbol> via;

    std::size_t num_symbols() const { return projected.num_symbols(); }
    bool has_root() const { return !nodes.empty(); }
    std::size_t next(std::size_t node, Symbol a) const { return edges[node * num_symbols() + a]; }
    std::size_t find(const StateSet& estimate) const;
    /// Shortest observed word (over the projected alphabet) leading from the root to `node`.
    Word path_to(std::size_t node) const;
};

ObserverGraph observer(const Nfa& nfa, const ObservationMap& omap);

}  // namespace opacity
