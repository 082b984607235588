#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opacity/state_set.hpp"

namespace opacity {

/// Raised for malformed inputs: bad indices, inconsistent queries, parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Word = std::vector<Symbol>;

struct Transition {
    State src;
    Symbol symbol;
    State dst;
    auto operator<=>(const Transition&) const = default;
};

class NfaBuilder;

/// Nondeterministic finite automaton over dense state and symbol indices.
///
/// Immutable once built. Names are kept for serialization and witness
/// reporting; the successor table is indexed by (state, symbol).
class Nfa {
public:
    Nfa() = default;

    std::size_t num_states() const { return state_names_.size(); }
    std::size_t num_symbols() const { return symbol_names_.size(); }
    std::size_t num_transitions() const { return transitions_.size(); }

    const std::string& state_name(State q) const { return state_names_.at(q); }
    const std::string& symbol_name(Symbol a) const { return symbol_names_.at(a); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& symbol_names() const { return symbol_names_; }

    std::optional<State> find_state(std::string_view name) const;
    std::optional<Symbol> find_symbol(std::string_view name) const;
    State state(std::string_view name) const;
    Symbol symbol(std::string_view name) const;

    const StateSet& initial() const { return initial_; }
    const StateSet& accepting() const { return accepting_; }

    const StateSet& successors(State q, Symbol a) const {
        return successors_[q * symbol_names_.size() + a];
    }
    /// Sorted, duplicate-free.
    const std::vector<Transition>& transitions() const { return transitions_; }

    StateSet empty_set() const { return StateSet(num_states()); }
    StateSet all_states() const { return StateSet::full(num_states()); }
    StateSet make_set(const std::vector<std::string>& names) const;

    Word word(const std::vector<std::string>& names) const;
    std::vector<std::string> names(const Word& w) const;
    std::vector<std::string> names(const StateSet& s) const;

    Nfa with_initial(StateSet initial) const;
    Nfa with_accepting(StateSet accepting) const;

private:
    friend class NfaBuilder;

    std::vector<std::string> state_names_;
    std::vector<std::string> symbol_names_;
    std::unordered_map<std::string, State> state_index_;
    std::unordered_map<std::string, Symbol> symbol_index_;
    std::vector<Transition> transitions_;
    std::vector<StateSet> successors_;
    StateSet initial_;
    StateSet accepting_;
};

class NfaBuilder {
public:
    NfaBuilder() = default;
    /// Starts from the states, symbols, transitions and markings of an existing automaton.
    explicit NfaBuilder(const Nfa& base);

    /// Returns the existing index when the name is already declared.
    State add_state(std::string name);
    Symbol add_symbol(std::string name);

    bool has_state(std::string_view name) const;
    bool has_symbol(std::string_view name) const;
    State state(std::string_view name) const;
    Symbol symbol(std::string_view name) const;
    std::size_t num_states() const { return state_names_.size(); }
    std::size_t num_symbols() const { return symbol_names_.size(); }

    void add_transition(State src, Symbol a, State dst);
    void add_transition(std::string_view src, std::string_view a, std::string_view dst);
    void set_initial(State q, bool on = true);
    void set_accepting(State q, bool on = true);
    void clear_initial() { initial_.assign(initial_.size(), false); }
    void clear_accepting() { accepting_.assign(accepting_.size(), false); }

    Nfa build() const;

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> symbol_names_;
    std::unordered_map<std::string, State> state_index_;
    std::unordered_map<std::string, Symbol> symbol_index_;
    std::vector<Transition> transitions_;
    std::vector<bool> initial_;
    std::vector<bool> accepting_;
};

/// Successors of every state in `estimate` under `a`.
StateSet step(const Nfa& nfa, const StateSet& estimate, Symbol a);
/// Left fold of `step` over `w`; the empty word leaves the estimate unchanged.
StateSet run(const Nfa& nfa, const StateSet& estimate, const Word& w);
bool accepts(const Nfa& nfa, const Word& w);
/// States reachable from `from` along any word, `from` included.
StateSet reachable(const Nfa& nfa, const StateSet& from);

}  // namespace opacity
