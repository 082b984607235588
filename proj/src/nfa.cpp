#include "opacity/nfa.hpp"

#include <algorithm>
#include <deque>

namespace opacity {

std::optional<State> Nfa::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<Symbol> Nfa::find_symbol(std::string_view name) const {
    auto it = symbol_index_.find(std::string(name));
    if (it == symbol_index_.end()) return std::nullopt;
    return it->second;
}

State Nfa::state(std::string_view name) const {
    if (auto q = find_state(name)) return *q;
    throw InputError("unknown state '" + std::string(name) + "'");
}

Symbol Nfa::symbol(std::string_view name) const {
    if (auto a = find_symbol(name)) return *a;
    throw InputError("unknown symbol '" + std::string(name) + "'");
}

StateSet Nfa::make_set(const std::vector<std::string>& names) const {
    StateSet s = empty_set();
    for (const auto& n : names) s.insert(state(n));
    return s;
}

Word Nfa::word(const std::vector<std::string>& names) const {
    Word w;
    w.reserve(names.size());
    for (const auto& n : names) w.push_back(symbol(n));
    return w;
}

std::vector<std::string> Nfa::names(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (Symbol a : w) out.push_back(symbol_name(a));
    return out;
}

std::vector<std::string> Nfa::names(const StateSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](State q) { out.push_back(state_name(q)); });
    return out;
}

Nfa Nfa::with_initial(StateSet initial) const {
    if (initial.universe() != num_states()) throw InputError("initial set has wrong universe");
    Nfa copy = *this;
    copy.initial_ = std::move(initial);
    return copy;
}

Nfa Nfa::with_accepting(StateSet accepting) const {
    if (accepting.universe() != num_states()) throw InputError("accepting set has wrong universe");
    Nfa copy = *this;
    copy.accepting_ = std::move(accepting);
    return copy;
}

NfaBuilder::NfaBuilder(const Nfa& base)
    : state_names_(base.state_names_),
      symbol_names_(base.symbol_names_),
      state_index_(base.state_index_),
      symbol_index_(base.symbol_index_),
      transitions_(base.transitions_),
      initial_(base.num_states(), false),
      accepting_(base.num_states(), false) {
    base.initial_.for_each([&](State q) { initial_[q] = true; });
    base.accepting_.for_each([&](State q) { accepting_[q] = true; });
}

State NfaBuilder::add_state(std::string name) {
    if (auto it = state_index_.find(name); it != state_index_.end()) return it->second;
    State q = state_names_.size();
    state_index_.emplace(name, q);
    state_names_.push_back(std::move(name));
    initial_.push_back(false);
    accepting_.push_back(false);
    return q;
}

Symbol NfaBuilder::add_symbol(std::string name) {
    if (auto it = symbol_index_.find(name); it != symbol_index_.end()) return it->second;
    Symbol a = symbol_names_.size();
    symbol_index_.emplace(name, a);
    symbol_names_.push_back(std::move(name));
    return a;
}

bool NfaBuilder::has_state(std::string_view name) const {
    return state_index_.count(std::string(name)) != 0;
}

bool NfaBuilder::has_symbol(std::string_view name) const {
    return symbol_index_.count(std::string(name)) != 0;
}

State NfaBuilder::state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) throw InputError("undeclared state '" + std::string(name) + "'");
    return it->second;
}

Symbol NfaBuilder::symbol(std::string_view name) const {
    auto it = symbol_index_.find(std::string(name));
    if (it == symbol_index_.end()) throw InputError("undeclared symbol '" + std::string(name) + "'");
    return it->second;
}

void NfaBuilder::add_transition(State src, Symbol a, State dst) {
    if (src >= state_names_.size() || dst >= state_names_.size())
        throw InputError("transition references a state out of range");
    if (a >= symbol_names_.size()) throw InputError("transition references a symbol out of range");
    transitions_.push_back({src, a, dst});
}

void NfaBuilder::add_transition(std::string_view src, std::string_view a, std::string_view dst) {
    add_transition(state(src), symbol(a), state(dst));
}

void NfaBuilder::set_initial(State q, bool on) {
    if (q >= state_names_.size()) throw InputError("initial state out of range");
    initial_[q] = on;
}

void NfaBuilder::set_accepting(State q, bool on) {
    if (q >= state_names_.size()) throw InputError("accepting state out of range");
    accepting_[q] = on;
}

Nfa NfaBuilder::build() const {
    Nfa nfa;
    nfa.state_names_ = state_names_;
    nfa.symbol_names_ = symbol_names_;
    nfa.state_index_ = state_index_;
    nfa.symbol_index_ = symbol_index_;
    nfa.transitions_ = transitions_;
    std::sort(nfa.transitions_.begin(), nfa.transitions_.end());
    nfa.transitions_.erase(std::unique(nfa.transitions_.begin(), nfa.transitions_.end()),
                           nfa.transitions_.end());

    const std::size_t n = state_names_.size();
    nfa.successors_.assign(n * symbol_names_.size(), StateSet(n));
    for (const auto& t : nfa.transitions_)
        nfa.successors_[t.src * symbol_names_.size() + t.symbol].insert(t.dst);

    nfa.initial_ = StateSet(n);
    nfa.accepting_ = StateSet(n);
    for (State q = 0; q < n; ++q) {
        if (initial_[q]) nfa.initial_.insert(q);
        if (accepting_[q]) nfa.accepting_.insert(q);
    }
    return nfa;
}

StateSet step(const Nfa& nfa, const StateSet& estimate, Symbol a) {
    if (a >= nfa.num_symbols()) throw InputError("symbol index out of range");
    if (estimate.universe() != nfa.num_states()) throw InputError("estimate does not belong to the automaton");
    StateSet next = nfa.empty_set();
    estimate.for_each([&](State q) { next |= nfa.successors(q, a); });
    return next;
}

StateSet run(const Nfa& nfa, const StateSet& estimate, const Word& w) {
    StateSet current = estimate;
    for (Symbol a : w) current = step(nfa, current, a);
    return current;
}

bool accepts(const Nfa& nfa, const Word& w) {
    return run(nfa, nfa.initial(), w).intersects(nfa.accepting());
}

StateSet reachable(const Nfa& nfa, const StateSet& from) {
    if (from.universe() != nfa.num_states()) throw InputError("set does not belong to the automaton");
    StateSet seen = from;
    std::deque<State> queue;
    from.for_each([&](State q) { queue.push_back(q); });
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < nfa.num_symbols(); ++a) {
            nfa.successors(q, a).for_each([&](State r) {
                if (!seen.contains(r)) {
                    seen.insert(r);
                    queue.push_back(r);
                }
            });
        }
    }
    return seen;
}

}  // namespace opacity
