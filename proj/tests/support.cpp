#include "support.hpp"

#include <algorithm>

namespace testing_support {

CnfFormula example_phi() { return CnfFormula(3, {{2}, {1, 2}, {-1, 3}, {-2, -3}, {3}}); }

CnfFormula example_phi_prime() { return CnfFormula(3, {{2}, {1, 2}, {-1, 3}, {-2, -3}}); }

std::vector<std::string> example_word() {
    return {"a1.c1", "a2.c2", "a1.c5", "a3.c3", "a1.c1", "a2.c1", "a1.c4", "a4.c4"};
}

Nfa random_nfa(std::mt19937& rng, std::size_t states, std::size_t symbols, double density) {
    std::bernoulli_distribution edge(density), mark(0.4);
    NfaBuilder b;
    for (std::size_t q = 0; q < states; ++q) b.add_state("s" + std::to_string(q));
    for (std::size_t a = 0; a < symbols; ++a) b.add_symbol(std::string(1, static_cast<char>('a' + a)));
    for (State q = 0; q < states; ++q)
        for (Symbol a = 0; a < symbols; ++a)
            for (State p = 0; p < states; ++p)
                if (edge(rng)) b.add_transition(q, a, p);
    bool any_initial = false;
    for (State q = 0; q < states; ++q) {
        if (mark(rng)) {
            b.set_initial(q);
            any_initial = true;
        }
        if (mark(rng)) b.set_accepting(q);
    }
    if (!any_initial) b.set_initial(std::uniform_int_distribution<State>(0, states - 1)(rng));
    return b.build();
}

CnfFormula random_kcnf(std::mt19937& rng, std::size_t k, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<int> var(1, static_cast<int>(n));
    std::bernoulli_distribution neg(0.5);
    std::vector<std::vector<int>> clauses;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> c;
        for (std::size_t l = 0; l < k; ++l) c.push_back(neg(rng) ? -var(rng) : var(rng));
        clauses.push_back(c);
    }
    return CnfFormula(n, clauses);
}

ColorGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (edge(rng)) edges.emplace_back(i, j);
    return ColorGraph(n, edges);
}

std::pair<StateSet, StateSet> random_split(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> side(0, 2);
    StateSet s(n), ns(n);
    for (State q = 0; q < n; ++q) {
        int v = side(rng);
        if (v == 0) s.insert(q);
        if (v == 1) ns.insert(q);
    }
    return {s, ns};
}

Nfa counter_fragment(const Nfa& sat_nfa) {
    NfaBuilder b;
    for (const auto& name : sat_nfa.state_names())
        if (name[0] == 'x') b.add_state(name);
    for (const auto& name : sat_nfa.symbol_names()) b.add_symbol(name);
    for (const auto& t : sat_nfa.transitions()) {
        const auto& src = sat_nfa.state_name(t.src);
        const auto& dst = sat_nfa.state_name(t.dst);
        if (b.has_state(src) && b.has_state(dst)) b.add_transition(src, sat_nfa.symbol_name(t.symbol), dst);
    }
    sat_nfa.initial().for_each([&](State q) {
        if (b.has_state(sat_nfa.state_name(q))) b.set_initial(b.state(sat_nfa.state_name(q)));
    });
    return b.build();
}

bool same_structure(const Nfa& a, const Nfa& b) {
    return a.state_names() == b.state_names() && a.symbol_names() == b.symbol_names() &&
           a.transitions() == b.transitions() && a.initial() == b.initial() && a.accepting() == b.accepting();
}

void for_each_word(std::size_t k, std::size_t max_len, const std::function<void(const Word&)>& f) {
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (k == 0 && len > 0) return;
        Word w(len, 0);
        while (true) {
            f(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
}

}  // namespace testing_support
