#include <doctest.h>

#include "opacity/observer.hpp"
#include "opacity/oracles.hpp"
#include "support.hpp"

using namespace opacity;
using namespace testing_support;

namespace {

Nfa chain_with_hidden_step() {
    NfaBuilder b;
    for (auto s : {"1", "2", "3"}) b.add_state(s);
    b.add_symbol("u");
    b.add_symbol("a");
    b.add_transition("1", "u", "2");
    b.add_transition("2", "a", "3");
    b.set_initial(b.state("1"));
    return b.build();
}

}  // namespace

TEST_CASE("elimination with every symbol observable keeps the automaton") {
    std::mt19937 rng(3);
    Nfa a = random_nfa(rng, 4, 2);
    CHECK(same_structure(eliminate_unobservable(a, ObservationMap::all_observable(a)), a));
}

TEST_CASE("elimination folds hidden moves into observable ones") {
    Nfa a = chain_with_hidden_step();
    Nfa e = eliminate_unobservable(a, ObservationMap::with_unobservable(a, {"u"}));
    CHECK(e.symbol_names() == std::vector<std::string>{"a"});
    CHECK(e.num_states() == 3);
    CHECK(e.names(e.initial()) == std::vector<std::string>{"1", "2"});
    CHECK(e.successors(e.state("1"), 0) == e.make_set({"3"}));
    CHECK(e.successors(e.state("2"), 0) == e.make_set({"3"}));
}

TEST_CASE("observer of the two-state example") {
    NfaBuilder b;
    b.add_state("1");
    b.add_state("2");
    b.add_symbol("a");
    b.add_transition("1", "a", "1");
    b.add_transition("1", "a", "2");
    b.set_initial(0);
    Nfa t = b.build();
    ObserverGraph g = observer(t, ObservationMap::all_observable(t));
    REQUIRE(g.nodes.size() == 2);
    CHECK(g.nodes[0] == t.make_set({"1"}));
    CHECK(g.nodes[1] == t.make_set({"1", "2"}));
    CHECK(g.next(0, 0) == 1);
    CHECK(g.next(1, 0) == 1);
    CHECK(g.path_to(1) == Word{0});
}

TEST_CASE("observer of the gadget reaches the lone secret estimate") {
    auto inst = sat_to_cso(example_phi());
    ObserverGraph g = observer(inst.nfa, inst.omap);
    CHECK(g.find(inst.query.secret) != ObserverGraph::npos);

    auto sat = sat_to_cso(example_phi_prime());
    ObserverGraph h = observer(sat.nfa, sat.omap);
    for (const auto& e : h.nodes) CHECK(e.intersects(sat.query.nonsecret));
}

TEST_CASE("observer estimates match the definition") {
    std::mt19937 rng(5);
    for (int round = 0; round < 60; ++round) {
        Nfa a = random_nfa(rng, 5, 3, 0.25);
        ObservationMap omap = ObservationMap::with_unobservable(a, {"c"});
        ObserverGraph g = observer(a, omap);
        CHECK(g.nodes.size() <= (1U << 5) - 1);
        for (const auto& e : g.nodes) CHECK_FALSE(e.empty());

        for_each_word(3, 4, [&](const Word& w) {
            Word seen = omap.project(w);
            StateSet expected = observed_estimate(a, omap, a.initial(), seen);
            // Observed words use the projected alphabet, where a and b keep indices 0 and 1.
            std::size_t node = g.has_root() ? 0 : ObserverGraph::npos;
            for (Symbol s : seen) {
                if (node == ObserverGraph::npos) break;
                node = g.next(node, s);
            }
            if (expected.empty())
                CHECK(node == ObserverGraph::npos);
            else
                CHECK((node != ObserverGraph::npos && g.nodes[node] == expected));
        });
    }
}

TEST_CASE("observer of an observer is isomorphic to it") {
    std::mt19937 rng(8);
    for (int round = 0; round < 20; ++round) {
        Nfa a = random_nfa(rng, 5, 2);
        ObserverGraph g = observer(a, ObservationMap::all_observable(a));
        NfaBuilder b;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) b.add_state("n" + std::to_string(i));
        b.add_symbol("a");
        b.add_symbol("b");
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            for (Symbol s = 0; s < 2; ++s)
                if (g.next(i, s) != ObserverGraph::npos) b.add_transition(i, s, g.next(i, s));
        if (g.has_root()) b.set_initial(0);
        Nfa d = b.build();
        ObserverGraph h = observer(d, ObservationMap::all_observable(d));
        REQUIRE(h.nodes.size() == g.nodes.size());
        for (std::size_t i = 0; i < h.nodes.size(); ++i) {
            CHECK(h.nodes[i].count() == 1);
            for (Symbol s = 0; s < 2; ++s) CHECK(h.next(i, s) == g.next(i, s));
        }
    }
}

TEST_CASE("observation map validation") {
    std::mt19937 rng(1);
    Nfa a = random_nfa(rng, 3, 2);
    CHECK_THROWS_AS(ObservationMap(std::vector<bool>{true}).validate_for(a), InputError);
    CHECK_THROWS_AS(ObservationMap::with_unobservable(a, {"z"}), InputError);
    CHECK(ObservationMap::with_unobservable(a, {"a"}).project({0, 1, 0}) == Word{1});
}
