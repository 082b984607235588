#include <doctest.h>

#include "opacity/oracles.hpp"
#include "support.hpp"

using namespace opacity;
using namespace testing_support;

TEST_CASE("SAT brute force") {
    CHECK_FALSE(sat_brute(example_phi()));
    auto a = sat_brute(example_phi_prime());
    REQUIRE(a);
    CHECK(example_phi_prime().satisfied_by(*a));
    // x1=0, x2=1, x3=0 is the first model in counter order.
    CHECK(*a == std::vector<bool>{false, true, false});
    CHECK(*sat_brute(CnfFormula(3, {})) == std::vector<bool>(3, false));
    CHECK_THROWS_AS(sat_brute(CnfFormula(25, {})), InputError);
}

TEST_CASE("colouring brute force") {
    CHECK(*coloring_brute(ColorGraph::complete(3)) == "abc");
    CHECK_FALSE(coloring_brute(ColorGraph::complete(4)));
    CHECK(*coloring_brute(ColorGraph(2, {})) == "aa");
    CHECK(*coloring_brute(ColorGraph(3, {{1, 2}, {2, 3}})) == "aba");
    CHECK_THROWS_AS(coloring_brute(ColorGraph(13, {})), InputError);
}

TEST_CASE("definitional brute force") {
    std::mt19937 rng(4);
    Nfa a = random_nfa(rng, 4, 2);
    auto omap = ObservationMap::all_observable(a);
    BruteVerdict empty = opacity_brute(a, CsoQuery{a.empty_set(), a.all_states()}, omap, 16);
    CHECK(empty.verdict.holds);
    CHECK_FALSE(empty.bounded);
    CHECK(opacity_brute(a, CsoQuery{a.empty_set(), a.all_states()}, omap, 8).bounded);
    CHECK_THROWS_AS(opacity_brute(a, CsoQuery{a.empty_set(), a.all_states()}, omap, 40), InputError);

    auto inst = sat_to_cso(CnfFormula(1, {{1}, {-1}}));
    BruteVerdict v = opacity_brute(inst.nfa, inst.query, inst.omap, 4);
    CHECK_FALSE(v.verdict.holds);
    CHECK(v.verdict.witness->size() == 2);
    CHECK(replay_violation(inst.nfa, inst.query, inst.omap, *v.verdict.witness, std::nullopt));
    CHECK_FALSE(replay_violation(inst.nfa, inst.query, inst.omap, {"a1.c1"}, std::nullopt));
    CHECK_FALSE(replay_violation(inst.nfa, inst.query, inst.omap, {"nope"}, std::nullopt));
}

TEST_CASE("observed estimate with hidden moves") {
    NfaBuilder b;
    for (auto s : {"1", "2", "3"}) b.add_state(s);
    b.add_symbol("u");
    b.add_symbol("a");
    b.add_transition("1", "u", "2");
    b.add_transition("2", "a", "3");
    b.add_transition("3", "u", "1");
    b.set_initial(0);
    Nfa n = b.build();
    auto omap = ObservationMap::with_unobservable(n, {"u"});
    CHECK(observed_estimate(n, omap, n.initial(), {}) == n.make_set({"1", "2"}));
    CHECK(observed_estimate(n, omap, n.initial(), {1}) == n.make_set({"1", "2", "3"}));
}
