#include <doctest.h>

#include <algorithm>

#include "opacity/opacity.hpp"
#include "opacity/oracles.hpp"
#include "opacity/reductions.hpp"
#include "support.hpp"

using namespace opacity;
using namespace testing_support;

namespace {

// i -a-> {s, ns}; s -b-> z -b-> z. The non-secret branch cannot read b.
Nfa late_leak() {
    NfaBuilder b;
    for (auto s : {"i", "s", "ns", "z"}) b.add_state(s);
    b.add_symbol("a");
    b.add_symbol("b");
    b.add_transition("i", "a", "s");
    b.add_transition("i", "a", "ns");
    b.add_transition("s", "b", "z");
    b.add_transition("z", "b", "z");
    b.set_initial(0);
    return b.build();
}

Nfa two_copies() {
    NfaBuilder b;
    for (auto s : {"p0", "p1", "r0", "r1"}) b.add_state(s);
    b.add_symbol("a");
    b.add_symbol("b");
    for (auto [x, y] : {std::pair{"p0", "p1"}, std::pair{"r0", "r1"}}) {
        b.add_transition(x, "a", y);
        b.add_transition(y, "b", x);
    }
    b.set_initial(b.state("p0"));
    b.set_initial(b.state("r0"));
    return b.build();
}

// Same automaton with state indices reversed and symbols renamed.
Nfa renamed(const Nfa& a) {
    NfaBuilder b;
    const std::size_t n = a.num_states();
    for (std::size_t i = 0; i < n; ++i) b.add_state("r" + a.state_name(n - 1 - i));
    for (const auto& s : a.symbol_names()) b.add_symbol("z" + s);
    for (const auto& t : a.transitions()) b.add_transition(n - 1 - t.src, t.symbol, n - 1 - t.dst);
    a.initial().for_each([&](State q) { b.set_initial(n - 1 - q); });
    a.accepting().for_each([&](State q) { b.set_accepting(n - 1 - q); });
    return b.build();
}

StateSet mirror(const StateSet& s) {
    StateSet out(s.universe());
    s.for_each([&](State q) { out.insert(s.universe() - 1 - q); });
    return out;
}

}  // namespace

TEST_CASE("CSO on the worked formulas") {
    auto inst = sat_to_cso(example_phi());
    Verdict v = check_cso(inst.nfa, inst.query, inst.omap);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    StateSet end = run(inst.nfa, inst.nfa.initial(), inst.nfa.word(*v.witness));
    CHECK_FALSE(end.intersects(inst.query.nonsecret));
    CHECK(end.intersects(inst.query.secret));

    auto sat = sat_to_cso(example_phi_prime());
    CHECK(check_cso(sat.nfa, sat.query, sat.omap).holds);

    CHECK(check_cso(inst.nfa, {inst.nfa.empty_set(), inst.nfa.all_states()}, inst.omap).holds);
    CHECK_THROWS_AS(check_cso(inst.nfa, {inst.nfa.all_states(), inst.query.secret}, inst.omap), InputError);
}

TEST_CASE("ISO") {
    Nfa c = two_copies();
    auto omap = ObservationMap::all_observable(c);
    CHECK(check_iso(c, {c.make_set({"p0"}), c.make_set({"r0"})}, omap).holds);
    CHECK_THROWS_AS(check_iso(c, {c.make_set({"p1"}), c.make_set({"r0"})}, omap), InputError);
    CHECK_THROWS_AS(check_iso(c, {c.make_set({"p0"}), c.make_set({"p0"})}, omap), InputError);

    auto inst = sat_to_cso(example_phi());
    IsoQuery q{inst.nfa.make_set({"q_s"}), inst.nfa.make_set({"x1_0", "x2_0", "x3_0"})};
    CHECK_FALSE(check_iso(inst.nfa, q, inst.omap).holds);

    auto k3 = cso_to_iso_split(coloring_to_cso(ColorGraph::complete(3)));
    CHECK_FALSE(check_iso(k3.nfa, k3.query, k3.omap).holds);
}

TEST_CASE("IFO") {
    auto inst = sat_to_cso(example_phi());
    const Nfa& a = inst.nfa;
    CHECK(check_ifo(a, {}, inst.omap).holds);

    IfoQuery q;
    q.secret_pairs = {{a.state("q_s"), a.state("q_s")}};
    for (auto i : {"x1_0", "x2_0", "x3_0"})
        for (State f = 0; f < a.num_states(); ++f) q.nonsecret_pairs.emplace_back(a.state(i), f);
    CHECK(has_product_form(q.nonsecret_pairs));
    CHECK_FALSE(check_ifo(a, q, inst.omap).holds);
    CHECK_FALSE(check_ifo(a, q, inst.omap, IfoMethod::general).holds);

    IfoQuery outside{{{a.state("q_ns"), a.state("q_s")}}, {}};
    CHECK_THROWS_AS(check_ifo(a, outside, inst.omap), InputError);
}

TEST_CASE("k-step opacity can fail where CSO holds") {
    Nfa a = late_leak();
    auto omap = ObservationMap::all_observable(a);
    StateSet s = a.make_set({"s"}), ns = a.make_set({"ns"});
    CHECK(check_cso(a, {s, ns}, omap).holds);
    CHECK(check_kso(a, {s, ns, 0}, omap).holds);
    Verdict v = check_kso(a, {s, ns, 1}, omap);
    CHECK_FALSE(v.holds);
    CHECK(*v.witness == std::vector<std::string>{"a", "b"});
    CHECK(v.split == 1u);
    CHECK_FALSE(check_inso(a, {s, ns}, omap).holds);
    CHECK(opacity_brute(a, KsoQuery{s, ns, 1}, omap, 4).verdict.witness == v.witness);
}

TEST_CASE("k-SO and INSO on the gadget") {
    auto inst = sat_to_cso(example_phi());
    for (std::size_t k : {0u, 1u, 5u})
        CHECK_FALSE(check_kso(inst.nfa, {inst.query.secret, inst.query.nonsecret, k}, inst.omap).holds);
    CHECK_FALSE(check_inso(inst.nfa, {inst.query.secret, inst.query.nonsecret}, inst.omap).holds);
    CHECK(check_inso(inst.nfa, {inst.nfa.empty_set(), inst.query.nonsecret}, inst.omap).holds);
}

TEST_CASE("LBO") {
    auto inst = sat_to_cso(example_phi());
    LboQuery empty{inst.nfa.with_accepting(inst.nfa.empty_set()), inst.nfa};
    CHECK(check_lbo(empty, inst.omap).holds);
    CHECK_FALSE(check_lbo(cso_to_lbo(inst), inst.omap).holds);
    auto sat = sat_to_cso(example_phi_prime());
    CHECK(check_lbo(cso_to_lbo(sat), sat.omap).holds);
}

TEST_CASE("notion relations on random automata") {
    std::mt19937 rng(42);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 2 + round % 4;
        Nfa a = random_nfa(rng, n, 2, 0.35);
        auto omap = ObservationMap::all_observable(a);
        auto [s, ns] = random_split(rng, n);

        const bool cso = check_cso(a, {s, ns}, omap).holds;
        CHECK(check_kso(a, {s, ns, 0}, omap).holds == cso);
        bool previous = cso;
        for (std::size_t k = 1; k <= 4; ++k) {
            bool now = check_kso(a, {s, ns, k}, omap).holds;
            if (now) CHECK(previous);
            previous = now;
        }
        const std::size_t bound = (std::size_t{1} << n) - 2;
        CHECK(check_inso(a, {s, ns}, omap).holds == check_kso(a, {s, ns, bound}, omap).holds);

        Nfa r = renamed(a);
        auto romap = ObservationMap::all_observable(r);
        CHECK(check_cso(r, {mirror(s), mirror(ns)}, romap).holds == cso);
        CHECK(check_inso(r, {mirror(s), mirror(ns)}, romap).holds == check_inso(a, {s, ns}, omap).holds);
    }
}

TEST_CASE("IFO product path agrees with the general path") {
    std::mt19937 rng(43);
    for (int round = 0; round < 100; ++round) {
        Nfa a = random_nfa(rng, 4, 2, 0.35);
        a = a.with_accepting(a.accepting() | a.initial());
        auto omap = ObservationMap::with_unobservable(a, round % 3 == 0 ? std::vector<std::string>{"b"}
                                                                          : std::vector<std::string>{});
        std::vector<State> init = a.initial().members(), fin = a.accepting().members();
        IfoQuery q;
        // Secret pairs start in the first initial state, the product uses the rest.
        for (State f : fin)
            if (f % 2 == 0) q.secret_pairs.emplace_back(init[0], f);
        for (std::size_t i = 1; i < init.size(); ++i)
            for (State f : fin) q.nonsecret_pairs.emplace_back(init[i], f);
        Verdict fast = check_ifo(a, q, omap, IfoMethod::automatic);
        Verdict slow = check_ifo(a, q, omap, IfoMethod::general);
        CHECK(fast.holds == slow.holds);
        CHECK(fast.witness == slow.witness);
    }
}

TEST_CASE("checkers with hidden symbols agree with the brute-force oracle") {
    std::mt19937 rng(44);
    for (int round = 0; round < 80; ++round) {
        Nfa a = random_nfa(rng, 4, 3, 0.3);
        auto omap = ObservationMap::with_unobservable(a, {"c"});
        auto [s, ns] = random_split(rng, 4);
        std::vector<OpacityQuery> queries = {CsoQuery{s, ns}, KsoQuery{s, ns, 1}, KsoQuery{s, ns, 2},
                                             InsoQuery{s, ns}};
        for (const auto& q : queries) {
            Verdict fast = check(a, q, omap);
            BruteVerdict slow = opacity_brute(a, q, omap, 10);
            // Within the length bound both sides see the same violations.
            if (!slow.verdict.holds) CHECK(fast.witness == slow.verdict.witness);
            if (!fast.holds) {
                if (fast.witness->size() <= 10) CHECK_FALSE(slow.verdict.holds);
                CHECK(replay_violation(a, q, omap, *fast.witness, fast.split));
            }
        }
    }
}
