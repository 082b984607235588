#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/reductions.hpp"

namespace testing_support {

using namespace opacity;

/// c1..c5 = {x2}, {x1,x2}, {-x1,x3}, {-x2,-x3}, {x3}; unsatisfiable.
CnfFormula example_phi();
/// The same without c5; satisfiable.
CnfFormula example_phi_prime();
/// The word a1.c1 a2.c2 a1.c5 a3.c3 a1.c1 a2.c1 a1.c4 a4.c4.
std::vector<std::string> example_word();

/// States s0.., symbols a,b,..; every (q, a, p) kept with probability `density`.
/// At least one initial state.
Nfa random_nfa(std::mt19937& rng, std::size_t states, std::size_t symbols, double density = 0.3);
CnfFormula random_kcnf(std::mt19937& rng, std::size_t k, std::size_t n, std::size_t m);
ColorGraph random_graph(std::mt19937& rng, std::size_t n, double p = 0.5);
/// Random disjoint pair of state subsets.
std::pair<StateSet, StateSet> random_split(std::mt19937& rng, std::size_t n);

/// The counter states x_i^r of a SAT instance with their transitions among themselves.
Nfa counter_fragment(const Nfa& sat_nfa);

bool same_structure(const Nfa& a, const Nfa& b);

/// Calls f on every word over symbols 0..k-1 of length <= max_len, by length then lexicographically.
void for_each_word(std::size_t k, std::size_t max_len, const std::function<void(const Word&)>& f);

}  // namespace testing_support
