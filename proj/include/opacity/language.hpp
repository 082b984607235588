#pragma once

#include <string>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/verdict.hpp"

namespace opacity {

// Emptiness, universality, inclusion and equivalence of accepted languages.
// Each returns a Verdict whose witness, when present, is a shortest and then
// lexicographically least (by symbol index) word separating the languages.

/// holds = the language is empty; witness = a shortest accepted word otherwise.
Verdict is_empty(const Nfa& nfa);
/// holds = every word over the alphabet is accepted; witness = a shortest rejected word.
Verdict is_universal(const Nfa& nfa);
/// holds = L(a) ⊆ L(b); witness = a shortest word of L(a) − L(b).
/// Alphabets are merged by name; the witness is over `a`'s alphabet extended by `b`'s.
Verdict is_included(const Nfa& a, const Nfa& b);
/// witness = a shortest word in the symmetric difference, ordered as in merged_alphabet(a, b).
Verdict is_equivalent(const Nfa& a, const Nfa& b);

/// Same automaton over `alphabet`, which must list every symbol of `nfa`; extra symbols have no transitions.
Nfa extend_alphabet(const Nfa& nfa, const std::vector<std::string>& alphabet);
/// Names of `a` in order, followed by the names of `b` that `a` lacks.
std::vector<std::string> merged_alphabet(const Nfa& a, const Nfa& b);

}  // namespace opacity
