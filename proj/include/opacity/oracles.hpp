#pragma once

// Brute-force references. Nothing here shares code with the observer-based
// checkers: estimates are recomputed from the raw transition list for every
// word, and the opacity definitions are evaluated quantifier by quantifier.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/observer.hpp"
#include "opacity/opacity.hpp"
#include "opacity/reductions.hpp"

namespace opacity {

/// First satisfying assignment in binary-counter order (x_1 least significant); n <= 24.
std::optional<std::vector<bool>> sat_brute(const CnfFormula& phi);

/// Lexicographically least proper colouring as a word over {a,b,c}; n <= 12.
std::optional<std::string> coloring_brute(const ColorGraph& g);

struct BruteVerdict {
    Verdict verdict;
    /// True unless the length bound is known to make the answer exact.
    bool bounded = true;
};

/// Evaluates the chosen definition over every observed word of length <= max_len,
/// enumerated by length and then lexicographically. For k-step notions the bound
/// applies to the whole word s·t. At most 5·10^7 words are enumerated.
BruteVerdict opacity_brute(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap,
                           std::size_t max_len);

/// States reachable by some word whose projection is `observed`, starting in `from`.
StateSet observed_estimate(const Nfa& nfa, const ObservationMap& omap, const StateSet& from,
                           const Word& observed);

/// Checks that a reported witness exhibits a violation of the query's definition.
/// `witness` is spelled in symbol names of the query's automaton; `split` is used
/// by the k-step notions.
bool replay_violation(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap,
                      const std::vector<std::string>& witness, std::optional<std::size_t> split);

}  // namespace opacity
