#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/observer.hpp"
#include "opacity/opacity.hpp"

namespace opacity {

/// CNF formula over variables 1..num_vars. Literals are signed variable indices.
class CnfFormula {
public:
    CnfFormula() = default;
    /// Throws InputError on a zero literal or a variable outside 1..num_vars.
    /// Repeated literals inside a clause collapse.
    CnfFormula(std::size_t num_vars, std::vector<std::vector<int>> clauses);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    const std::vector<int>& clause(std::size_t j) const { return clauses_.at(j); }

    bool contains(std::size_t clause, int literal) const;
    /// Zero-based indices of the clauses containing `literal`.
    std::vector<std::size_t> clauses_with(int literal) const;
    /// `assignment[i]` is the value of variable i+1.
    bool clause_satisfied(std::size_t clause, const std::vector<bool>& assignment) const;
    bool satisfied_by(const std::vector<bool>& assignment) const;

private:
    std::size_t num_vars_ = 0;
    std::vector<std::vector<int>> clauses_;
};

/// Simple undirected graph on vertices 1..n with edges stored as (i, j), i < j.
class ColorGraph {
public:
    ColorGraph() = default;
    /// Throws InputError on self-loops, duplicate edges and vertices outside 1..n.
    ColorGraph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    static ColorGraph complete(std::size_t n);

private:
    std::size_t num_vertices_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

enum class ReductionFamily { generic, sat, coloring };

struct CsoInstance {
    Nfa nfa;
    CsoQuery query;
    ObservationMap omap;
    ReductionFamily family = ReductionFamily::generic;
    std::size_t size_param = 0;   // variables (sat) or vertices (coloring)
    std::size_t clause_count = 0; // sat only
};

struct IsoInstance {
    Nfa nfa;
    IsoQuery query;
    ObservationMap omap;
};

struct IfoInstance {
    Nfa nfa;
    IfoQuery query;
    ObservationMap omap;
};

/// "a<i>.c<j>", the flattened name of the pair symbol (a_i, c_j).
std::string sat_symbol_name(std::size_t letter, std::size_t clause);
/// "x<i>_<r>", the state recording value r of variable i.
std::string sat_state_name(std::size_t var, int value);

/// Binary-counter automaton with 2n+2 states over (n+1)·m pair symbols; it is
/// current-state opaque for {q_s} against the rest iff `phi` is satisfiable.
/// Symbol "a<i>.c<j>" has index (i-1)·m + (j-1). Every state is accepting.
CsoInstance sat_to_cso(const CnfFormula& phi);

/// Letter indices of the Zimin word Z_n: position l (1-based) carries one plus
/// the number of trailing zeros of l. Length 2^n - 1; 1 <= n <= 30.
std::vector<std::size_t> zimin_indices(std::size_t n);

/// For unsatisfiable `phi`, the length-2^n word over sat_to_cso(phi)'s alphabet
/// that drives the counter through every assignment, each step paired with the
/// lowest clause the current assignment falsifies, and ends in {q_s}.
/// Empty when some assignment satisfies `phi`.
std::optional<Word> canonical_violating_word(const CnfFormula& phi);

/// Automaton with 4n-1 states and 12n+3m-12 transitions over {a,b,c}; the
/// secret state s is reached by every word of length n and the sink f joins it
/// exactly when the word colours some edge monochromatically.
CsoInstance coloring_to_cso(const ColorGraph& g);

/// Recognises the two reduction shapes by state names and structure.
ReductionFamily detect_family(const Nfa& nfa, const CsoQuery& q);

/// Language-based instance equivalent to the given current-state one.
LboQuery cso_to_lbo(const CsoInstance& inst);
/// SAT shape only: I_S = {q_s}, I_NS = the counter's initial states.
IsoInstance cso_to_iso_direct(const CsoInstance& inst);
/// Colouring shape only: adds a copy q_i' of the vertex chain that never enters s.
IsoInstance cso_to_iso_split(const CsoInstance& inst);
/// Either ISO shape above; sets the accepting states and emits the pair sets.
IfoInstance iso_to_ifo(const IsoInstance& inst);
/// Single secret state made the only non-accepting state.
Nfa cso_to_universality(const CsoInstance& inst);

/// Wraps a current-state query read from elsewhere, detecting its family.
CsoInstance make_cso_instance(Nfa nfa, CsoQuery q, ObservationMap omap);

}  // namespace opacity
