#pragma once

// Text formats.
//
// NFA document, one directive per line, `#` starts a comment:
//
//   states: q0 q1 q2
//   alphabet: a b u
//   unobservable: u
//   initial: q0
//   accepting: q2
//   secret-states: q1
//   nonsecret-states: q0 q2
//   secret-initial: ...
//   nonsecret-initial: ...
//   secret-pairs: q0:q2
//   nonsecret-pairs: ...
//   trans:
//   q0 a q1
//   q1 u q2
//
// Every line after `trans:` holds one `src symbol dst` triple. Sections other
// than `states:` and `alphabet:` are optional and may appear at most once.
//
// DIMACS CNF: `p cnf <vars> <clauses>` then clauses terminated by 0; `c` lines are comments.
// Graphs: `p edge <vertices> <edges>` then `e <i> <j>` lines.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/observer.hpp"
#include "opacity/opacity.hpp"
#include "opacity/reductions.hpp"

namespace opacity {

struct NfaAnnotations {
    using Names = std::vector<std::string>;
    using NamePairs = std::vector<std::pair<std::string, std::string>>;

    std::optional<Names> unobservable;
    std::optional<Names> secret_states;
    std::optional<Names> nonsecret_states;
    std::optional<Names> secret_initial;
    std::optional<Names> nonsecret_initial;
    std::optional<NamePairs> secret_pairs;
    std::optional<NamePairs> nonsecret_pairs;

    bool operator==(const NfaAnnotations&) const = default;
};

struct NfaDocument {
    Nfa nfa;
    NfaAnnotations notes;

    ObservationMap omap() const;

    // Queries read from the annotations. Missing non-secret sets default to the
    // complement of the secret ones (within all states, or within the initial
    // states for ISO); a missing secret set is an InputError.
    CsoQuery cso() const;
    IsoQuery iso() const;
    IfoQuery ifo() const;
    KsoQuery kso(std::size_t k) const;
    InsoQuery inso() const;
    /// L_S = L_m(A, secret-initial or initial, secret-states) and
    /// L_NS = L_m(A, nonsecret-initial or initial, nonsecret-states).
    LboQuery lbo() const;
};

/// Throws InputError naming the offending line.
NfaDocument parse_nfa(std::string_view text);
std::string serialize_nfa(const NfaDocument& doc);

NfaDocument document_for(const CsoInstance& inst);
NfaDocument document_for(const IsoInstance& inst);
NfaDocument document_for(const IfoInstance& inst);
/// Both languages must be the same automaton up to initial and accepting states,
/// with disjoint accepting sets.
NfaDocument document_for(const LboQuery& q, const ObservationMap& omap);
/// Plain automaton, no annotations beyond the observation map.
NfaDocument document_for(const Nfa& nfa, const ObservationMap& omap);

CnfFormula parse_dimacs_cnf(std::string_view text);
std::string serialize_dimacs_cnf(const CnfFormula& phi);

ColorGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColorGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace opacity
