#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "opacity/nfa.hpp"
#include "opacity/observer.hpp"
#include "opacity/verdict.hpp"

namespace opacity {

struct CsoQuery {
    StateSet secret;
    StateSet nonsecret;
};

struct IsoQuery {
    StateSet secret_initial;
    StateSet nonsecret_initial;
};

/// (initial state, accepting state)
using StatePair = std::pair<State, State>;

struct IfoQuery {
    std::vector<StatePair> secret_pairs;
    std::vector<StatePair> nonsecret_pairs;
};

struct KsoQuery {
    StateSet secret;
    StateSet nonsecret;
    std::size_t k = 0;
};

struct InsoQuery {
    StateSet secret;
    StateSet nonsecret;
};

/// Secret and non-secret behaviours given as the accepted languages of two
/// automata over one alphabet. Their disjointness is not checked.
struct LboQuery {
    Nfa secret_lang;
    Nfa nonsecret_lang;
};

using OpacityQuery = std::variant<CsoQuery, IsoQuery, IfoQuery, KsoQuery, InsoQuery, LboQuery>;

// State-based checkers first remove unobservable transitions, then search the
// observed behaviour breadth-first. A failing verdict carries the shortest, then
// least, observed word exhibiting the violation.

Verdict check_cso(const Nfa& nfa, const CsoQuery& q, const ObservationMap& omap);
Verdict check_iso(const Nfa& nfa, const IsoQuery& q, const ObservationMap& omap);

enum class IfoMethod {
    automatic,  // single-copy non-secret automaton whenever IQ_NS = I_NS × F_NS
    general,    // always build the merged-pair union automata
};

/// True when the non-secret pairs form the full product of their left and right components.
bool has_product_form(const std::vector<StatePair>& pairs);

Verdict check_ifo(const Nfa& nfa, const IfoQuery& q, const ObservationMap& omap,
                  IfoMethod method = IfoMethod::automatic);

/// The witness is s·t with `split` = |s|: s reaches a secret state and t can
/// continue from it, while no observationally equal pair does so from a
/// non-secret state.
Verdict check_kso(const Nfa& nfa, const KsoQuery& q, const ObservationMap& omap);
Verdict check_inso(const Nfa& nfa, const InsoQuery& q, const ObservationMap& omap);

/// `omap` ranges over the shared alphabet of both languages.
Verdict check_lbo(const LboQuery& q, const ObservationMap& omap);

/// Dispatches on the query kind; `nfa` is ignored for LBO.
Verdict check(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap);

/// Throws InputError unless the query's sets belong to `nfa` and are disjoint.
void validate(const Nfa& nfa, const OpacityQuery& q);

}  // namespace opacity
