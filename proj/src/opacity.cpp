#include "opacity/opacity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "opacity/detail/search.hpp"

namespace opacity {

namespace {

void require_states_of(const Nfa& nfa, const StateSet& s, const char* what) {
    if (s.universe() != nfa.num_states())
        throw InputError(std::string(what) + " does not belong to the automaton");
}

void require_disjoint(const StateSet& a, const StateSet& b, const char* what) {
    if (a.intersects(b)) throw InputError(std::string(what) + " overlap");
}

void validate_states(const Nfa& nfa, const StateSet& secret, const StateSet& nonsecret) {
    require_states_of(nfa, secret, "secret states");
    require_states_of(nfa, nonsecret, "non-secret states");
    require_disjoint(secret, nonsecret, "secret and non-secret states");
}

void validate_iso(const Nfa& nfa, const IsoQuery& q) {
    require_states_of(nfa, q.secret_initial, "secret initial states");
    require_states_of(nfa, q.nonsecret_initial, "non-secret initial states");
    if (!q.secret_initial.subset_of(nfa.initial()) || !q.nonsecret_initial.subset_of(nfa.initial()))
        throw InputError("secret and non-secret initial states must be initial");
    require_disjoint(q.secret_initial, q.nonsecret_initial, "secret and non-secret initial states");
}

void validate_ifo(const Nfa& nfa, const IfoQuery& q) {
    auto check_pairs = [&](const std::vector<StatePair>& pairs) {
        for (auto [i, f] : pairs) {
            if (i >= nfa.num_states() || f >= nfa.num_states() || !nfa.initial().contains(i) ||
                !nfa.accepting().contains(f))
                throw InputError("state pair outside initial x accepting");
        }
    };
    check_pairs(q.secret_pairs);
    check_pairs(q.nonsecret_pairs);
    std::set<StatePair> secret(q.secret_pairs.begin(), q.secret_pairs.end());
    for (const auto& p : q.nonsecret_pairs)
        if (secret.count(p)) throw InputError("secret and non-secret pairs overlap");
}

Verdict finish(const detail::SearchOutcome& out, const Nfa& projected, const Stopwatch& clock) {
    Verdict v;
    v.holds = !out.witness.has_value();
    if (out.witness) v.witness = projected.names(*out.witness);
    v.stats.explored_nodes = out.explored;
    v.stats.elapsed = clock.elapsed();
    return v;
}

StateSet closure_of(const std::vector<StateSet>& closures, const StateSet& s) {
    StateSet out(s.universe());
    s.for_each([&](State q) { out |= closures[q]; });
    return out;
}

// Disjoint union of copies of `nfa`, copy i started in pairs[i].first and
// accepting in pairs[i].second. Pairs with a common initial state share a copy.
Nfa pair_union(const Nfa& nfa, const std::vector<StatePair>& pairs) {
    std::map<State, std::vector<State>> merged;
    for (auto [i, f] : pairs) merged[i].push_back(f);

    NfaBuilder b;
    for (const auto& a : nfa.symbol_names()) b.add_symbol(a);
    std::size_t copy = 0;
    for (const auto& [init, finals] : merged) {
        const std::size_t base = b.num_states();
        for (const auto& name : nfa.state_names()) b.add_state(name + "#" + std::to_string(copy));
        for (const auto& t : nfa.transitions()) b.add_transition(base + t.src, t.symbol, base + t.dst);
        b.set_initial(base + init);
        for (State f : finals) b.set_accepting(base + f);
        ++copy;
    }
    return b.build();
}

struct StepNode {
    bool split = false;  // false: still reading s; true: reading t from the split pair
    StateSet first;      // current estimate, or the secret-side set after the split
    StateSet second;     // non-secret-side set after the split (empty before it)
    std::size_t depth = 0;
    bool operator==(const StepNode&) const = default;
};

struct StepNodeHash {
    std::size_t operator()(const StepNode& n) const {
        return ((n.first.hash() * 31 + n.second.hash()) * 31 + n.depth) * 2 + (n.split ? 1 : 0);
    }
};

// Shared search for k-step (finite k) and infinite-step opacity.
Verdict step_opacity(const Nfa& nfa, const StateSet& secret, const StateSet& nonsecret,
                     const ObservationMap& omap, std::optional<std::size_t> k) {
    Stopwatch clock;
    validate_states(nfa, secret, nonsecret);
    const Nfa p = eliminate_unobservable(nfa, omap);
    const StateSet safe_estimate = detail::persistent_core(p, nonsecret);
    const StateSet safe_pair = detail::persistent_core(p, p.all_states());
    const std::size_t syms = p.num_symbols();

    // Minimal depth at which each split pair was discovered; a deeper visit is dominated.
    std::unordered_map<std::pair<StateSet, StateSet>, std::size_t, detail::SetPairHash> best;

    detail::BreadthFirstSearch<StepNode, StepNodeHash> bfs;
    std::vector<StepNode> roots;
    if (!p.initial().empty()) roots.push_back({false, p.initial(), p.empty_set(), 0});

    auto offer_pair = [&](StateSet s, StateSet ns, std::size_t depth, Symbol a, auto&& emit) {
        if (s.empty()) return;
        if (k && depth > *k) return;
        auto key = std::make_pair(s, ns);
        if (auto it = best.find(key); it != best.end() && it->second <= depth) return;
        best[key] = depth;
        emit(a, StepNode{true, std::move(s), std::move(ns), k ? depth : 0});
    };

    auto out = bfs.run(
        roots,
        [&](const StepNode& node, auto&& emit) {
            if (!node.split) {
                if (node.first.intersects(safe_estimate)) return;
                const StateSet s = node.first & secret;
                const StateSet ns = node.first & nonsecret;
                for (Symbol a = 0; a < syms; ++a) {
                    StateSet next = step(p, node.first, a);
                    if (!next.empty()) emit(a, StepNode{false, std::move(next), p.empty_set(), 0});
                    if (!s.empty() && (!k || *k >= 1))
                        offer_pair(step(p, s, a), step(p, ns, a), 1, a, emit);
                }
            } else {
                if (node.second.intersects(safe_pair)) return;
                if (k && node.depth >= *k) return;
                for (Symbol a = 0; a < syms; ++a)
                    offer_pair(step(p, node.first, a), step(p, node.second, a), node.depth + 1, a, emit);
            }
        },
        [&](const StepNode& node) {
            if (!node.split) return node.first.intersects(secret) && !node.first.intersects(nonsecret);
            return node.second.empty();
        });

    Verdict v = finish(out, p, clock);
    if (out.witness) {
        std::size_t before_split = 0;
        for (std::size_t i : bfs.chain_to(out.violating_node))
            if (!bfs.nodes()[i].split) ++before_split;
        v.split = before_split - 1;
    }
    return v;
}

}  // namespace

bool has_product_form(const std::vector<StatePair>& pairs) {
    if (pairs.empty()) return false;
    std::set<StatePair> given(pairs.begin(), pairs.end());
    std::set<State> lefts, rights;
    for (auto [i, f] : given) {
        lefts.insert(i);
        rights.insert(f);
    }
    return given.size() == lefts.size() * rights.size();
}

Verdict check_cso(const Nfa& nfa, const CsoQuery& q, const ObservationMap& omap) {
    Stopwatch clock;
    validate_states(nfa, q.secret, q.nonsecret);
    const Nfa p = eliminate_unobservable(nfa, omap);
    const StateSet safe = detail::persistent_core(p, q.nonsecret);

    detail::BreadthFirstSearch<StateSet, StateSetHash> bfs;
    std::vector<StateSet> roots;
    if (!p.initial().empty()) roots.push_back(p.initial());
    auto out = bfs.run(
        roots,
        [&](const StateSet& e, auto&& emit) {
            if (e.intersects(safe)) return;
            for (Symbol a = 0; a < p.num_symbols(); ++a) {
                StateSet next = step(p, e, a);
                if (!next.empty()) emit(a, std::move(next));
            }
        },
        [&](const StateSet& e) { return e.intersects(q.secret) && !e.intersects(q.nonsecret); });
    return finish(out, p, clock);
}

Verdict check_iso(const Nfa& nfa, const IsoQuery& q, const ObservationMap& omap) {
    Stopwatch clock;
    validate_iso(nfa, q);
    const auto closures = unobservable_closures(nfa, omap);
    const Nfa p = eliminate_unobservable(nfa, omap);
    const StateSet all = p.all_states();
    auto out = detail::language_difference(p, closure_of(closures, q.secret_initial), all, p,
                                           closure_of(closures, q.nonsecret_initial), all);
    return finish(out, p, clock);
}

Verdict check_ifo(const Nfa& nfa, const IfoQuery& q, const ObservationMap& omap, IfoMethod method) {
    Stopwatch clock;
    validate_ifo(nfa, q);
    omap.validate_for(nfa);

    const Nfa secret = eliminate_unobservable(pair_union(nfa, q.secret_pairs), omap);
    Nfa nonsecret;
    if (method == IfoMethod::automatic && has_product_form(q.nonsecret_pairs)) {
        StateSet init = nfa.empty_set(), fin = nfa.empty_set();
        for (auto [i, f] : q.nonsecret_pairs) {
            init.insert(i);
            fin.insert(f);
        }
        nonsecret = eliminate_unobservable(nfa.with_initial(init).with_accepting(fin), omap);
    } else {
        nonsecret = eliminate_unobservable(pair_union(nfa, q.nonsecret_pairs), omap);
    }
    auto out = detail::language_difference(secret, secret.initial(), secret.accepting(), nonsecret,
                                           nonsecret.initial(), nonsecret.accepting());
    return finish(out, secret, clock);
}

Verdict check_kso(const Nfa& nfa, const KsoQuery& q, const ObservationMap& omap) {
    return step_opacity(nfa, q.secret, q.nonsecret, omap, q.k);
}

Verdict check_inso(const Nfa& nfa, const InsoQuery& q, const ObservationMap& omap) {
    return step_opacity(nfa, q.secret, q.nonsecret, omap, std::nullopt);
}

Verdict check_lbo(const LboQuery& q, const ObservationMap& omap) {
    Stopwatch clock;
    if (q.secret_lang.symbol_names() != q.nonsecret_lang.symbol_names())
        throw InputError("secret and non-secret languages must share an alphabet");
    const Nfa secret = eliminate_unobservable(q.secret_lang, omap);
    const Nfa nonsecret = eliminate_unobservable(q.nonsecret_lang, omap);
    auto out = detail::language_difference(secret, secret.initial(), secret.accepting(), nonsecret,
                                           nonsecret.initial(), nonsecret.accepting());
    return finish(out, secret, clock);
}

Verdict check(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap) {
    return std::visit(
        [&](const auto& query) -> Verdict {
            using T = std::decay_t<decltype(query)>;
            if constexpr (std::is_same_v<T, CsoQuery>) return check_cso(nfa, query, omap);
            else if constexpr (std::is_same_v<T, IsoQuery>) return check_iso(nfa, query, omap);
            else if constexpr (std::is_same_v<T, IfoQuery>) return check_ifo(nfa, query, omap);
            else if constexpr (std::is_same_v<T, KsoQuery>) return check_kso(nfa, query, omap);
            else if constexpr (std::is_same_v<T, InsoQuery>) return check_inso(nfa, query, omap);
            else return check_lbo(query, omap);
        },
        q);
}

void validate(const Nfa& nfa, const OpacityQuery& q) {
    std::visit(
        [&](const auto& query) {
            using T = std::decay_t<decltype(query)>;
            if constexpr (std::is_same_v<T, CsoQuery> || std::is_same_v<T, KsoQuery> ||
                          std::is_same_v<T, InsoQuery>)
                validate_states(nfa, query.secret, query.nonsecret);
            else if constexpr (std::is_same_v<T, IsoQuery>) validate_iso(nfa, query);
            else if constexpr (std::is_same_v<T, IfoQuery>) validate_ifo(nfa, query);
        },
        q);
}

}  // namespace opacity
