#include "opacity/oracles.hpp"

#include <cmath>
#include <variant>

namespace opacity {

std::optional<std::vector<bool>> sat_brute(const CnfFormula& phi) {
    const std::size_t n = phi.num_vars();
    if (n > 24) throw InputError("sat_brute is capped at 24 variables");
    std::vector<bool> assignment(n);
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << n); ++value) {
        for (std::size_t i = 0; i < n; ++i) assignment[i] = (value >> i) & 1U;
        if (phi.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

std::optional<std::string> coloring_brute(const ColorGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 12) throw InputError("coloring_brute is capped at 12 vertices");
    std::string colouring(n, 'a');
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (colouring[u - 1] == colouring[v - 1]) proper = false;
        if (proper) return colouring;
        // Next word in lexicographic order; the last vertex varies fastest.
        std::size_t i = n;
        while (i > 0 && colouring[i - 1] == 'c') colouring[--i] = 'a';
        if (i == 0) return std::nullopt;
        ++colouring[i - 1];
    }
}

namespace {

StateSet saturate(const Nfa& nfa, const ObservationMap& omap, StateSet s) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& t : nfa.transitions()) {
            if (!omap.observable(t.symbol) && s.contains(t.src) && !s.contains(t.dst)) {
                s.insert(t.dst);
                grew = true;
            }
        }
    }
    return s;
}

StateSet raw_step(const Nfa& nfa, const StateSet& s, Symbol a) {
    StateSet out(nfa.num_states());
    for (const auto& t : nfa.transitions())
        if (t.symbol == a && s.contains(t.src)) out.insert(t.dst);
    return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

StateSet single(const Nfa& nfa, State q) { return StateSet(nfa.num_states(), {q}); }

// Definition-level violation tests on one observed word (and, for the k-step
// notions, one split point).
struct Violation {
    const Nfa& nfa;
    const ObservationMap& omap;

    StateSet est(const StateSet& from, const Word& x) const { return observed_estimate(nfa, omap, from, x); }

    bool operator()(const CsoQuery& q, const Word& x) const {
        StateSet e = est(nfa.initial(), x);
        return e.intersects(q.secret) && !e.intersects(q.nonsecret);
    }
    bool operator()(const IsoQuery& q, const Word& x) const {
        return !est(q.secret_initial, x).empty() && est(q.nonsecret_initial, x).empty();
    }
    bool operator()(const IfoQuery& q, const Word& x) const {
        bool secret = false;
        for (auto [i, f] : q.secret_pairs)
            if (est(single(nfa, i), x).contains(f)) secret = true;
        if (!secret) return false;
        for (auto [i, f] : q.nonsecret_pairs)
            if (est(single(nfa, i), x).contains(f)) return false;
        return true;
    }
    bool split_violates(const StateSet& secret, const StateSet& nonsecret, const Word& x, std::size_t j) const {
        StateSet e = est(nfa.initial(), slice(x, 0, j));
        StateSet s = e & secret;
        if (s.empty()) return false;
        const Word t = slice(x, j, x.size());
        return !est(s, t).empty() && est(e & nonsecret, t).empty();
    }
};

bool lbo_violates(const LboQuery& q, const ObservationMap& omap, const Word& x) {
    return observed_estimate(q.secret_lang, omap, q.secret_lang.initial(), x).intersects(q.secret_lang.accepting()) &&
           !observed_estimate(q.nonsecret_lang, omap, q.nonsecret_lang.initial(), x)
                .intersects(q.nonsecret_lang.accepting());
}

// First violating split of x, if any, with |t| <= k when k is given.
std::optional<std::size_t> violating_split(const Violation& v, const StateSet& secret, const StateSet& nonsecret,
                                           std::optional<std::size_t> k, const Word& x) {
    for (std::size_t j = 0; j <= x.size(); ++j) {
        if (k && x.size() - j > *k) continue;
        if (v.split_violates(secret, nonsecret, x, j)) return j;
    }
    return std::nullopt;
}

}  // namespace

StateSet observed_estimate(const Nfa& nfa, const ObservationMap& omap, const StateSet& from,
                           const Word& observed) {
    StateSet s = saturate(nfa, omap, from);
    for (Symbol a : observed) s = saturate(nfa, omap, raw_step(nfa, s, a));
    return s;
}

BruteVerdict opacity_brute(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap,
                           std::size_t max_len) {
    Stopwatch clock;
    const Nfa& owner = std::holds_alternative<LboQuery>(q) ? std::get<LboQuery>(q).secret_lang : nfa;
    omap.validate_for(owner);
    if (!std::holds_alternative<LboQuery>(q)) validate(nfa, q);

    const auto visible = omap.observable_symbols();
    double total = 0;
    for (std::size_t l = 0; l <= max_len; ++l) total += std::pow(static_cast<double>(visible.size()), l);
    if (total > 5e7) throw InputError("opacity_brute: word enumeration exceeds its cap");

    const Violation v{nfa, omap};
    BruteVerdict out;
    // Shortest violations are bounded by the number of estimates (CSO) or estimate pairs (ISO).
    const std::size_t n = nfa.num_states();
    if (std::holds_alternative<CsoQuery>(q) && n < 40) out.bounded = max_len < (std::size_t{1} << n);
    if (std::holds_alternative<IsoQuery>(q) && n < 20) out.bounded = max_len < (std::size_t{1} << (2 * n));

    std::size_t examined = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (visible.empty() && len > 0) break;
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            Word x(len);
            for (std::size_t i = 0; i < len; ++i) x[i] = visible[digits[i]];
            ++examined;

            std::optional<std::size_t> split;
            bool bad = std::visit(
                [&](const auto& query) -> bool {
                    using T = std::decay_t<decltype(query)>;
                    if constexpr (std::is_same_v<T, KsoQuery>)
                        return (split = violating_split(v, query.secret, query.nonsecret, query.k, x)).has_value();
                    else if constexpr (std::is_same_v<T, InsoQuery>)
                        return (split = violating_split(v, query.secret, query.nonsecret, std::nullopt, x)).has_value();
                    else if constexpr (std::is_same_v<T, LboQuery>)
                        return lbo_violates(query, omap, x);
                    else
                        return v(query, x);
                },
                q);
            if (bad) {
                out.verdict.holds = false;
                out.verdict.witness = owner.names(x);
                out.verdict.split = split;
                out.verdict.stats.explored_nodes = examined;
                out.verdict.stats.elapsed = clock.elapsed();
                return out;
            }

            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == visible.size()) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
    }
    out.verdict.stats.explored_nodes = examined;
    out.verdict.stats.elapsed = clock.elapsed();
    return out;
}

bool replay_violation(const Nfa& nfa, const OpacityQuery& q, const ObservationMap& omap,
                      const std::vector<std::string>& witness, std::optional<std::size_t> split) {
    const Nfa& owner = std::holds_alternative<LboQuery>(q) ? std::get<LboQuery>(q).secret_lang : nfa;
    Word x;
    for (const auto& name : witness) {
        auto a = owner.find_symbol(name);
        if (!a || !omap.observable(*a)) return false;
        x.push_back(*a);
    }
    const Violation v{nfa, omap};
    return std::visit(
        [&](const auto& query) -> bool {
            using T = std::decay_t<decltype(query)>;
            if constexpr (std::is_same_v<T, KsoQuery> || std::is_same_v<T, InsoQuery>) {
                if (!split || *split > x.size()) return false;
                if constexpr (std::is_same_v<T, KsoQuery>)
                    if (x.size() - *split > query.k) return false;
                return v.split_violates(query.secret, query.nonsecret, x, *split);
            } else if constexpr (std::is_same_v<T, LboQuery>) {
                return lbo_violates(query, omap, x);
            } else {
                return v(query, x);
            }
        },
        q);
}

}  // namespace opacity
