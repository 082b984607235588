#pragma once

// Breadth-first search over implicitly given labelled graphs.
//
// Successors are emitted in increasing symbol order and a violation is tested
// when a node is first discovered, so the first violation found lies at the end
// of the shortest, then lexicographically least, label sequence.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opacity/nfa.hpp"

namespace opacity::detail {

struct SearchOutcome {
    std::optional<Word> witness;
    std::size_t violating_node = 0;
    std::size_t explored = 0;
};

template <typename Node, typename Hash>
class BreadthFirstSearch {
public:
    /// `expand(node, emit)` calls `emit(symbol, successor)` in symbol order.
    template <typename Expand, typename Violates>
    SearchOutcome run(const std::vector<Node>& roots, Expand&& expand, Violates&& violates) {
        SearchOutcome out;
        for (const auto& r : roots) {
            if (!discover(r, npos, 0)) continue;
            if (violates(r)) return finish(out, nodes_.size() - 1);
        }
        for (std::size_t head = 0; head < nodes_.size(); ++head) {
            std::optional<std::size_t> hit;
            const Node current = nodes_[head];
            expand(current, [&](Symbol a, Node next) {
                if (hit) return;
                if (!discover(std::move(next), head, a)) return;
                if (violates(nodes_.back())) hit = nodes_.size() - 1;
            });
            if (hit) return finish(out, *hit);
        }
        out.explored = nodes_.size();
        return out;
    }

    const std::vector<Node>& nodes() const { return nodes_; }

    /// Node indices from a root to `i`, both included.
    std::vector<std::size_t> chain_to(std::size_t i) const {
        std::vector<std::size_t> chain{i};
        while (parent_[i] != npos) {
            i = parent_[i];
            chain.push_back(i);
        }
        return {chain.rbegin(), chain.rend()};
    }

    Word path_to(std::size_t i) const {
        Word w;
        while (parent_[i] != npos) {
            w.push_back(via_[i]);
            i = parent_[i];
        }
        return {w.rbegin(), w.rend()};
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool discover(Node n, std::size_t parent, Symbol a) {
        auto [it, fresh] = index_.try_emplace(n, nodes_.size());
        if (!fresh) return false;
        nodes_.push_back(std::move(n));
        parent_.push_back(parent);
        via_.push_back(a);
        return true;
    }

    SearchOutcome& finish(SearchOutcome& out, std::size_t i) {
        out.witness = path_to(i);
        out.violating_node = i;
        out.explored = nodes_.size();
        return out;
    }

    std::vector<Node> nodes_;
    std::vector<std::size_t> parent_;
    std::vector<Symbol> via_;
    std::unordered_map<Node, std::size_t, Hash> index_;
};

struct SetPairHash {
    std::size_t operator()(const std::pair<StateSet, StateSet>& p) const {
        return p.first.hash() * 31 + p.second.hash();
    }
};

/// Greatest set of states within `allowed` from which every symbol leads back into the set.
/// An estimate meeting it keeps meeting it after any word.
StateSet persistent_core(const Nfa& nfa, const StateSet& allowed);

/// States from which some state of `target` is reachable.
StateSet coreachable(const Nfa& nfa, const StateSet& target);

/// Shortest-then-least word read from `left_root` into `left_accepting` but not from
/// `right_root` into `right_accepting`. Both automata must share one alphabet.
SearchOutcome language_difference(const Nfa& left, const StateSet& left_root,
                                  const StateSet& left_accepting, const Nfa& right,
                                  const StateSet& right_root, const StateSet& right_accepting);

}  // namespace opacity::detail
