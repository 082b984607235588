#pragma once

// Fixed-universe bit vector used for state estimates.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace opacity {

using State = std::size_t;
using Symbol = std::size_t;

class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    StateSet(std::size_t universe, std::initializer_list<State> members)
        : StateSet(universe) {
        for (State q : members) insert(q);
    }

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (State q = 0; q < universe; ++q) s.insert(q);
        return s;
    }

    std::size_t universe() const { return universe_; }

    void insert(State q) { words_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(State q) { words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
    bool contains(State q) const {
        return q < universe_ && ((words_[q >> 6] >> (q & 63)) & 1U);
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool intersects(const StateSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool subset_of(const StateSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    StateSet& subtract(const StateSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<State>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<State> members() const {
        std::vector<State> out;
        for_each([&](State q) { out.push_back(q); });
        return out;
    }

    bool operator==(const StateSet& other) const = default;

    // Orders by the numeric value of the bit vector (highest state most significant).
    std::strong_ordering operator<=>(const StateSet& other) const {
        if (auto c = universe_ <=> other.universe_; c != 0) return c;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
        for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace opacity
