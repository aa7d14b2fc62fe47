#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace codag {

using State = std::uint32_t;
using Symbol = std::uint32_t;

// Finite set of states as a bitset. The word vector is kept trimmed (no
// trailing zero words) so equality, ordering and hashing are canonical.
class StateSet {
public:
    StateSet() = default;
    StateSet(std::initializer_list<State> states) {
        for (State q : states) insert(q);
    }

    static StateSet range(std::size_t n) {
        StateSet s;
        for (std::size_t q = 0; q < n; ++q) s.insert(static_cast<State>(q));
        return s;
    }

    void insert(State q) {
        std::size_t w = q / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (q % 64);
    }

    void erase(State q) {
        std::size_t w = q / 64;
        if (w >= words_.size()) return;
        words_[w] &= ~(std::uint64_t{1} << (q % 64));
        trim();
    }

    bool contains(State q) const {
        std::size_t w = q / 64;
        return w < words_.size() && ((words_[w] >> (q % 64)) & 1U);
    }

    bool empty() const { return words_.empty(); }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    State min() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<State>(i * 64 + std::countr_zero(words_[i]));
        return 0;
    }

    bool subset_of(const StateSet& o) const {
        if (words_.size() > o.words_.size()) return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const StateSet& o) const {
        std::size_t k = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    StateSet& operator|=(const StateSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    StateSet& operator&=(const StateSet& o) {
        if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        trim();
        return *this;
    }

    StateSet& operator-=(const StateSet& o) {
        std::size_t k = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < k; ++i) words_[i] &= ~o.words_[i];
        trim();
        return *this;
    }

    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    bool operator==(const StateSet&) const = default;
    std::strong_ordering operator<=>(const StateSet& o) const {
        if (auto c = words_.size() <=> o.words_.size(); c != 0) return c;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return h;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = State;
        using difference_type = std::ptrdiff_t;
        using pointer = const State*;
        using reference = State;

        iterator() = default;
        iterator(const std::vector<std::uint64_t>* w, std::size_t pos) : words_(w), pos_(pos) { advance(); }
        State operator*() const { return static_cast<State>(pos_); }
        iterator& operator++() {
            ++pos_;
            advance();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        void advance() {
            std::size_t end = words_->size() * 64;
            while (pos_ < end) {
                std::uint64_t rest = (*words_)[pos_ / 64] >> (pos_ % 64);
                if (rest) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(rest));
                    return;
                }
                pos_ = (pos_ / 64 + 1) * 64;
            }
            pos_ = end;
        }
        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t pos_ = 0;
    };

    iterator begin() const { return iterator(&words_, 0); }
    iterator end() const { return iterator(&words_, words_.size() * 64); }

    std::vector<State> to_vector() const { return {begin(), end()}; }

private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace codag
