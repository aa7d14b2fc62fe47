#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace oracle {

using codag::State;
using codag::Symbol;

namespace {

StateSet step(const Nbw& a, const StateSet& s, Symbol sym) {
    StateSet out;
    for (State q : s) out |= a.successors(q, sym);
    return out;
}

// Pairs (state, visited F) as 2q + flag.
StateSet step_flagged(const Nbw& a, const StateSet& s, Symbol sym) {
    StateSet out;
    for (State x : s)
        for (State p : a.successors(x / 2, sym)) out.insert(2 * p + ((x % 2) || a.is_accepting(p) ? 1 : 0));
    return out;
}

// Everything reachable after one or more passes of the loop; stepping
// distributes over union, so only new elements need another pass.
template <class Step>
StateSet loop_closure(const StateSet& start, const std::vector<Symbol>& loop, Step step) {
    StateSet all, frontier = start;
    while (!frontier.empty()) {
        for (Symbol s : loop) frontier = step(frontier, s);
        frontier -= all;
        all |= frontier;
    }
    return all;
}

bool returns_through_f(const Nbw& a, State q, const std::vector<Symbol>& loop) {
    StateSet start;
    start.insert(2 * q + (a.is_accepting(q) ? 1 : 0));
    auto reach = loop_closure(start, loop, [&](const StateSet& s, Symbol sym) { return step_flagged(a, s, sym); });
    return reach.contains(2 * q + 1);
}

LassoWord suffix(const LassoWord& w, std::size_t from) {
    if (from < w.stem.size())
        return {std::vector<Symbol>(w.stem.begin() + from, w.stem.end()), w.loop};
    std::size_t r = (from - w.stem.size()) % w.loop.size();
    LassoWord out;
    out.loop.assign(w.loop.begin() + r, w.loop.end());
    out.loop.insert(out.loop.end(), w.loop.begin(), w.loop.begin() + r);
    return out;
}

void words(std::size_t k, std::size_t len, std::vector<Symbol>& cur, std::vector<std::vector<Symbol>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (Symbol s = 0; s < k; ++s) {
        cur.push_back(s);
        words(k, len, cur, out);
        cur.pop_back();
    }
}

} // namespace

bool member_from(const Nbw& a, const StateSet& init, const LassoWord& w) {
    StateSet r = init;
    for (Symbol s : w.stem) r = step(a, r, s);
    StateSet seen = r | loop_closure(r, w.loop, [&](const StateSet& x, Symbol sym) { return step(a, x, sym); });
    for (State q : seen)
        if (returns_through_f(a, q, w.loop)) return true;
    return false;
}

bool member(const Nbw& a, const LassoWord& w) { return member_from(a, a.initial(), w); }

std::vector<LassoWord> all_lassos(std::size_t alphabet_size, std::size_t max_stem, std::size_t max_loop) {
    std::vector<std::vector<std::vector<Symbol>>> by_len(std::max(max_stem, max_loop) + 1);
    for (std::size_t len = 0; len < by_len.size(); ++len) {
        std::vector<Symbol> cur;
        words(alphabet_size, len, cur, by_len[len]);
    }
    std::vector<LassoWord> out;
    for (std::size_t total = 1; total <= max_stem + max_loop; ++total)
        for (std::size_t ls = 0; ls <= std::min(max_stem, total - 1); ++ls) {
            std::size_t ll = total - ls;
            if (ll > max_loop) continue;
            for (const auto& u : by_len[ls])
                for (const auto& v : by_len[ll]) out.push_back({u, v});
        }
    return out;
}

std::uint64_t accepting_prefixes(const Nbw& a, const LassoWord& w, std::size_t len) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 64;
    std::vector<std::uint64_t> count(a.num_states(), 0);
    for (State q = 0; q < a.num_states(); ++q)
        if (a.initial().contains(q)) count[q] = 1;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::uint64_t> next(a.num_states(), 0);
        for (State q = 0; q < a.num_states(); ++q)
            if (count[q])
                for (State p : a.successors(q, w.at(i))) next[p] = std::min(cap, next[p] + count[q]);
        count = std::move(next);
    }
    LassoWord rest = suffix(w, len);
    std::uint64_t total = 0;
    for (State q = 0; q < a.num_states(); ++q) {
        if (!count[q]) continue;
        StateSet one;
        one.insert(q);
        if (member_from(a, one, rest)) total = std::min(cap, total + count[q]);
    }
    return total;
}

bool has_k_ambiguous_lasso(const Nbw& a, std::uint64_t k, std::size_t max_len) {
    for (const auto& w : all_lassos(a.alphabet_size(), max_len, max_len))
        if (accepting_prefixes(a, w, w.stem.size() + (k + 1) * w.loop.size()) >= k) return true;
    return false;
}

bool accepts_some_lasso(const Nbw& a, std::size_t bound) {
    for (const auto& w : all_lassos(a.alphabet_size(), bound, bound))
        if (member(a, w)) return true;
    return false;
}

bool in_worked_complement(const LassoWord& w) {
    std::vector<Symbol> x = w.stem;
    x.insert(x.end(), w.loop.begin(), w.loop.end());
    x.insert(x.end(), w.loop.begin(), w.loop.end());
    bool seen_b = false;
    for (Symbol s : x) {
        if (s == 1) seen_b = true;
        if (s == 0 && seen_b) return true;
    }
    return !seen_b;
}

} // namespace oracle
