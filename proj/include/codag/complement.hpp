#pragma once

#include <cmath>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "codag/errors.hpp"
#include "codag/nbw.hpp"

namespace codag {

// A complement automaton together with the macrostate behind each state.
template <class M, class Hash>
struct Complement {
    Nbw automaton;
    std::vector<M> macrostates;
    std::unordered_map<M, State, Hash> index;

    std::optional<State> find(const M& m) const {
        auto it = index.find(m);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    // Whether the transition m --sym--> m2 is present.
    bool has_transition(const M& m, Symbol sym, const M& m2) const {
        auto p = find(m), q = find(m2);
        return p && q && automaton.successors(*p, sym).contains(*q);
    }
};

namespace detail {

// Reachable-fragment construction from one initial macrostate. succ(m, sym)
// returns the successor macrostates; the count is checked against bound
// after every new macrostate.
template <class M, class Hash, class Succ, class Accepting, class Label>
Complement<M, Hash> explore(const std::vector<std::string>& alphabet, M init, Succ succ,
                            Accepting accepting, Label label, long double bound, const char* construction) {
    Complement<M, Hash> c;
    c.automaton = Nbw(0, alphabet);
    auto intern = [&](const M& m) {
        auto [it, fresh] = c.index.emplace(m, static_cast<State>(c.macrostates.size()));
        if (fresh) {
            c.macrostates.push_back(m);
            State q = c.automaton.add_state(label(m));
            if (accepting(m)) c.automaton.set_accepting(q);
            if (static_cast<long double>(c.macrostates.size()) > bound)
                throw Error(ErrorCode::size_bound_exceeded,
                            std::string(construction) + " exceeded its state bound");
        }
        return it->second;
    };
    c.automaton.set_initial(intern(init));
    for (std::size_t i = 0; i < c.macrostates.size(); ++i) {
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            M cur = c.macrostates[i];
            for (const M& next : succ(cur, s)) {
                State q = intern(next);
                c.automaton.add_transition(static_cast<State>(i), s, q);
            }
        }
    }
    return c;
}

std::string format_set(const Nbw& a, const StateSet& s);

} // namespace detail
} // namespace codag
