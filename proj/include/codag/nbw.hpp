#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codag/state_set.hpp"

namespace codag {

// Ultimately periodic word stem . loop^omega, symbols given by index.
struct LassoWord {
    std::vector<Symbol> stem;
    std::vector<Symbol> loop;

    std::size_t length() const { return stem.size() + loop.size(); }
    // Letter at position i of the infinite word.
    Symbol at(std::size_t i) const {
        return i < stem.size() ? stem[i] : loop[(i - stem.size()) % loop.size()];
    }
    bool operator==(const LassoWord&) const = default;
    auto operator<=>(const LassoWord&) const = default;
};

class Nbw {
public:
    Nbw() = default;
    Nbw(std::size_t num_states, std::vector<std::string> alphabet);

    std::size_t num_states() const { return delta_.size(); }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::optional<Symbol> symbol(std::string_view name) const;

    const StateSet& initial() const { return initial_; }
    const StateSet& accepting() const { return accepting_; }
    bool is_accepting(State q) const { return accepting_.contains(q); }

    const StateSet& successors(State q, Symbol a) const { return delta_[q][a]; }
    StateSet post(const StateSet& s, Symbol a) const;

    State add_state(std::string name = {});
    void add_transition(State from, Symbol a, State to);
    void set_initial(State q) { initial_.insert(q); }
    void set_accepting(State q) { accepting_.insert(q); }

    // Total order on states, least first. Defaults to ascending index.
    const std::vector<State>& order() const { return order_; }
    std::size_t rank_of(State q) const { return rank_[q]; }
    bool precedes(State p, State q) const { return rank_[p] < rank_[q]; }
    void set_order(const std::vector<State>& order);

    std::string state_name(State q) const;
    void set_state_name(State q, std::string name) { names_[q] = std::move(name); }

    bool is_complete() const;
    std::size_t num_transitions() const;

    // Same automaton with a different initial set.
    Nbw with_initial(const StateSet& init) const;

    // Structural equality: states, alphabet, initials, accepting, transitions.
    bool operator==(const Nbw& o) const;

private:
    std::vector<std::string> alphabet_;
    std::vector<std::vector<StateSet>> delta_;
    StateSet initial_;
    StateSet accepting_;
    std::vector<State> order_;
    std::vector<std::size_t> rank_;
    std::vector<std::string> names_;
};

} // namespace codag
