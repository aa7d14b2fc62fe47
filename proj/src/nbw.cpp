#include "codag/nbw.hpp"

#include <algorithm>
#include <stdexcept>

#include "codag/errors.hpp"

namespace codag {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::not_finitely_ambiguous: return "NotFinitelyAmbiguous";
    case ErrorCode::not_limit_deterministic: return "NotLimitDeterministic";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::tracked_not_subset: return "TrackedNotSubset";
    case ErrorCode::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorCode::incompatible_algorithm: return "IncompatibleAlgorithm";
    case ErrorCode::shape_unsatisfiable: return "ShapeUnsatisfiable";
    case ErrorCode::phase_mismatch: return "PhaseMismatch";
    case ErrorCode::size_bound_exceeded: return "SizeBoundExceeded";
    case ErrorCode::undeclared_state: return "UndeclaredState";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Error";
}

Nbw::Nbw(std::size_t num_states, std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {
    for (std::size_t i = 0; i < num_states; ++i) add_state();
}

std::optional<Symbol> Nbw::symbol(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<Symbol>(it - alphabet_.begin());
}

StateSet Nbw::post(const StateSet& s, Symbol a) const {
    StateSet r;
    for (State q : s) r |= delta_[q][a];
    return r;
}

State Nbw::add_state(std::string name) {
    auto q = static_cast<State>(delta_.size());
    delta_.emplace_back(alphabet_.size());
    order_.push_back(q);
    rank_.push_back(order_.size() - 1);
    names_.push_back(std::move(name));
    return q;
}

void Nbw::add_transition(State from, Symbol a, State to) {
    if (from >= num_states() || to >= num_states() || a >= alphabet_size())
        throw std::out_of_range("transition outside automaton");
    delta_[from][a].insert(to);
}

void Nbw::set_order(const std::vector<State>& order) {
    if (order.size() != num_states()) throw std::invalid_argument("order is not a permutation");
    std::vector<std::size_t> rank(num_states(), num_states());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= num_states() || rank[order[i]] != num_states())
            throw std::invalid_argument("order is not a permutation");
        rank[order[i]] = i;
    }
    order_ = order;
    rank_ = std::move(rank);
}

std::string Nbw::state_name(State q) const {
    if (q < names_.size() && !names_[q].empty()) return names_[q];
    return std::to_string(q);
}

bool Nbw::is_complete() const {
    for (const auto& row : delta_)
        for (const auto& s : row)
            if (s.empty()) return false;
    return true;
}

std::size_t Nbw::num_transitions() const {
    std::size_t c = 0;
    for (const auto& row : delta_)
        for (const auto& s : row) c += s.size();
    return c;
}

Nbw Nbw::with_initial(const StateSet& init) const {
    Nbw r = *this;
    r.initial_ = init;
    return r;
}

bool Nbw::operator==(const Nbw& o) const {
    return alphabet_ == o.alphabet_ && delta_ == o.delta_ && initial_ == o.initial_ &&
           accepting_ == o.accepting_;
}

} // namespace codag
