#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codag/nbw.hpp"

namespace codag {

struct LdbwPartition {
    StateSet q_n;
    StateSet q_d;
    // Indexed [state][symbol]. delta_n and delta_j are empty on q_d states;
    // delta_d is only meaningful on q_d states.
    std::vector<std::vector<StateSet>> delta_n;
    std::vector<std::vector<StateSet>> delta_j;
    std::vector<std::vector<State>> delta_d;

    StateSet post_n(const StateSet& s, Symbol a) const;
    StateSet post_j(const StateSet& s, Symbol a) const;
    StateSet post_d(const StateSet& s, Symbol a) const;
};

struct ClassificationReport {
    bool complete = false;
    bool deterministic = false;
    bool reverse_deterministic = false;
    bool limit_deterministic = false;
    bool finitely_ambiguous = false;
    std::optional<LdbwPartition> ldbw_partition;
};

// Appends a rejecting sink if some transition is missing.
Nbw complete(const Nbw& a);

ClassificationReport classify(const Nbw& a);

// Infinite ambiguity witness: a reachable state p and a word u such that p
// loops on u along one path, reaches g along another, and g loops on u
// through F. Decided on the three-fold product.
bool is_finitely_ambiguous(const Nbw& a);

// Q_D = forward closure of F.
LdbwPartition ldbw_partition(const Nbw& a);
// Q_D = every state from which only deterministic states are reachable.
LdbwPartition maximal_ldbw_partition(const Nbw& a);
// Builds the partition for a caller-chosen Q_D, validating it.
LdbwPartition make_ldbw_partition(const Nbw& a, const StateSet& q_d);
void validate_partition(const Nbw& a, const LdbwPartition& p);

// States reachable from `from` (inclusive).
StateSet forward_closure(const Nbw& a, const StateSet& from);
// States that are reachable from I and can reach an accepting cycle.
StateSet useful_states(const Nbw& a);

std::vector<std::string> fixture_names();
// Named automata from the figures: N_fig1, A_fig2, L_fig3, F_fig3, B_fig5,
// plus F_fig3_partial, the incomplete three-state FANBW. Throws
// std::out_of_range for unknown names.
Nbw fixture(std::string_view name);

} // namespace codag
