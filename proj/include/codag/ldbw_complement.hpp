#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codag/complement.hpp"
#include "codag/core.hpp"
#include "codag/run_dag.hpp"

namespace codag {

struct LdbwVertex {
    bool nondeterministic = false;
    // Q_N states of the nondeterministic vertex, or the single Q_D state.
    StateSet states;
    State state = 0;
    std::int64_t priority = 0;
};

struct LdbwDag {
    LassoWord word;
    std::vector<std::vector<LdbwVertex>> vertices;
    LevelGraph graph;

    std::size_t period_start() const { return graph.period_start; }
    std::size_t period_len() const { return graph.period_len; }
    std::size_t num_levels() const { return vertices.size(); }
    // Index of the deterministic vertex for q at level l.
    std::optional<std::size_t> find_d(std::size_t l, State q) const;
    std::optional<std::size_t> find_n(std::size_t l) const;
};

// Deterministic states are ordered before nondeterministic ones, keeping the
// automaton's order within each group. Priorities follow the definition
// literally; they are unbounded in general, so the period is detected on the
// relative order of priorities at each level.
LdbwDag ldbw_codet_dag(const Nbw& a, const LdbwPartition& p, const LassoWord& w);
DagReport analyze_dag(const LdbwDag& d);

// Initial phase holds R in n; the accepting phase holds (n, s, b, c).
struct NsbcMacrostate {
    bool accepting_phase = false;
    StateSet n;
    StateSet s;
    StateSet b;
    StateSet c;

    bool operator==(const NsbcMacrostate&) const = default;
};

struct NsbcMacrostateHash {
    std::size_t operator()(const NsbcMacrostate& m) const;
};

using NsbcComplement = Complement<NsbcMacrostate, NsbcMacrostateHash>;

std::vector<NsbcMacrostate> nsbc_successors(const Nbw& a, const LdbwPartition& p, const NsbcMacrostate& m,
                                            Symbol sym);
// Throws InvalidPartition when p does not fit a (a must be complete).
NsbcComplement nsbc_complement(const Nbw& a, const LdbwPartition& p);
// Uses the minimal partition; throws NotLimitDeterministic.
NsbcComplement nsbc_complement(const Nbw& a);

std::string to_string(const Nbw& a, const NsbcMacrostate& m);

} // namespace codag
