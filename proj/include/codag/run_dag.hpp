#pragma once

#include <optional>
#include <vector>

#include "codag/nbw.hpp"

namespace codag {

// Finite quotient of an infinite level-structured DAG whose levels repeat
// with a period. Successor indices point into the next level; the successors
// of the last level point back into level period_start.
struct LevelGraph {
    struct Vertex {
        bool f = false;
        std::vector<std::size_t> succ;
    };
    std::vector<std::vector<Vertex>> levels;
    std::size_t period_start = 0;
    std::size_t period_len = 0;

    std::size_t next_level(std::size_t l) const { return l + 1 == levels.size() ? period_start : l + 1; }
    std::size_t num_vertices() const;
};

// Per-vertex flags, indexed [level][vertex].
using VertexMarks = std::vector<std::vector<bool>>;

struct DagReport {
    bool accepting = false;
    std::optional<std::size_t> stable_level;
    std::optional<std::size_t> separating_level;
    std::size_t omega_branch_count_at_tail = 0;
};

struct DagRanks {
    std::vector<std::vector<int>> rank;
    int max_rank = 0;
    // Whether the last graph of the pruning sequence still has vertices.
    bool survivors = false;
};

VertexMarks finite_vertices(const LevelGraph& g);
VertexMarks f_free_vertices(const LevelGraph& g);
DagReport analyze(const LevelGraph& g);
DagRanks pruning_ranks(const LevelGraph& g, int max_rank);
// Every vertex above level 0 (in every unrolled occurrence) has exactly one
// predecessor.
bool is_codeterministic(const LevelGraph& g);
// Ranks never increase along edges and are even on F-vertices.
bool ranks_valid(const LevelGraph& g, const DagRanks& r);

enum class DagMode { full, reduced };

struct LassoDag {
    DagMode mode = DagMode::full;
    LassoWord word;
    std::size_t num_states = 0;
    // states[l][i] is the state of vertex i at level l, ascending.
    std::vector<std::vector<State>> states;
    LevelGraph graph;
    VertexMarks finite;
    VertexMarks f_free;

    std::size_t period_start() const { return graph.period_start; }
    std::size_t period_len() const { return graph.period_len; }
    std::size_t num_levels() const { return states.size(); }
    StateSet level_set(std::size_t l) const;
    // Index of q at level l, if present.
    std::optional<std::size_t> find(std::size_t l, State q) const;
    bool has_edge(std::size_t l, State from, State to) const;
};

// S_min: the order-minimal predecessor inside level_set of every
// sym-successor of level_set.
StateSet minimal_predecessors(const Nbw& a, const StateSet& level_set, Symbol sym);

// delta(tracked & S_min, sym). Throws TrackedNotSubset.
StateSet reduced_successors(const Nbw& a, const StateSet& level_set, const StateSet& tracked, Symbol sym);

LassoDag lasso_dag(const Nbw& a, const LassoWord& w, DagMode mode);
DagReport analyze_dag(const LassoDag& d);
// Maximum rank 2 in reduced mode and 2n in full mode.
DagRanks classical_ranks(const LassoDag& d);

} // namespace codag
