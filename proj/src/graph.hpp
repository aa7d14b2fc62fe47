#pragma once

#include <cstddef>
#include <vector>

namespace codag::detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Iterative Tarjan. comp[v] is the SCC id of v; ids are in reverse
// topological order.
struct Sccs {
    std::vector<std::size_t> comp;
    std::size_t count = 0;
    // True if the component has a cycle (more than one node or a self-loop).
    std::vector<bool> cyclic;
};

Sccs strongly_connected(const Adjacency& g);

std::vector<bool> reachable_from(const Adjacency& g, const std::vector<std::size_t>& roots);
Adjacency reverse(const Adjacency& g);

} // namespace codag::detail
