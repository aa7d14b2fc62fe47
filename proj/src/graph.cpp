#include "graph.hpp"

#include <algorithm>
#include <limits>

namespace codag::detail {

Sccs strongly_connected(const Adjacency& g) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t n = g.size();
    Sccs r;
    r.comp.assign(n, none);
    std::vector<std::size_t> index(n, none), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> call;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != none) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i == 0 && index[v] == none) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (i < g[v].size()) {
                std::size_t w = g[v][i++];
                if (index[w] == none) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t size = 0;
                bool self_loop = false;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    r.comp[w] = r.count;
                    ++size;
                } while (w != v);
                for (std::size_t x : g[v]) self_loop |= (x == v);
                r.cyclic.push_back(size > 1 || self_loop);
                ++r.count;
            }
            std::size_t done = v;
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return r;
}

std::vector<bool> reachable_from(const Adjacency& g, const std::vector<std::size_t>& roots) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> work;
    for (auto r : roots)
        if (!seen[r]) {
            seen[r] = true;
            work.push_back(r);
        }
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        for (auto w : g[v])
            if (!seen[w]) {
                seen[w] = true;
                work.push_back(w);
            }
    }
    return seen;
}

Adjacency reverse(const Adjacency& g) {
    Adjacency r(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g[v]) r[w].push_back(v);
    return r;
}

} // namespace codag::detail
