#include "codag/run_dag.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "codag/errors.hpp"
#include "graph.hpp"

namespace codag {

namespace {

struct Flat {
    std::vector<std::size_t> offset;
    detail::Adjacency adj;
    std::vector<bool> f;
    std::vector<std::size_t> level_of;
};

Flat flatten(const LevelGraph& g) {
    Flat fl;
    std::size_t total = 0;
    for (const auto& lv : g.levels) {
        fl.offset.push_back(total);
        total += lv.size();
    }
    fl.adj.resize(total);
    fl.f.resize(total);
    fl.level_of.resize(total);
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
        std::size_t next = g.next_level(l);
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) {
            std::size_t v = fl.offset[l] + i;
            fl.f[v] = g.levels[l][i].f;
            fl.level_of[v] = l;
            for (auto s : g.levels[l][i].succ) fl.adj[v].push_back(fl.offset[next] + s);
        }
    }
    return fl;
}

// Vertices of the alive subgraph from which no infinite path stays alive.
std::vector<bool> finite_within(const detail::Adjacency& adj, const std::vector<bool>& alive) {
    std::size_t n = adj.size();
    auto radj = detail::reverse(adj);
    std::vector<std::size_t> live_succ(n, 0);
    std::vector<bool> finite(n, false);
    std::deque<std::size_t> work;
    for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (auto w : adj[v])
            if (alive[w]) ++live_succ[v];
        if (live_succ[v] == 0) {
            finite[v] = true;
            work.push_back(v);
        }
    }
    while (!work.empty()) {
        auto v = work.front();
        work.pop_front();
        for (auto u : radj[v]) {
            if (!alive[u] || finite[u]) continue;
            if (--live_succ[u] == 0) {
                finite[u] = true;
                work.push_back(u);
            }
        }
    }
    return finite;
}

std::vector<bool> reaches_f_within(const detail::Adjacency& adj, const std::vector<bool>& alive,
                                   const std::vector<bool>& f) {
    auto radj = detail::reverse(adj);
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> work;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (alive[v] && f[v]) {
            seen[v] = true;
            work.push_back(v);
        }
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        for (auto u : radj[v])
            if (alive[u] && !seen[u]) {
                seen[u] = true;
                work.push_back(u);
            }
    }
    return seen;
}

VertexMarks unflatten(const LevelGraph& g, const Flat& fl, const std::vector<bool>& bits) {
    VertexMarks m(g.levels.size());
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) m[l].push_back(bits[fl.offset[l] + i]);
    return m;
}

// Predecessor counts of each vertex: first[l][i] for the occurrence of level
// l reached from level l-1, wrap[i] for level period_start re-entered from
// the last level.
struct PredCounts {
    std::vector<std::vector<std::size_t>> first;
    std::vector<std::size_t> wrap;
};

PredCounts predecessor_counts(const LevelGraph& g) {
    PredCounts pc;
    for (const auto& lv : g.levels) pc.first.emplace_back(lv.size(), 0);
    if (g.levels.empty()) return pc;
    pc.wrap.assign(g.levels[g.period_start].size(), 0);
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (const auto& v : g.levels[l])
            for (auto s : v.succ) {
                if (l + 1 == g.levels.size())
                    ++pc.wrap[s];
                else
                    ++pc.first[l + 1][s];
            }
    return pc;
}

} // namespace

std::size_t LevelGraph::num_vertices() const {
    std::size_t c = 0;
    for (const auto& lv : levels) c += lv.size();
    return c;
}

VertexMarks finite_vertices(const LevelGraph& g) {
    Flat fl = flatten(g);
    return unflatten(g, fl, finite_within(fl.adj, std::vector<bool>(fl.adj.size(), true)));
}

VertexMarks f_free_vertices(const LevelGraph& g) {
    Flat fl = flatten(g);
    std::vector<bool> all(fl.adj.size(), true);
    auto finite = finite_within(fl.adj, all);
    auto reach_f = reaches_f_within(fl.adj, all, fl.f);
    std::vector<bool> r(fl.adj.size());
    for (std::size_t v = 0; v < r.size(); ++v) r[v] = !finite[v] && !reach_f[v];
    return unflatten(g, fl, r);
}

DagReport analyze(const LevelGraph& g) {
    DagReport rep;
    Flat fl = flatten(g);
    std::size_t n = fl.adj.size();
    if (n == 0) return rep;

    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < g.levels[0].size(); ++i) roots.push_back(i);
    auto reach = detail::reachable_from(fl.adj, roots);
    auto sccs = detail::strongly_connected(fl.adj);
    std::vector<bool> accepting_comp(sccs.count, false);
    for (std::size_t v = 0; v < n; ++v)
        if (reach[v] && fl.f[v] && sccs.cyclic[sccs.comp[v]]) accepting_comp[sccs.comp[v]] = true;
    std::vector<std::size_t> seeds;
    for (std::size_t v = 0; v < n; ++v)
        if (accepting_comp[sccs.comp[v]]) seeds.push_back(v);
    rep.accepting = !seeds.empty();

    auto finite = finite_within(fl.adj, std::vector<bool>(n, true));

    bool recurring_f = false;
    std::size_t stable = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (!fl.f[v] || finite[v]) continue;
        if (fl.level_of[v] >= g.period_start)
            recurring_f = true;
        else
            stable = std::max(stable, fl.level_of[v] + 1);
    }
    if (!recurring_f) rep.stable_level = stable;

    for (std::size_t l = g.period_start; l < g.levels.size(); ++l) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) c += finite[fl.offset[l] + i] ? 0 : 1;
        rep.omega_branch_count_at_tail = std::max(rep.omega_branch_count_at_tail, c);
    }

    if (rep.accepting) {
        auto on_branch = detail::reachable_from(detail::reverse(fl.adj), seeds);
        auto pc = predecessor_counts(g);
        std::size_t d = 1;
        bool ok = true;
        for (std::size_t l = 1; l < g.levels.size() && ok; ++l)
            for (std::size_t i = 0; i < g.levels[l].size(); ++i) {
                if (!on_branch[fl.offset[l] + i] || pc.first[l][i] == 1) continue;
                if (l > g.period_start)
                    ok = false;
                else
                    d = std::max(d, l);
            }
        for (std::size_t i = 0; i < pc.wrap.size() && ok; ++i)
            if (on_branch[fl.offset[g.period_start] + i] && pc.wrap[i] != 1) ok = false;
        if (ok) rep.separating_level = d;
    }
    return rep;
}

DagRanks pruning_ranks(const LevelGraph& g, int max_rank) {
    Flat fl = flatten(g);
    std::size_t n = fl.adj.size();
    std::vector<int> rank(n, max_rank);
    std::vector<bool> alive(n, true);
    for (int i = 0; i <= max_rank; ++i) {
        std::vector<bool> drop;
        if (i % 2 == 0) {
            drop = finite_within(fl.adj, alive);
        } else {
            auto reach_f = reaches_f_within(fl.adj, alive, fl.f);
            drop.assign(n, false);
            for (std::size_t v = 0; v < n; ++v) drop[v] = alive[v] && !reach_f[v];
        }
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && drop[v]) {
                rank[v] = i;
                alive[v] = false;
            }
    }
    DagRanks r;
    r.max_rank = max_rank;
    r.survivors = std::find(alive.begin(), alive.end(), true) != alive.end();
    r.rank.resize(g.levels.size());
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) r.rank[l].push_back(rank[fl.offset[l] + i]);
    return r;
}

bool is_codeterministic(const LevelGraph& g) {
    if (g.levels.empty()) return true;
    auto pc = predecessor_counts(g);
    for (std::size_t l = 1; l < g.levels.size(); ++l)
        for (auto c : pc.first[l])
            if (c != 1) return false;
    for (auto c : pc.wrap)
        if (c != 1) return false;
    return true;
}

bool ranks_valid(const LevelGraph& g, const DagRanks& r) {
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
        std::size_t next = g.next_level(l);
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) {
            int k = r.rank[l][i];
            if (k < 0 || k > r.max_rank) return false;
            if (g.levels[l][i].f && k % 2 != 0) return false;
            for (auto s : g.levels[l][i].succ)
                if (r.rank[next][s] > k) return false;
        }
    }
    return true;
}

StateSet LassoDag::level_set(std::size_t l) const {
    StateSet s;
    for (State q : states[l]) s.insert(q);
    return s;
}

std::optional<std::size_t> LassoDag::find(std::size_t l, State q) const {
    auto it = std::lower_bound(states[l].begin(), states[l].end(), q);
    if (it == states[l].end() || *it != q) return std::nullopt;
    return static_cast<std::size_t>(it - states[l].begin());
}

bool LassoDag::has_edge(std::size_t l, State from, State to) const {
    auto i = find(l, from);
    auto j = find(graph.next_level(l), to);
    if (!i || !j) return false;
    const auto& succ = graph.levels[l][*i].succ;
    return std::find(succ.begin(), succ.end(), *j) != succ.end();
}

StateSet minimal_predecessors(const Nbw& a, const StateSet& level_set, Symbol sym) {
    StateSet s_min;
    StateSet covered;
    for (State q : a.order()) {
        if (!level_set.contains(q)) continue;
        const StateSet& succ = a.successors(q, sym);
        if (!(succ - covered).empty()) s_min.insert(q);
        covered |= succ;
    }
    return s_min;
}

StateSet reduced_successors(const Nbw& a, const StateSet& level_set, const StateSet& tracked, Symbol sym) {
    if (!tracked.subset_of(level_set))
        throw Error(ErrorCode::tracked_not_subset, "tracked set is not contained in the level set");
    return a.post(tracked & minimal_predecessors(a, level_set, sym), sym);
}

LassoDag lasso_dag(const Nbw& a, const LassoWord& w, DagMode mode) {
    LassoDag d;
    d.mode = mode;
    d.word = w;
    d.num_states = a.num_states();

    auto phase = [&](std::size_t l) {
        return l < w.stem.size() ? l : w.stem.size() + (l - w.stem.size()) % w.loop.size();
    };
    std::map<std::pair<StateSet, std::size_t>, std::size_t> seen;
    StateSet cur = a.initial();
    for (std::size_t l = 0;; ++l) {
        auto [it, fresh] = seen.emplace(std::make_pair(cur, phase(l)), l);
        if (!fresh) {
            d.graph.period_start = it->second;
            d.graph.period_len = l - it->second;
            break;
        }
        d.states.push_back(cur.to_vector());
        cur = a.post(cur, w.at(l));
    }

    std::size_t levels = d.states.size();
    d.graph.levels.resize(levels);
    for (std::size_t l = 0; l < levels; ++l) {
        Symbol sym = w.at(l);
        const auto& here = d.states[l];
        const auto& there = d.states[d.graph.next_level(l)];
        auto& lv = d.graph.levels[l];
        lv.resize(here.size());
        for (std::size_t i = 0; i < here.size(); ++i) lv[i].f = a.is_accepting(here[i]);
        for (std::size_t j = 0; j < there.size(); ++j) {
            State target = there[j];
            std::optional<std::size_t> best;
            for (std::size_t i = 0; i < here.size(); ++i) {
                if (!a.successors(here[i], sym).contains(target)) continue;
                if (mode == DagMode::full) {
                    lv[i].succ.push_back(j);
                } else if (!best || a.precedes(here[i], here[*best])) {
                    best = i;
                }
            }
            if (best) lv[*best].succ.push_back(j);
        }
    }
    d.finite = finite_vertices(d.graph);
    d.f_free = f_free_vertices(d.graph);
    return d;
}

DagReport analyze_dag(const LassoDag& d) { return analyze(d.graph); }

DagRanks classical_ranks(const LassoDag& d) {
    int max_rank = d.mode == DagMode::reduced ? 2 : static_cast<int>(2 * d.num_states);
    return pruning_ranks(d.graph, max_rank);
}

} // namespace codag
