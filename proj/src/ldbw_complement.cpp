#include "codag/ldbw_complement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace codag {

namespace {

// One level of the DAG: deterministic vertices first, in the automaton's
// order, then the nondeterministic vertex if there is one.
struct Level {
    std::vector<LdbwVertex> vertices;
};

std::vector<State> ordered(const Nbw& a, const StateSet& s) {
    std::vector<State> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), [&](State x, State y) { return a.precedes(x, y); });
    return v;
}

Level first_level(const Nbw& a, const LdbwPartition& p) {
    Level lv;
    std::int64_t k = 0;
    for (State q : ordered(a, a.initial() & p.q_d)) lv.vertices.push_back({false, {q}, q, ++k});
    StateSet s = a.initial() & p.q_n;
    if (!s.empty()) lv.vertices.push_back({true, s, 0, k + 1});
    return lv;
}

struct Step {
    Level next;
    // Successor indices into next.vertices for every vertex of the source.
    std::vector<std::vector<std::size_t>> succ;
};

Step step(const Nbw& a, const LdbwPartition& p, const Level& cur, Symbol sym) {
    Step st;
    st.succ.resize(cur.vertices.size());
    std::map<State, std::int64_t> best;
    const LdbwVertex* nv = nullptr;
    for (const auto& v : cur.vertices) {
        if (v.nondeterministic) {
            nv = &v;
            continue;
        }
        State t = p.delta_d[v.state][sym];
        auto it = best.find(t);
        if (it == best.end() || v.priority < it->second) best[t] = v.priority;
    }
    StateSet d_next;
    for (const auto& [q, pr] : best) d_next.insert(q);

    std::vector<State> jumps;
    StateSet n_next;
    if (nv) {
        jumps = ordered(a, p.post_j(nv->states, sym) - d_next);
        n_next = p.post_n(nv->states, sym);
    }
    std::vector<LdbwVertex> dv;
    for (State q : d_next) dv.push_back({false, {q}, q, best[q]});
    for (std::size_t k = 0; k < jumps.size(); ++k)
        dv.push_back({false, {jumps[k]}, jumps[k], nv->priority + static_cast<std::int64_t>(k)});
    std::sort(dv.begin(), dv.end(), [&](const LdbwVertex& x, const LdbwVertex& y) { return a.precedes(x.state, y.state); });
    st.next.vertices = dv;
    if (!n_next.empty())
        st.next.vertices.push_back({true, n_next, 0, nv->priority + static_cast<std::int64_t>(jumps.size())});

    auto index_of_d = [&](State q) {
        for (std::size_t i = 0; i < st.next.vertices.size(); ++i)
            if (!st.next.vertices[i].nondeterministic && st.next.vertices[i].state == q) return i;
        return st.next.vertices.size();
    };
    for (std::size_t i = 0; i < cur.vertices.size(); ++i) {
        const auto& v = cur.vertices[i];
        if (v.nondeterministic) {
            for (State q : jumps) st.succ[i].push_back(index_of_d(q));
            if (!n_next.empty()) st.succ[i].push_back(st.next.vertices.size() - 1);
        } else {
            State t = p.delta_d[v.state][sym];
            if (best[t] == v.priority) st.succ[i].push_back(index_of_d(t));
        }
    }
    for (auto& s : st.succ) std::sort(s.begin(), s.end());
    return st;
}

// Level contents with priorities replaced by their rank within the level.
using LevelKey = std::vector<std::tuple<bool, StateSet, std::size_t>>;

LevelKey normalized(const Level& lv) {
    std::vector<std::int64_t> prios;
    for (const auto& v : lv.vertices) prios.push_back(v.priority);
    std::sort(prios.begin(), prios.end());
    LevelKey key;
    for (const auto& v : lv.vertices) {
        auto rank = static_cast<std::size_t>(std::lower_bound(prios.begin(), prios.end(), v.priority) - prios.begin());
        key.emplace_back(v.nondeterministic, v.states, rank);
    }
    return key;
}

} // namespace

std::optional<std::size_t> LdbwDag::find_d(std::size_t l, State q) const {
    for (std::size_t i = 0; i < vertices[l].size(); ++i)
        if (!vertices[l][i].nondeterministic && vertices[l][i].state == q) return i;
    return std::nullopt;
}

std::optional<std::size_t> LdbwDag::find_n(std::size_t l) const {
    for (std::size_t i = 0; i < vertices[l].size(); ++i)
        if (vertices[l][i].nondeterministic) return i;
    return std::nullopt;
}

LdbwDag ldbw_codet_dag(const Nbw& a, const LdbwPartition& p, const LassoWord& w) {
    validate_partition(a, p);
    LdbwDag d;
    d.word = w;
    auto phase = [&](std::size_t l) {
        return l < w.stem.size() ? l : w.stem.size() + (l - w.stem.size()) % w.loop.size();
    };
    using Key = std::pair<LevelKey, std::size_t>;
    std::map<Key, std::size_t> seen;
    std::vector<Level> levels;
    std::vector<std::vector<std::vector<std::size_t>>> succ;
    Level cur = first_level(a, p);
    for (std::size_t l = 0;; ++l) {
        auto [it, fresh] = seen.emplace(Key{normalized(cur), phase(l)}, l);
        if (!fresh) {
            d.graph.period_start = it->second;
            d.graph.period_len = l - it->second;
            break;
        }
        levels.push_back(cur);
        Step st = step(a, p, cur, w.at(l));
        succ.push_back(std::move(st.succ));
        cur = std::move(st.next);
    }
    // The successors of the last level were computed against a level whose
    // vertices appear in the same positions as at period_start.
    d.graph.levels.resize(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l) {
        d.vertices.push_back(levels[l].vertices);
        for (std::size_t i = 0; i < levels[l].vertices.size(); ++i) {
            LevelGraph::Vertex v;
            const auto& lv = levels[l].vertices[i];
            v.f = !lv.nondeterministic && a.is_accepting(lv.state);
            v.succ = succ[l][i];
            d.graph.levels[l].push_back(std::move(v));
        }
    }
    return d;
}

DagReport analyze_dag(const LdbwDag& d) { return analyze(d.graph); }

std::size_t NsbcMacrostateHash::operator()(const NsbcMacrostate& m) const {
    std::size_t h = m.accepting_phase ? 0x7ac3 : 0;
    for (const StateSet* s : {&m.n, &m.s, &m.b, &m.c}) h = hash_combine(h, s->hash());
    return h;
}

namespace {

NsbcMacrostate step_accepting(const Nbw& a, const LdbwPartition& p, const NsbcMacrostate& m, Symbol sym) {
    const StateSet& f = a.accepting();
    NsbcMacrostate r;
    r.accepting_phase = true;
    r.n = p.post_n(m.n, sym);
    StateSet s_succ = p.post_d(m.s, sym);
    r.s = s_succ - f;
    StateSet fresh = p.post_d(m.c, sym) | p.post_j(m.n, sym) | (s_succ & f);
    if (!m.b.empty()) {
        r.b = p.post_d(m.b, sym) - r.s;
        r.c = (fresh - r.s) - r.b;
    } else {
        r.b = fresh - r.s;
    }
    return r;
}

} // namespace

std::vector<NsbcMacrostate> nsbc_successors(const Nbw& a, const LdbwPartition& p, const NsbcMacrostate& m,
                                            Symbol sym) {
    if (m.accepting_phase) return {step_accepting(a, p, m, sym)};
    NsbcMacrostate stay;
    stay.n = a.post(m.n, sym);
    const StateSet& f = a.accepting();
    NsbcMacrostate pseudo{true, m.n & p.q_n, (m.n & p.q_d) - f, m.n & f, {}};
    return {stay, step_accepting(a, p, pseudo, sym)};
}

NsbcComplement nsbc_complement(const Nbw& a, const LdbwPartition& p) {
    validate_partition(a, p);
    auto size = [](const StateSet& s) { return static_cast<long double>(s.size()); };
    long double bound = std::pow(2.0L, static_cast<long double>(a.num_states())) +
                        std::pow(2.0L, size(p.q_n)) * std::pow(3.0L, size(a.accepting())) *
                            std::pow(4.0L, size(p.q_d - a.accepting()));
    NsbcMacrostate init;
    init.n = a.initial();
    auto succ = [&](const NsbcMacrostate& m, Symbol sym) { return nsbc_successors(a, p, m, sym); };
    auto accepting = [](const NsbcMacrostate& m) { return m.accepting_phase && m.b.empty(); };
    auto label = [&](const NsbcMacrostate& m) { return to_string(a, m); };
    return detail::explore<NsbcMacrostate, NsbcMacrostateHash>(a.alphabet(), init, succ, accepting, label, bound,
                                                               "nsbc");
}

NsbcComplement nsbc_complement(const Nbw& input) {
    Nbw a = complete(input);
    return nsbc_complement(a, ldbw_partition(a));
}

std::string to_string(const Nbw& a, const NsbcMacrostate& m) {
    if (!m.accepting_phase) return detail::format_set(a, m.n);
    return "(" + detail::format_set(a, m.n) + "," + detail::format_set(a, m.s) + "," +
           detail::format_set(a, m.b) + "," + detail::format_set(a, m.c) + ")";
}

} // namespace codag
