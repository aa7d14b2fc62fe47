#include "codag/core.hpp"

#include <deque>
#include <stdexcept>

#include "codag/errors.hpp"
#include "graph.hpp"

namespace codag {

namespace {

detail::Adjacency state_graph(const Nbw& a) {
    detail::Adjacency g(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) {
        StateSet succ;
        for (Symbol s = 0; s < a.alphabet_size(); ++s) succ |= a.successors(q, s);
        for (State r : succ) g[q].push_back(r);
    }
    return g;
}

bool deterministic_state(const Nbw& a, State q) {
    for (Symbol s = 0; s < a.alphabet_size(); ++s)
        if (a.successors(q, s).size() != 1) return false;
    return true;
}

LdbwPartition build_partition(const Nbw& a, const StateSet& q_d) {
    LdbwPartition p;
    p.q_d = q_d;
    p.q_n = StateSet::range(a.num_states()) - q_d;
    std::size_t n = a.num_states(), k = a.alphabet_size();
    p.delta_n.assign(n, std::vector<StateSet>(k));
    p.delta_j.assign(n, std::vector<StateSet>(k));
    p.delta_d.assign(n, std::vector<State>(k, 0));
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < k; ++s) {
            const StateSet& succ = a.successors(q, s);
            if (q_d.contains(q)) {
                p.delta_d[q][s] = succ.min();
            } else {
                p.delta_n[q][s] = succ - q_d;
                p.delta_j[q][s] = succ & q_d;
            }
        }
    return p;
}

} // namespace

StateSet LdbwPartition::post_n(const StateSet& s, Symbol a) const {
    StateSet r;
    for (State q : s) r |= delta_n[q][a];
    return r;
}

StateSet LdbwPartition::post_j(const StateSet& s, Symbol a) const {
    StateSet r;
    for (State q : s) r |= delta_j[q][a];
    return r;
}

StateSet LdbwPartition::post_d(const StateSet& s, Symbol a) const {
    StateSet r;
    for (State q : s) r.insert(delta_d[q][a]);
    return r;
}

Nbw complete(const Nbw& a) {
    if (a.is_complete()) return a;
    Nbw r = a;
    State sink = r.add_state("sink");
    for (State q = 0; q < r.num_states(); ++q)
        for (Symbol s = 0; s < r.alphabet_size(); ++s)
            if (r.successors(q, s).empty()) r.add_transition(q, s, sink);
    return r;
}

StateSet forward_closure(const Nbw& a, const StateSet& from) {
    std::vector<std::size_t> roots(from.begin(), from.end());
    auto seen = detail::reachable_from(state_graph(a), roots);
    StateSet r;
    for (State q = 0; q < a.num_states(); ++q)
        if (seen[q]) r.insert(q);
    return r;
}

StateSet useful_states(const Nbw& a) {
    auto g = state_graph(a);
    auto sccs = detail::strongly_connected(g);
    std::vector<bool> good_comp(sccs.count, false);
    for (State q : a.accepting())
        if (sccs.cyclic[sccs.comp[q]]) good_comp[sccs.comp[q]] = true;
    std::vector<std::size_t> good;
    for (State q = 0; q < a.num_states(); ++q)
        if (good_comp[sccs.comp[q]]) good.push_back(q);
    auto co = detail::reachable_from(detail::reverse(g), good);
    StateSet reach = forward_closure(a, a.initial());
    StateSet r;
    for (State q : reach)
        if (co[q]) r.insert(q);
    return r;
}

bool is_finitely_ambiguous(const Nbw& a) {
    std::size_t n = a.num_states();
    auto g = state_graph(a);
    auto sccs = detail::strongly_connected(g);
    auto rg = detail::reverse(g);
    StateSet reach = forward_closure(a, a.initial());

    std::vector<std::vector<State>> members(sccs.count);
    std::vector<bool> has_f(sccs.count, false);
    for (State q = 0; q < n; ++q) {
        members[sccs.comp[q]].push_back(q);
        if (a.is_accepting(q)) has_f[sccs.comp[q]] = true;
    }

    for (State p : reach) {
        if (!sccs.cyclic[sccs.comp[p]]) continue;
        const auto& xs = members[sccs.comp[p]];
        auto from_p = detail::reachable_from(g, {p});
        for (State g0 = 0; g0 < n; ++g0) {
            std::size_t cg = sccs.comp[g0];
            if (!from_p[g0] || !sccs.cyclic[cg] || !has_f[cg]) continue;
            const auto& zs = members[cg];
            auto to_g = detail::reachable_from(rg, {g0});
            std::vector<State> ys;
            for (State y = 0; y < n; ++y)
                if (from_p[y] && to_g[y]) ys.push_back(y);

            std::vector<std::size_t> xi(n, SIZE_MAX), yi(n, SIZE_MAX), zi(n, SIZE_MAX);
            for (std::size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = i;
            for (std::size_t i = 0; i < ys.size(); ++i) yi[ys[i]] = i;
            for (std::size_t i = 0; i < zs.size(); ++i) zi[zs[i]] = i;
            auto id = [&](State x, State y, State z) {
                return (xi[x] * ys.size() + yi[y]) * zs.size() + zi[z];
            };
            // seen[node] is a bitmask over the four flag combinations
            // (bit0 = paths of x and y differ somewhere, bit1 = z met F).
            std::vector<std::uint8_t> seen(xs.size() * ys.size() * zs.size(), 0);
            struct Node {
                State x, y, z;
                unsigned flags;
            };
            std::deque<Node> work;
            seen[id(p, p, g0)] |= 1U;
            work.push_back({p, p, g0, 0});
            while (!work.empty()) {
                Node v = work.front();
                work.pop_front();
                for (Symbol s = 0; s < a.alphabet_size(); ++s)
                    for (State x : a.successors(v.x, s)) {
                        if (xi[x] == SIZE_MAX) continue;
                        for (State y : a.successors(v.y, s)) {
                            if (yi[y] == SIZE_MAX) continue;
                            for (State z : a.successors(v.z, s)) {
                                if (zi[z] == SIZE_MAX) continue;
                                unsigned f = v.flags | (x != y ? 1U : 0U) |
                                             (a.is_accepting(z) ? 2U : 0U);
                                if (f == 3 && x == p && y == g0 && z == g0) return false;
                                auto k = id(x, y, z);
                                if (seen[k] & (1U << f)) continue;
                                seen[k] |= static_cast<std::uint8_t>(1U << f);
                                work.push_back({x, y, z, f});
                            }
                        }
                    }
            }
        }
    }
    return true;
}

ClassificationReport classify(const Nbw& a) {
    ClassificationReport r;
    r.complete = a.is_complete();
    r.deterministic = a.initial().size() == 1;
    for (State q = 0; q < a.num_states() && r.deterministic; ++q)
        r.deterministic = deterministic_state(a, q);

    r.reverse_deterministic = true;
    for (Symbol s = 0; s < a.alphabet_size() && r.reverse_deterministic; ++s) {
        StateSet hit;
        for (State q = 0; q < a.num_states(); ++q) {
            if (hit.intersects(a.successors(q, s))) {
                r.reverse_deterministic = false;
                break;
            }
            hit |= a.successors(q, s);
        }
    }

    try {
        r.ldbw_partition = ldbw_partition(a);
        r.limit_deterministic = true;
    } catch (const Error&) {
        r.limit_deterministic = false;
    }
    r.finitely_ambiguous = is_finitely_ambiguous(a);
    return r;
}

LdbwPartition ldbw_partition(const Nbw& a) {
    StateSet q_d = forward_closure(a, a.accepting());
    for (State q : q_d)
        if (!deterministic_state(a, q))
            throw Error(ErrorCode::not_limit_deterministic,
                        "state " + a.state_name(q) + " is reachable from F and not deterministic");
    return build_partition(a, q_d);
}

LdbwPartition maximal_ldbw_partition(const Nbw& a) {
    std::vector<std::size_t> bad;
    for (State q = 0; q < a.num_states(); ++q)
        if (!deterministic_state(a, q)) bad.push_back(q);
    auto reaches_bad = detail::reachable_from(detail::reverse(state_graph(a)), bad);
    StateSet q_d;
    for (State q = 0; q < a.num_states(); ++q)
        if (!reaches_bad[q]) q_d.insert(q);
    if (!a.accepting().subset_of(q_d))
        throw Error(ErrorCode::not_limit_deterministic, "an accepting state reaches a nondeterministic state");
    return build_partition(a, q_d);
}

LdbwPartition make_ldbw_partition(const Nbw& a, const StateSet& q_d) {
    LdbwPartition p = build_partition(a, q_d);
    validate_partition(a, p);
    return p;
}

void validate_partition(const Nbw& a, const LdbwPartition& p) {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::invalid_partition, why); };
    StateSet all = StateSet::range(a.num_states());
    if ((p.q_n | p.q_d) != all || p.q_n.intersects(p.q_d)) fail("Q_N and Q_D do not partition Q");
    if (!a.accepting().subset_of(p.q_d)) fail("F is not contained in Q_D");
    if (p.delta_n.size() != a.num_states() || p.delta_j.size() != a.num_states() ||
        p.delta_d.size() != a.num_states())
        fail("transition tables have the wrong size");
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet_size(); ++s) {
            const StateSet& succ = a.successors(q, s);
            if (p.q_d.contains(q)) {
                if (succ.size() != 1) fail("state " + a.state_name(q) + " in Q_D is not deterministic");
                if (!p.q_d.contains(succ.min())) fail("Q_D is not closed under transitions");
                if (p.delta_d[q][s] != succ.min()) fail("delta_D disagrees with delta");
            } else if (p.delta_n[q][s] != (succ & p.q_n) || p.delta_j[q][s] != (succ & p.q_d)) {
                fail("delta_N/delta_J disagree with delta");
            }
        }
}

std::vector<std::string> fixture_names() {
    return {"N_fig1", "A_fig2", "L_fig3", "F_fig3", "B_fig5", "F_fig3_partial"};
}

namespace {

struct Edge {
    State from;
    char sym;
    State to;
};

Nbw build(const char* prefix, std::size_t n, std::vector<std::string> alphabet, StateSet init,
          StateSet acc, const std::vector<Edge>& edges) {
    Nbw a(n, std::move(alphabet));
    for (State q = 0; q < n; ++q) a.set_state_name(q, prefix + std::to_string(q));
    for (State q : init) a.set_initial(q);
    for (State q : acc) a.set_accepting(q);
    for (const auto& e : edges) a.add_transition(e.from, *a.symbol(std::string(1, e.sym)), e.to);
    return a;
}

} // namespace

Nbw fixture(std::string_view name) {
    if (name == "N_fig1")
        return build("q", 4, {"a", "b"}, {0}, {1},
                     {{0, 'a', 0}, {0, 'b', 1}, {0, 'b', 2}, {1, 'a', 3}, {1, 'b', 1}, {2, 'a', 3},
                      {2, 'b', 1}, {2, 'b', 2}, {3, 'a', 3}, {3, 'b', 3}});
    if (name == "A_fig2")
        return build("q", 4, {"a", "b"}, {0}, {1},
                     {{0, 'a', 0}, {0, 'b', 1}, {0, 'b', 2}, {1, 'a', 3}, {1, 'b', 1}, {2, 'a', 3},
                      {2, 'b', 1}, {3, 'a', 3}, {3, 'b', 3}});
    if (name == "L_fig3")
        return build("l", 3, {"a", "b"}, {0}, {1},
                     {{0, 'a', 0}, {0, 'b', 0}, {0, 'b', 1}, {1, 'b', 1}, {1, 'a', 2}, {2, 'a', 2},
                      {2, 'b', 2}});
    if (name == "F_fig3")
        return build("f", 5, {"a", "b"}, {0}, {1},
                     {{0, 'a', 0}, {0, 'b', 1}, {0, 'b', 2}, {1, 'a', 3}, {1, 'b', 1}, {2, 'a', 4},
                      {2, 'b', 1}, {3, 'a', 3}, {3, 'a', 4}, {3, 'b', 3}, {4, 'a', 4}, {4, 'b', 4}});
    if (name == "B_fig5")
        return build("q", 3, {"a"}, {0}, {1}, {{0, 'a', 0}, {0, 'a', 1}, {1, 'a', 2}, {2, 'a', 2}});
    if (name == "F_fig3_partial")
        return build("f", 3, {"a", "b"}, {0}, {0},
                     {{0, 'a', 1}, {0, 'a', 2}, {0, 'b', 1}, {1, 'b', 2}, {2, 'b', 0}});
    throw std::out_of_range("unknown fixture: " + std::string(name));
}

} // namespace codag
