#include "codag/lang_tools.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_map>

#include "codag/core.hpp"
#include "codag/errors.hpp"
#include "codag/ldbw_complement.hpp"
#include "codag/rank_complement.hpp"
#include "codag/slice_complement.hpp"
#include "graph.hpp"

namespace codag {

bool member(const Nbw& a, const LassoWord& w) {
    std::size_t len = w.length();
    auto next_pos = [&](std::size_t i) { return i + 1 == len ? w.stem.size() : i + 1; };
    std::vector<std::size_t> id(a.num_states() * len, SIZE_MAX);
    std::vector<std::pair<State, std::size_t>> nodes;
    detail::Adjacency adj;
    auto intern = [&](State q, std::size_t i) {
        std::size_t& slot = id[static_cast<std::size_t>(q) * len + i];
        if (slot == SIZE_MAX) {
            slot = nodes.size();
            nodes.emplace_back(q, i);
            adj.emplace_back();
        }
        return slot;
    };
    for (State q : a.initial()) intern(q, 0);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        auto [q, i] = nodes[v];
        std::size_t j = next_pos(i);
        for (State r : a.successors(q, w.at(i))) {
            std::size_t t = intern(r, j);
            adj[v].push_back(t);
        }
    }
    auto sccs = detail::strongly_connected(adj);
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (a.is_accepting(nodes[v].first) && sccs.cyclic[sccs.comp[v]]) return true;
    return false;
}

namespace {

// Shortest word leading from `from` to `target`; with nonempty set, at least
// one letter long.
std::optional<std::vector<Symbol>> shortest_word(const Nbw& a, const StateSet& from, State target, bool nonempty) {
    std::size_t n = a.num_states();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<std::pair<State, Symbol>> parent(n);
    std::deque<State> work;
    auto expand = [&](State q, std::size_t d) {
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
            for (State r : a.successors(q, s))
                if (dist[r] == SIZE_MAX) {
                    dist[r] = d + 1;
                    parent[r] = {q, s};
                    work.push_back(r);
                }
    };
    if (nonempty) {
        for (State q : from) expand(q, 0);
    } else {
        for (State q : from) {
            dist[q] = 0;
            work.push_back(q);
        }
    }
    while (!work.empty() && dist[target] == SIZE_MAX) {
        State q = work.front();
        work.pop_front();
        expand(q, dist[q]);
    }
    if (dist[target] == SIZE_MAX) return std::nullopt;
    std::vector<Symbol> word;
    State cur = target;
    for (std::size_t k = dist[target]; k > 0; --k) {
        word.push_back(parent[cur].second);
        cur = parent[cur].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace

std::optional<LassoWord> is_empty(const Nbw& a) {
    std::size_t n = a.num_states();
    detail::Adjacency g(n);
    for (State q = 0; q < n; ++q) {
        StateSet succ;
        for (Symbol s = 0; s < a.alphabet_size(); ++s) succ |= a.successors(q, s);
        for (State r : succ) g[q].push_back(r);
    }
    auto reach = detail::reachable_from(g, std::vector<std::size_t>(a.initial().begin(), a.initial().end()));
    auto sccs = detail::strongly_connected(g);
    for (State f : a.accepting()) {
        if (!reach[f] || !sccs.cyclic[sccs.comp[f]]) continue;
        LassoWord w;
        w.stem = *shortest_word(a, a.initial(), f, false);
        w.loop = *shortest_word(a, StateSet{f}, f, true);
        return canonical(w);
    }
    return std::nullopt;
}

Nbw intersect(const Nbw& a, const Nbw& b) {
    std::vector<Symbol> map_b(a.alphabet_size());
    if (a.alphabet_size() != b.alphabet_size())
        throw Error(ErrorCode::alphabet_mismatch, "alphabets differ in size");
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        auto t = b.symbol(a.alphabet()[s]);
        if (!t) throw Error(ErrorCode::alphabet_mismatch, "symbol " + a.alphabet()[s] + " missing");
        map_b[s] = *t;
    }
    struct Key {
        State p, q;
        int copy;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return hash_combine(hash_combine(k.p, k.q), static_cast<std::size_t>(k.copy));
        }
    };
    std::unordered_map<Key, State, KeyHash> index;
    std::vector<Key> keys;
    Nbw r(0, a.alphabet());
    auto intern = [&](Key k) {
        auto [it, fresh] = index.emplace(k, static_cast<State>(keys.size()));
        if (fresh) {
            keys.push_back(k);
            State s = r.add_state(a.state_name(k.p) + "|" + b.state_name(k.q) + "|" + std::to_string(k.copy));
            if (k.copy == 1 && b.is_accepting(k.q)) r.set_accepting(s);
        }
        return it->second;
    };
    for (State p : a.initial())
        for (State q : b.initial()) r.set_initial(intern({p, q, 0}));
    for (std::size_t i = 0; i < keys.size(); ++i) {
        Key k = keys[i];
        int copy = k.copy == 0 ? (a.is_accepting(k.p) ? 1 : 0) : (b.is_accepting(k.q) ? 0 : 1);
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
            for (State p : a.successors(k.p, s))
                for (State q : b.successors(k.q, map_b[s])) r.add_transition(static_cast<State>(i), s, intern({p, q, copy}));
    }
    return complete(r);
}

const char* algorithm_name(Algorithm algo) {
    switch (algo) {
    case Algorithm::automatic: return "auto";
    case Algorithm::rkc: return "rkc";
    case Algorithm::rkc_fa: return "rkc-fa";
    case Algorithm::slc_fa: return "slc-fa";
    case Algorithm::nsbc: return "nsbc";
    case Algorithm::disambiguate_slc: return "dslc";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    for (auto algo : {Algorithm::automatic, Algorithm::rkc, Algorithm::rkc_fa, Algorithm::slc_fa, Algorithm::nsbc,
                      Algorithm::disambiguate_slc})
        if (name == algorithm_name(algo)) return algo;
    return std::nullopt;
}

Algorithm resolve_algorithm(const Nbw& b, Algorithm algo) {
    if (algo != Algorithm::automatic) return algo;
    auto report = classify(complete(b));
    if (report.limit_deterministic) return Algorithm::nsbc;
    if (report.finitely_ambiguous) return Algorithm::slc_fa;
    return Algorithm::disambiguate_slc;
}

Nbw complement(const Nbw& b, Algorithm algo) {
    switch (resolve_algorithm(b, algo)) {
    case Algorithm::rkc: return rkc_complement(b, RankMode::general).automaton;
    case Algorithm::rkc_fa: return rkc_complement(b, RankMode::fa).automaton;
    case Algorithm::slc_fa: return slc_complement_fa(b).automaton;
    case Algorithm::nsbc: return nsbc_complement(b).automaton;
    case Algorithm::disambiguate_slc: return slc_complement_fa(disambiguate(b)).automaton;
    case Algorithm::automatic: break;
    }
    return {};
}

CheckReport contains(const Nbw& a, const Nbw& b, Algorithm algo) {
    Nbw c;
    try {
        c = complement(b, algo);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::not_finitely_ambiguous || e.code() == ErrorCode::not_limit_deterministic)
            throw Error(ErrorCode::incompatible_algorithm,
                        std::string(algorithm_name(algo)) + " does not apply: " + e.what());
        throw;
    }
    CheckReport rep;
    auto w = is_empty(intersect(a, c));
    if (w) {
        rep.passed = false;
        rep.counterexample = w;
        rep.member_a = member(a, *w);
        rep.member_b = member(b, *w);
    }
    return rep;
}

LassoWord canonical(const LassoWord& w) {
    LassoWord r = w;
    std::size_t n = r.loop.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = r.loop[i] == r.loop[i - p];
        if (periodic) {
            r.loop.resize(p);
            break;
        }
    }
    while (!r.stem.empty() && r.stem.back() == r.loop.back()) {
        r.stem.pop_back();
        std::rotate(r.loop.rbegin(), r.loop.rbegin() + 1, r.loop.rend());
    }
    return r;
}

std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t max_stem, std::size_t max_loop) {
    auto words_of = [&](std::size_t len) {
        std::vector<std::vector<Symbol>> out;
        std::vector<Symbol> cur(len, 0);
        for (;;) {
            out.push_back(cur);
            std::size_t i = len;
            while (i > 0 && ++cur[i - 1] == alphabet_size) cur[--i] = 0;
            if (i == 0) return out;
        }
    };
    std::set<std::tuple<std::size_t, std::vector<Symbol>, std::vector<Symbol>>> found;
    for (std::size_t ls = 0; ls <= max_stem; ++ls)
        for (const auto& u : words_of(ls))
            for (std::size_t lv = 1; lv <= max_loop; ++lv)
                for (const auto& v : words_of(lv)) {
                    LassoWord c = canonical({u, v});
                    found.emplace(c.length(), c.stem, c.loop);
                }
    std::vector<LassoWord> out;
    for (const auto& [len, u, v] : found) out.push_back({u, v});
    return out;
}

CheckReport complement_check(const Nbw& a, const Nbw& c, std::size_t max_stem, std::size_t max_loop) {
    CheckReport rep;
    for (const auto& w : enumerate_lassos(a.alphabet_size(), max_stem, max_loop)) {
        ++rep.lassos_tested;
        bool ma = member(a, w), mc = member(c, w);
        if (ma == mc) {
            rep.passed = false;
            rep.counterexample = w;
            rep.member_a = ma;
            rep.member_b = mc;
            break;
        }
    }
    return rep;
}

namespace {

std::vector<std::string> letters(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

Nbw random_any(std::size_t n, std::size_t k, double density, double acc_fraction, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    Nbw a(n, letters(k));
    a.set_initial(0);
    for (State q = 0; q < n; ++q) {
        if (coin(rng) < acc_fraction) a.set_accepting(q);
        for (Symbol s = 0; s < k; ++s) {
            for (State r = 0; r < n; ++r)
                if (coin(rng) < density) a.add_transition(q, s, r);
            if (a.successors(q, s).empty()) a.add_transition(q, s, pick(rng));
        }
    }
    return a;
}

Nbw random_ldbw(std::size_t n, std::size_t k, double density, double acc_fraction, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> split_pick(0, n - 1);
    std::size_t split = split_pick(rng);  // states >= split are deterministic
    std::uniform_int_distribution<State> pick_any(0, static_cast<State>(n - 1));
    std::uniform_int_distribution<State> pick_d(static_cast<State>(split), static_cast<State>(n - 1));
    Nbw a(n, letters(k));
    a.set_initial(0);
    for (State q = 0; q < n; ++q) {
        if (q >= split && coin(rng) < acc_fraction) a.set_accepting(q);
        for (Symbol s = 0; s < k; ++s) {
            if (q >= split) {
                a.add_transition(q, s, pick_d(rng));
                continue;
            }
            for (State r = 0; r < n; ++r)
                if (coin(rng) < density) a.add_transition(q, s, r);
            if (a.successors(q, s).empty()) a.add_transition(q, s, pick_any(rng));
        }
    }
    return a;
}

} // namespace

Nbw random_nbw(std::size_t n, std::size_t alphabet_size, double density, double acc_fraction, std::uint64_t seed,
               Shape shape) {
    if (n == 0 || alphabet_size == 0 || !(density > 0.0 && density <= 1.0) || acc_fraction < 0.0 ||
        acc_fraction > 1.0)
        throw std::invalid_argument("random_nbw: parameters out of range");
    std::mt19937_64 rng(seed);
    switch (shape) {
    case Shape::any: return random_any(n, alphabet_size, density, acc_fraction, rng);
    case Shape::ldbw: return random_ldbw(n, alphabet_size, density, acc_fraction, rng);
    case Shape::fanbw:
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Nbw a = random_any(n, alphabet_size, density, acc_fraction, rng);
            if (is_finitely_ambiguous(a)) return a;
        }
        throw Error(ErrorCode::shape_unsatisfiable, "no finitely ambiguous automaton within the retry budget");
    }
    return {};
}

} // namespace codag
