#include "codag/slice_complement.hpp"

#include <cmath>
#include <deque>
#include <map>

#include "codag/core.hpp"
#include "codag/run_dag.hpp"

namespace codag {

bool slice_well_formed(const Slice& s) {
    StateSet seen;
    for (const auto& block : s) {
        if (block.empty() || block.intersects(seen)) return false;
        seen |= block;
    }
    return true;
}

Slice initial_slice(const Nbw& a) {
    Slice s;
    StateSet plain = a.initial() - a.accepting();
    StateSet acc = a.initial() & a.accepting();
    if (!plain.empty()) s.push_back(plain);
    if (!acc.empty()) s.push_back(acc);
    return s;
}

namespace {

// Children of every block before deduplication: block j yields entries 2j
// (non-accepting) and 2j+1 (accepting).
std::vector<StateSet> slice_children(const Nbw& a, const Slice& s, Symbol sym) {
    std::vector<StateSet> raw;
    for (const auto& block : s) {
        StateSet succ = a.post(block, sym);
        raw.push_back(succ - a.accepting());
        raw.push_back(succ & a.accepting());
    }
    StateSet later;
    for (std::size_t i = raw.size(); i-- > 0;) {
        raw[i] -= later;
        later |= raw[i];
    }
    return raw;
}

} // namespace

Slice slice_successor(const Nbw& a, const Slice& s, Symbol sym) {
    Slice r;
    for (auto& b : slice_children(a, s, sym))
        if (!b.empty()) r.push_back(std::move(b));
    return r;
}

Nbw disambiguate(const Nbw& input) {
    Nbw a = complete(input);
    using Key = std::pair<Slice, std::size_t>;
    std::map<Key, State> index;
    std::vector<Key> keys;
    Nbw r(0, a.alphabet());

    auto intern = [&](const Slice& s, std::size_t j) {
        Key k{s, j};
        auto [it, fresh] = index.emplace(k, static_cast<State>(keys.size()));
        if (fresh) {
            keys.push_back(k);
            State q = r.add_state(to_string(a, s) + "@" + std::to_string(j + 1));
            if (s[j].subset_of(a.accepting())) r.set_accepting(q);
        }
        return it->second;
    };

    Slice init = initial_slice(a);
    for (std::size_t j = 0; j < init.size(); ++j) r.set_initial(intern(init, j));
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (Symbol sym = 0; sym < a.alphabet_size(); ++sym) {
            Key cur = keys[i];
            auto raw = slice_children(a, cur.first, sym);
            Slice next;
            std::vector<std::size_t> new_index(raw.size());
            for (std::size_t k = 0; k < raw.size(); ++k) {
                new_index[k] = next.size();
                if (!raw[k].empty()) next.push_back(raw[k]);
            }
            for (std::size_t k : {2 * cur.second, 2 * cur.second + 1})
                if (!raw[k].empty()) r.add_transition(static_cast<State>(i), sym, intern(next, new_index[k]));
        }
    }
    return complete(r);
}

std::size_t SliceMacrostateHash::operator()(const SliceMacrostate& m) const {
    std::size_t h = m.accepting_phase ? 0x51ed27 : 0;
    h = hash_combine(h, m.n.hash());
    h = hash_combine(h, m.c.hash());
    return hash_combine(h, m.b.hash());
}

namespace {

SliceMacrostate step_accepting(const Nbw& a, const SliceMacrostate& m, Symbol sym) {
    SliceMacrostate r;
    r.accepting_phase = true;
    StateSet s_min = minimal_predecessors(a, m.n, sym);
    r.n = a.post(m.n & s_min, sym);
    r.c = a.post(m.c & s_min, sym) | (r.n & a.accepting());
    r.b = m.b.empty() ? r.c : a.post(m.b & s_min, sym);
    return r;
}

} // namespace

std::vector<SliceMacrostate> slc_successors(const Nbw& a, const SliceMacrostate& m, Symbol sym) {
    if (m.accepting_phase) return {step_accepting(a, m, sym)};
    SliceMacrostate stay;
    stay.n = a.post(m.n, sym);
    SliceMacrostate pseudo{true, m.n, m.n & a.accepting(), m.n & a.accepting()};
    return {stay, step_accepting(a, pseudo, sym)};
}

SliceComplement slc_complement_fa(const Nbw& input) {
    Nbw a = complete(input);
    if (!is_finitely_ambiguous(a))
        throw Error(ErrorCode::not_finitely_ambiguous, "slice-based FA complement needs a finitely ambiguous input");
    long double n = static_cast<long double>(a.num_states());
    long double bound = std::pow(2.0L, n) + std::pow(4.0L, n);
    SliceMacrostate init;
    init.n = a.initial();
    auto succ = [&](const SliceMacrostate& m, Symbol sym) { return slc_successors(a, m, sym); };
    auto accepting = [](const SliceMacrostate& m) { return m.accepting_phase && m.b.empty(); };
    auto label = [&](const SliceMacrostate& m) { return to_string(a, m); };
    return detail::explore<SliceMacrostate, SliceMacrostateHash>(a.alphabet(), init, succ, accepting, label,
                                                                 bound, "slc-fa");
}

bool slc_subsumes(const SliceMacrostate& m1, const SliceMacrostate& m2) {
    if (!m1.accepting_phase || !m2.accepting_phase)
        throw Error(ErrorCode::phase_mismatch, "subsumption is defined on accepting-phase macrostates only");
    return m1.n == m2.n && m1.c.subset_of(m2.c);
}

std::string to_string(const Nbw& a, const SliceMacrostate& m) {
    if (!m.accepting_phase) return detail::format_set(a, m.n);
    return "(" + detail::format_set(a, m.n) + "," + detail::format_set(a, m.c) + "," +
           detail::format_set(a, m.b) + ")";
}

std::string to_string(const Nbw& a, const Slice& s) {
    std::string r = "<";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += detail::format_set(a, s[i]);
    }
    return r + ">";
}

} // namespace codag
