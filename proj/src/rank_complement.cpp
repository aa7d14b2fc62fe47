#include "codag/rank_complement.hpp"

#include <cmath>

#include "codag/core.hpp"
#include "codag/run_dag.hpp"

namespace codag {

namespace detail {

std::string format_set(const Nbw& a, const StateSet& s) {
    std::string r = "{";
    bool first = true;
    for (State q : s) {
        if (!first) r += ",";
        r += a.state_name(q);
        first = false;
    }
    return r + "}";
}

} // namespace detail

StateSet RankMacrostate::domain() const {
    StateSet s;
    for (std::size_t q = 0; q < ranking.size(); ++q)
        if (ranking[q] != kNoRank) s.insert(static_cast<State>(q));
    return s;
}

std::size_t RankMacrostateHash::operator()(const RankMacrostate& m) const {
    std::size_t h = m.o.hash();
    for (auto r : m.ranking) h = hash_combine(h, static_cast<std::size_t>(r + 1));
    return h;
}

std::vector<std::vector<std::int8_t>> covering_rankings(const Nbw& a, const RankMacrostate& m, Symbol sym,
                                                        int max_rank, RankMode mode) {
    std::size_t n = a.num_states();
    StateSet dom = m.domain();
    StateSet preds = mode == RankMode::fa ? dom & minimal_predecessors(a, dom, sym) : dom;

    std::vector<int> bound(n, -1);
    for (State q : preds)
        for (State r : a.successors(q, sym)) {
            int k = std::min<int>(m.ranking[q], max_rank);
            bound[r] = bound[r] < 0 ? k : std::min(bound[r], k);
        }

    std::vector<State> targets;
    std::vector<std::vector<std::int8_t>> choices;
    for (State r = 0; r < n; ++r) {
        if (bound[r] < 0) continue;
        targets.push_back(r);
        std::vector<std::int8_t> c;
        for (int k = 0; k <= bound[r]; ++k)
            if (!a.is_accepting(r) || k % 2 == 0) c.push_back(static_cast<std::int8_t>(k));
        choices.push_back(std::move(c));
    }

    std::vector<std::vector<std::int8_t>> out;
    std::vector<std::size_t> pick(targets.size(), 0);
    for (;;) {
        std::vector<std::int8_t> r(n, kNoRank);
        for (std::size_t i = 0; i < targets.size(); ++i) r[targets[i]] = choices[i][pick[i]];
        out.push_back(std::move(r));
        std::size_t i = targets.size();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (targets.empty()) return out;
    }
}

RankComplement rkc_complement(const Nbw& input, RankMode mode) {
    Nbw a = complete(input);
    if (mode == RankMode::fa && !is_finitely_ambiguous(a))
        throw Error(ErrorCode::not_finitely_ambiguous, "rank-based FA complement needs a finitely ambiguous input");
    std::size_t n = a.num_states();
    int max_rank = mode == RankMode::fa ? 2 : static_cast<int>(2 * n);
    long double bound = mode == RankMode::fa ? std::pow(6.0L, static_cast<long double>(n))
                                             : std::pow(8.0L * n, static_cast<long double>(n));

    RankMacrostate init;
    init.ranking.assign(n, kNoRank);
    for (State q : a.initial()) init.ranking[q] = static_cast<std::int8_t>(max_rank);

    auto succ = [&](const RankMacrostate& m, Symbol sym) {
        std::vector<RankMacrostate> out;
        StateSet dom = m.domain();
        StateSet tracked_o;
        if (!m.o.empty())
            tracked_o = mode == RankMode::fa ? reduced_successors(a, dom, m.o, sym) : a.post(m.o, sym);
        for (auto& r : covering_rankings(a, m, sym, max_rank, mode)) {
            RankMacrostate next;
            StateSet odd, even;
            for (State q = 0; q < n; ++q) {
                if (r[q] == kNoRank) continue;
                (r[q] % 2 ? odd : even).insert(q);
            }
            next.o = m.o.empty() ? even : tracked_o - odd;
            next.ranking = std::move(r);
            out.push_back(std::move(next));
        }
        return out;
    };
    auto accepting = [](const RankMacrostate& m) { return m.o.empty(); };
    auto label = [&](const RankMacrostate& m) { return to_string(a, m); };
    return detail::explore<RankMacrostate, RankMacrostateHash>(
        a.alphabet(), init, succ, accepting, label, bound, mode == RankMode::fa ? "rkc-fa" : "rkc");
}

bool rank_subsumes(const RankMacrostate& m1, const RankMacrostate& m2) {
    if (m1.ranking.size() != m2.ranking.size()) return false;
    for (std::size_t q = 0; q < m1.ranking.size(); ++q) {
        if ((m1.ranking[q] == kNoRank) != (m2.ranking[q] == kNoRank)) return false;
        if (m1.ranking[q] < m2.ranking[q]) return false;
    }
    return m1.o.subset_of(m2.o);
}

bool rank_well_formed(const Nbw& a, const RankMacrostate& m, int max_rank) {
    if (m.ranking.size() != a.num_states()) return false;
    for (State q = 0; q < a.num_states(); ++q) {
        int k = m.ranking[q];
        if (k == kNoRank) continue;
        if (k < 0 || k > max_rank) return false;
        if (a.is_accepting(q) && k % 2) return false;
    }
    StateSet dom = m.domain();
    if (!m.o.subset_of(dom)) return false;
    for (State q : m.o)
        if (m.ranking[q] % 2) return false;
    return true;
}

std::string to_string(const Nbw& a, const RankMacrostate& m) {
    std::string r = "(";
    for (auto k : m.ranking) r += k == kNoRank ? std::string("_") : std::to_string(k);
    return r + "," + detail::format_set(a, m.o) + ")";
}

} // namespace codag
