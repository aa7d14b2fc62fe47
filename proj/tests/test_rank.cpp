#include <algorithm>
#include <cmath>

#include "codag/core.hpp"
#include "codag/lang_tools.hpp"
#include "codag/rank_complement.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace codag;
using testing::error_of;

namespace {

constexpr std::int8_t B = kNoRank;

RankMacrostate rm(std::vector<std::int8_t> ranking, StateSet o) { return {std::move(ranking), std::move(o)}; }

// The successor macrostates of m on sym, as stored in the complement.
std::vector<RankMacrostate> successors(const RankComplement& c, const RankMacrostate& m, Symbol sym) {
    std::vector<RankMacrostate> out;
    for (State q : c.automaton.successors(*c.find(m), sym)) out.push_back(c.macrostates[q]);
    return out;
}

bool same_set(std::vector<RankMacrostate> got, const std::vector<RankMacrostate>& want) {
    if (got.size() != want.size()) return false;
    for (const auto& m : want)
        if (std::find(got.begin(), got.end(), m) == got.end()) return false;
    return true;
}

} // namespace

TEST_CASE("covering rankings of the initial A_fig2 ranking") {
    Nbw a = fixture("A_fig2");
    RankMacrostate init = rm({2, B, B, B}, {});
    auto on_a = covering_rankings(a, init, 0, 2, RankMode::fa);
    CHECK(on_a == std::vector<std::vector<std::int8_t>>{{0, B, B, B}, {1, B, B, B}, {2, B, B, B}});
    auto on_b = covering_rankings(a, init, 1, 2, RankMode::fa);
    CHECK(on_b == std::vector<std::vector<std::int8_t>>{{B, 0, 0, B}, {B, 0, 1, B}, {B, 0, 2, B},
                                                        {B, 2, 0, B}, {B, 2, 1, B}, {B, 2, 2, B}});
}

TEST_CASE("covering rankings of the empty ranking") {
    Nbw a = fixture("A_fig2");
    auto r = covering_rankings(a, rm({B, B, B, B}, {}), 0, 2, RankMode::fa);
    CHECK(r == std::vector<std::vector<std::int8_t>>{{B, B, B, B}});
}

TEST_CASE("rank complement of A_fig2 from its initial macrostate") {
    Nbw a = fixture("A_fig2");
    auto c = rkc_complement(a, RankMode::fa);
    RankMacrostate init = rm({2, B, B, B}, {});
    REQUIRE(c.find(init));
    CHECK(c.automaton.initial() == StateSet{*c.find(init)});
    CHECK(same_set(successors(c, init, 0), {rm({0, B, B, B}, {0}), rm({1, B, B, B}, {}), rm({2, B, B, B}, {0})}));
    CHECK(same_set(successors(c, init, 1),
                   {rm({B, 0, 0, B}, {1, 2}), rm({B, 0, 1, B}, {1}), rm({B, 0, 2, B}, {1, 2}),
                    rm({B, 2, 0, B}, {1, 2}), rm({B, 2, 1, B}, {1}), rm({B, 2, 2, B}, {1, 2})}));
    CHECK(c.automaton.is_accepting(*c.find(init)));
    CHECK_FALSE(c.automaton.is_accepting(*c.find(rm({0, B, B, B}, {0}))));
    for (const auto& m : c.macrostates) CHECK(rank_well_formed(complete(a), m, 2));
    CHECK(c.macrostates.size() <= 6 * 6 * 6 * 6);
}

TEST_CASE("rank subsumption examples") {
    CHECK(rank_subsumes(rm({B, 0, 1, B}, {1}), rm({B, 0, 0, B}, {1, 2})));
    CHECK_FALSE(rank_subsumes(rm({B, 2, 0, B}, {1, 2}), rm({B, 0, 2, B}, {1, 2})));
    auto m = rm({B, 2, 1, B}, {1});
    CHECK(rank_subsumes(m, m));
    CHECK_FALSE(rank_subsumes(rm({2, B, B, B}, {}), rm({B, 2, B, B}, {})));
}

TEST_CASE("rank subsumption agrees with rooted languages") {
    for (const char* name : {"A_fig2", "B_fig5"}) {
        Nbw a = fixture(name);
        auto c = rkc_complement(a, RankMode::fa);
        const auto words = oracle::all_lassos(a.alphabet_size(), 3, 3);
        for (State i = 0; i < c.macrostates.size(); ++i)
            for (State j = 0; j < c.macrostates.size(); ++j) {
                if (i == j || !rank_subsumes(c.macrostates[i], c.macrostates[j])) continue;
                for (const auto& w : words)
                    if (oracle::member_from(c.automaton, {j}, w)) CHECK(oracle::member_from(c.automaton, {i}, w));
            }
    }
}

TEST_CASE("rank complement rejects infinitely ambiguous inputs in fa mode") {
    CHECK(error_of([] { rkc_complement(fixture("N_fig1"), RankMode::fa); }) == ErrorCode::not_finitely_ambiguous);
    CHECK_NOTHROW(rkc_complement(fixture("N_fig1"), RankMode::general));
}

TEST_CASE("rank complement of universal and empty automata") {
    Nbw u(2, {"a", "b"});
    u.set_initial(0);
    for (State q = 0; q < 2; ++q) {
        u.set_accepting(q);
        for (Symbol s = 0; s < 2; ++s) u.add_transition(q, s, static_cast<State>(s));
    }
    Nbw e(2, {"a", "b"});
    e.set_initial(0);
    for (State q = 0; q < 2; ++q)
        for (Symbol s = 0; s < 2; ++s) e.add_transition(q, s, static_cast<State>(1 - q));
    const auto words = oracle::all_lassos(2, 3, 3);
    for (RankMode mode : {RankMode::general, RankMode::fa}) {
        auto cu = rkc_complement(u, mode).automaton;
        auto ce = rkc_complement(e, mode).automaton;
        for (const auto& w : words) {
            CHECK_FALSE(oracle::member(cu, w));
            CHECK(oracle::member(ce, w));
        }
    }
}

TEST_CASE("rank complements of the fixtures") {
    for (const auto& name : fixture_names()) {
        Nbw a = complete(fixture(name));
        INFO(name);
        CHECK(complement_check(a, rkc_complement(a, RankMode::general).automaton, 3, 3).passed);
        if (classify(a).finitely_ambiguous)
            CHECK(complement_check(a, rkc_complement(a, RankMode::fa).automaton, 3, 3).passed);
    }
}

TEST_CASE("rank complement on small random inputs against the naive oracle") {
    const auto words = oracle::all_lassos(2, 2, 3);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::size_t n = 1 + seed % 3;
        Nbw a = random_nbw(n, 2, 0.4, 0.4, seed, Shape::any);
        auto general = rkc_complement(a, RankMode::general);
        CHECK(general.macrostates.size() <= std::pow(8.0 * n, double(n)));
        for (const auto& m : general.macrostates) CHECK(rank_well_formed(a, m, int(2 * n)));
        bool fa = classify(a).finitely_ambiguous;
        Nbw cfa = fa ? rkc_complement(a, RankMode::fa).automaton : Nbw();
        for (const auto& w : words) {
            bool in = oracle::member(a, w);
            CHECK(oracle::member(general.automaton, w) != in);
            if (fa) CHECK(oracle::member(cfa, w) != in);
        }
    }
}
