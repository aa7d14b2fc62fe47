#include "codag/core.hpp"
#include "codag/lang_tools.hpp"
#include "codag/run_dag.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace codag;
using testing::error_of;
using testing::lasso;

TEST_CASE("reduced transition on A_fig2") {
    Nbw a = fixture("A_fig2");
    Symbol b = 1;
    CHECK(reduced_successors(a, {1, 2}, {1}, b) == StateSet{1});
    CHECK(reduced_successors(a, {1, 2}, {2}, b).empty());
    CHECK(reduced_successors(a, {1, 2}, {}, b).empty());
    CHECK(reduced_successors(a, {0}, {0}, b) == StateSet{1, 2});
    CHECK(minimal_predecessors(a, {1, 2}, b) == StateSet{1});
}

TEST_CASE("reduced transition depends on the enclosing level") {
    Nbw a = fixture("A_fig2");
    CHECK(reduced_successors(a, {2}, {2}, 1) == StateSet{1});
    CHECK(reduced_successors(a, {1, 2}, {2}, 1).empty());
    CHECK(error_of([&] { reduced_successors(a, {1}, {2}, 1); }) == ErrorCode::tracked_not_subset);
}

TEST_CASE("reduced transition on the whole level is the image") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Nbw a = random_nbw(4, 2, 0.4, 0.3, seed, Shape::any);
        for (std::uint64_t bits = 1; bits < 16; ++bits) {
            StateSet s;
            for (State q = 0; q < 4; ++q)
                if (bits >> q & 1) s.insert(q);
            for (Symbol sym = 0; sym < 2; ++sym) CHECK(reduced_successors(a, s, s, sym) == a.post(s, sym));
        }
    }
}

TEST_CASE("reduced DAG of A_fig2 over b") {
    Nbw a = fixture("A_fig2");
    auto w = lasso(a, "", "b");
    auto d = lasso_dag(a, w, DagMode::reduced);
    REQUIRE(d.num_levels() == 3);
    CHECK(d.level_set(0) == StateSet{0});
    CHECK(d.level_set(1) == StateSet{1, 2});
    CHECK(d.level_set(2) == StateSet{1});
    CHECK(d.period_start() == 2);
    CHECK(d.period_len() == 1);
    CHECK(d.has_edge(1, 1, 1));
    CHECK_FALSE(d.has_edge(1, 2, 1));
    CHECK(d.has_edge(2, 1, 1));
    CHECK(is_codeterministic(d.graph));

    auto full = lasso_dag(a, w, DagMode::full);
    CHECK(full.has_edge(1, 2, 1));
    CHECK_FALSE(is_codeterministic(full.graph));

    auto r = analyze_dag(full);
    CHECK(r.accepting);
    CHECK(r.separating_level == std::optional<std::size_t>(2));
    CHECK(analyze_dag(d).accepting);
    CHECK_FALSE(analyze_dag(d).stable_level);
}

TEST_CASE("reduced DAG of B_fig5 over a") {
    Nbw a = fixture("B_fig5");
    auto d = lasso_dag(a, lasso(a, "", "a"), DagMode::reduced);
    for (std::size_t l = 0; l < d.num_levels(); ++l) {
        auto q2 = d.find(l, 2);
        if (q2) CHECK(d.graph.levels[l][*q2].succ.empty());
    }
    auto r = analyze_dag(d);
    CHECK_FALSE(r.accepting);
    CHECK(r.stable_level == std::optional<std::size_t>(1));
    CHECK(r.omega_branch_count_at_tail == 1);
    CHECK_FALSE(r.separating_level);

    // By hand: q1 and q2 vertices die out, so they are finite in G^0; q0 is
    // then F-free in G^1.
    auto ranks = classical_ranks(d);
    CHECK(ranks.max_rank == 2);
    CHECK_FALSE(ranks.survivors);
    for (std::size_t l = 0; l < d.num_levels(); ++l)
        for (std::size_t i = 0; i < d.states[l].size(); ++i)
            CHECK(ranks.rank[l][i] == (d.states[l][i] == 0 ? 1 : 0));
    CHECK(ranks_valid(d.graph, ranks));
}

TEST_CASE("ranks on the accepting branch of A_fig2") {
    Nbw a = fixture("A_fig2");
    auto d = lasso_dag(a, lasso(a, "", "b"), DagMode::reduced);
    auto ranks = classical_ranks(d);
    CHECK(ranks.survivors);
    for (std::size_t l = 1; l < d.num_levels(); ++l) CHECK(ranks.rank[l][*d.find(l, 1)] == 2);
    // q2 at level 1 lost its only edge.
    CHECK(ranks.rank[1][*d.find(1, 2)] == 0);
    CHECK(ranks_valid(d.graph, ranks));

    auto full = classical_ranks(lasso_dag(a, lasso(a, "", "b"), DagMode::full));
    CHECK(full.max_rank == 8);
}

TEST_CASE("without accepting states every live vertex has rank 1") {
    Nbw a(2, {"a", "b"});
    a.set_initial(0);
    for (Symbol s = 0; s < 2; ++s) {
        a.add_transition(0, s, 0);
        a.add_transition(0, s, 1);
        a.add_transition(1, s, 1);
    }
    auto d = lasso_dag(a, lasso(a, "a", "ab"), DagMode::full);
    auto ranks = classical_ranks(d);
    for (std::size_t l = 0; l < d.num_levels(); ++l)
        for (std::size_t i = 0; i < d.states[l].size(); ++i) CHECK(ranks.rank[l][i] == 1);
}

TEST_CASE("one-state loop") {
    Nbw a(1, {"a", "b"});
    a.set_initial(0);
    a.set_accepting(0);
    a.add_transition(0, 0, 0);
    a.add_transition(0, 1, 0);
    auto d = lasso_dag(a, lasso(a, "", "abb"), DagMode::reduced);
    CHECK(d.period_len() == 3);
    CHECK(analyze_dag(d).omega_branch_count_at_tail == 1);
    CHECK(analyze_dag(d).accepting);
}

TEST_CASE("reduction needs finite ambiguity") {
    Nbw a = fixture("N_fig1");
    a.set_order({2, 1, 0, 3});
    auto w = lasso(a, "", "b");
    CHECK(oracle::member(a, w));
    CHECK(member(a, w));
    CHECK_FALSE(analyze_dag(lasso_dag(a, w, DagMode::reduced)).accepting);
    CHECK(analyze_dag(lasso_dag(a, w, DagMode::full)).accepting);
}

TEST_CASE("DAG properties on random finitely ambiguous automata") {
    const auto words = enumerate_lassos(2, 3, 3);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        std::size_t n = 1 + seed % 5;
        Nbw a = random_nbw(n, 2, 0.35, 0.4, seed, Shape::fanbw);
        INFO("seed " << seed);
        for (const auto& w : words) {
            bool in = oracle::member(a, w);
            auto full = lasso_dag(a, w, DagMode::full);
            auto red = lasso_dag(a, w, DagMode::reduced);
            auto rf = analyze_dag(full);
            auto rr = analyze_dag(red);
            CHECK(rf.accepting == in);
            CHECK(rr.accepting == in);
            CHECK(is_codeterministic(red.graph));
            CHECK(rr.omega_branch_count_at_tail <= n);
            CHECK(rr.stable_level.has_value() == !in);
            if (in) CHECK(rf.separating_level.has_value());
            auto ranks = classical_ranks(red);
            CHECK(ranks.survivors == in);
            CHECK(ranks_valid(red.graph, ranks));
            CHECK(ranks_valid(full.graph, classical_ranks(full)));
        }
    }
}

TEST_CASE("branch bound holds for any automaton") {
    const auto words = enumerate_lassos(2, 2, 3);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        std::size_t n = 1 + seed % 5;
        Nbw a = random_nbw(n, 2, 0.5, 0.4, seed, Shape::any);
        for (const auto& w : words) {
            auto red = lasso_dag(a, w, DagMode::reduced);
            CHECK(is_codeterministic(red.graph));
            CHECK(analyze_dag(red).omega_branch_count_at_tail <= n);
            CHECK(analyze_dag(lasso_dag(a, w, DagMode::full)).accepting == oracle::member(a, w));
        }
    }
}
