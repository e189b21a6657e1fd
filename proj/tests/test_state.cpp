#include <doctest.h>

#include "oracle.hpp"
#include "vcbr/reductions.hpp"
#include "vcbr/solver_state.hpp"

using namespace vcbr;
namespace t = vcbr::testing;

TEST_CASE("status decisions update the counters") {
    Graph g = t::complete_graph(2);
    SolverState st(g);
    st.set_status(0, VertexStatus::InCover, DecisionSource::Branching);
    CHECK(st.undecided() == 1);
    CHECK(st.cover_count() == 1);
    CHECK(st.degree(1) == 0);
    SolverState st2(g);
    st2.set_status(0, VertexStatus::OutOfCover, DecisionSource::Branching);
    CHECK(st2.cover_count() == 0);
}

TEST_CASE("decide and restore") {
    Graph g = t::path_graph(5);
    SolverState st(g);
    FrameToken tok = st.save();
    st.set_status(1, VertexStatus::InCover, DecisionSource::Branching);
    st.set_status(2, VertexStatus::OutOfCover, DecisionSource::Branching);
    st.set_status(3, VertexStatus::InCover, DecisionSource::Branching);
    CHECK(st.undecided() == 2);
    st.restore(tok);
    CHECK(st.undecided() == 5);
    CHECK(st.cover_count() == 0);
    CHECK(st.degree(2) == 2);
}

TEST_CASE("double decide throws") {
    Graph g = t::path_graph(3);
    SolverState st(g);
    st.set_status(0, VertexStatus::InCover, DecisionSource::Branching);
    CHECK_THROWS_AS(st.set_status(0, VertexStatus::OutOfCover, DecisionSource::Branching),
                    std::logic_error);
}

TEST_CASE("non-LIFO restore throws") {
    Graph g = t::path_graph(4);
    SolverState st(g);
    FrameToken outer = st.save();
    FrameToken inner = st.save();
    CHECK_THROWS_AS(st.restore(outer), std::logic_error);
    st.restore(inner);
    st.restore(outer);
}

TEST_CASE("nested save/restore keeps the outer state intact") {
    Graph g = t::cycle_graph(6);
    SolverState st(g);
    FrameToken outer = st.save();
    st.set_status(0, VertexStatus::InCover, DecisionSource::Branching);
    FrameToken inner = st.save();
    st.set_status(1, VertexStatus::InCover, DecisionSource::Branching);
    st.restore(inner);
    CHECK(st.undecided() == 5);
    st.restore(outer);
    CHECK(st.undecided() == 6);
}

TEST_CASE("structural edits roll back") {
    Graph g = t::path_graph(3);
    SolverState st(g);
    FrameToken tok = st.save();
    apply_fold2(st);  // contracts the path into one overlay vertex
    CHECK(st.total_vertices() == 4);
    CHECK(st.cover_count() == 1);
    CHECK(st.ledger().size() == 1);
    st.restore(tok);
    CHECK(st.total_vertices() == 3);
    CHECK(st.cover_count() == 0);
    CHECK(st.ledger().empty());
    CHECK(st.undecided() == 3);
    CHECK(st.degree(1) == 2);
}

TEST_CASE("randomized deep-copy stress") {
    Rng rng(123);
    for (int rep = 0; rep < 60; rep++) {
        int n = 5 + rng.below(46);
        Graph g = t::random_graph(n, 0.08 + 0.04 * rng.below(6), rng);
        SolverState st(g);
        std::vector<std::pair<FrameToken, SolverState>> snapshots;
        for (int step = 0; step < 40; step++) {
            int action = rng.below(6);
            if (action == 0 || snapshots.empty()) {
                snapshots.emplace_back(st.save(), st);
            } else if (action == 1 && st.undecided() > 0) {
                std::vector<int> un = st.undecided_vertices();
                st.set_status(un[rng.below(static_cast<int>(un.size()))],
                              rng.below(2) ? VertexStatus::InCover : VertexStatus::OutOfCover,
                              DecisionSource::Branching);
            } else if (action == 2) {
                apply_fold2(st);
            } else if (action == 3) {
                apply_deg1(st);
            } else if (action == 4) {
                apply_funnel(st);
            } else {
                st.restore(snapshots.back().first);
                CHECK(st == snapshots.back().second);
                snapshots.pop_back();
            }
        }
        while (!snapshots.empty()) {
            st.restore(snapshots.back().first);
            CHECK(st == snapshots.back().second);
            snapshots.pop_back();
        }
    }
}

TEST_CASE("connected components") {
    Graph two = t::disjoint_union(t::complete_graph(3), t::complete_graph(3));
    SolverState st(two);
    auto classes = connected_components(st);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 3);
    CHECK(classes[1].size() == 3);
    CHECK(classes[0][0] < classes[1][0]);

    SolverState conn(two);
    conn.set_status(0, VertexStatus::InCover, DecisionSource::Branching);
    CHECK(connected_components(conn).size() == 2);

    Graph p4 = t::path_graph(4);
    SolverState mid(p4);
    mid.set_status(1, VertexStatus::InCover, DecisionSource::Branching);
    auto split = connected_components(mid);
    REQUIRE(split.size() == 2);
    CHECK(split[0] == std::vector<int>{0});
    CHECK(split[1] == std::vector<int>{2, 3});

    Graph g_single_0 = t::cycle_graph(5);
    SolverState single(g_single_0);
    CHECK(connected_components(single).size() == 1);
}

TEST_CASE("state degree stats skip overlay vertices") {
    Graph g = t::disjoint_union(t::path_graph(3), t::complete_graph(4));
    SolverState st(g);
    apply_fold2(st);  // folds the path part, leaving an overlay vertex
    DegreeStats s = degree_stats(st);
    CHECK(s.min == 3);
    CHECK(s.max == 3);
    CHECK(s.mean == doctest::Approx(3.0));
}
