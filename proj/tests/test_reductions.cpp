#include <doctest.h>

#include "oracle.hpp"
#include "vcbr/reductions.hpp"
#include "vcbr/solver.hpp"

using namespace vcbr;
namespace t = vcbr::testing;

namespace {

// MVC of the original graph must equal the cover contribution so far plus
// MVC of what is left (overlay included).
void check_rule_soundness(const Graph& g, const SolverState& st) {
    int residual = t::oracle_mvc(t::residual_graph(st));
    CHECK(t::oracle_mvc(g) == st.cover_count() + residual);
}

}  // namespace

TEST_CASE("deg1 on paths and stars") {
    Graph p3 = t::path_graph(3);
    SolverState st(p3);
    auto out = apply_deg1(st);
    CHECK(out.reduced_any);
    CHECK(st.status(1) == VertexStatus::InCover);
    CHECK(st.status(0) == VertexStatus::OutOfCover);
    CHECK(st.status(2) == VertexStatus::OutOfCover);
    CHECK(st.cover_count() == 1);

    Graph star = t::star_graph(4);
    SolverState st2(star);
    apply_deg1(st2);
    CHECK(st2.status(0) == VertexStatus::InCover);
    CHECK(st2.cover_count() == 1);
    CHECK(st2.undecided() == 0);

    Graph g_st3_0 = t::cycle_graph(4);
    SolverState st3(g_st3_0);
    CHECK(!apply_deg1(st3).reduced_any);
}

TEST_CASE("dominance on K3, C5 and the pendant triangle") {
    Graph g_k3_1 = t::complete_graph(3);
    SolverState k3(g_k3_1);
    Graph g3 = t::complete_graph(3);
    auto out = apply_dominance(k3);
    CHECK(out.reduced_any);
    CHECK(k3.cover_count() == 2);
    CHECK(k3.undecided() == 0);

    Graph g_c5_2 = t::cycle_graph(5);
    SolverState c5(g_c5_2);
    CHECK(!apply_dominance(c5).reduced_any);

    Graph pendant = t::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    SolverState st(pendant);
    apply_dominance(st);
    CHECK(st.cover_count() == 2);
    CHECK(st.cover_count() == t::oracle_mvc(pendant));
    CHECK(st.undecided() == 0);
}

TEST_CASE("fold2 contracts and unfolds") {
    Graph p3 = t::path_graph(3);
    SolverState st(p3);
    auto out = apply_fold2(st);
    CHECK(out.reduced_any);
    CHECK(st.cover_count() == 1);
    CHECK(st.total_vertices() == 4);
    // The overlay vertex is isolated; a cover of the residual is empty.
    auto cover = unfold_solution(st.ledger(), {}, st.total_vertices(), 3);
    CHECK(cover == std::vector<int>{1});

    Graph c4 = t::cycle_graph(4);
    SolverState st2(c4);
    apply_fold2(st2);
    CHECK(st2.cover_count() == 1);
    Graph residual = t::residual_graph(st2);
    CHECK(residual.num_vertices() == 2);
    CHECK(residual.num_edges() == 1);
    check_rule_soundness(c4, st2);

    // Adjacent neighbors of a degree-2 vertex trigger plain dominance.
    Graph k3 = t::complete_graph(3);
    SolverState st3(k3);
    apply_fold2(st3);
    CHECK(st3.cover_count() == 2);
    CHECK(st3.status(0) == VertexStatus::OutOfCover);
    CHECK(st3.status(1) == VertexStatus::InCover);
    CHECK(st3.status(2) == VertexStatus::InCover);
}

TEST_CASE("fold2 unfold picks the contracted pair when z is covered") {
    // P5: folding 1 gives z adjacent to 3; any minimum cover of the residual
    // uses z or 3, and both unfold to size-2 covers of the path.
    Graph p5 = t::path_graph(5);
    SolverState st(p5);
    FrameToken tok = st.save();
    auto out = apply_fold2(st);
    CHECK(out.reduced_any);
    check_rule_soundness(p5, st);
    st.restore(tok);
}

TEST_CASE("twin contraction on K33") {
    Graph k33 = t::complete_bipartite(3, 3);
    SolverState st(k33);
    auto out = apply_twin(st);
    CHECK(out.reduced_any);
    CHECK(st.cover_count() == 2);
    check_rule_soundness(k33, st);
}

TEST_CASE("twins with an internal edge take the whole neighborhood") {
    Graph g = t::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
    SolverState st(g);
    auto out = apply_twin(st);
    CHECK(out.reduced_any);
    CHECK(st.cover_count() == 3);
    CHECK(st.status(2) == VertexStatus::InCover);
    CHECK(st.status(3) == VertexStatus::InCover);
    CHECK(st.status(4) == VertexStatus::InCover);
    CHECK(st.cover_count() == t::oracle_mvc(g));
}

TEST_CASE("no twins on C6") {
    Graph g_st_3 = t::cycle_graph(6);
    SolverState st(g_st_3);
    CHECK(!apply_twin(st).reduced_any);
}

TEST_CASE("lp reduction fixes the integral part") {
    Graph star = t::star_graph(3);
    SolverState st(star);
    LpSolution lp = solve_lp_relaxation(st);
    CHECK(lp.value() == doctest::Approx(1.0));
    auto out = apply_lp(st, lp);
    CHECK(out.vertices_reduced == 4);
    CHECK(st.status(0) == VertexStatus::InCover);
    CHECK(st.status(1) == VertexStatus::OutOfCover);

    Graph g_c5_4 = t::cycle_graph(5);
    SolverState c5(g_c5_4);
    LpSolution lp5 = solve_lp_relaxation(c5);
    CHECK(!apply_lp(c5, lp5).reduced_any);

    Graph mix = t::disjoint_union(t::complete_graph(2), t::complete_graph(1));
    SolverState stm(mix);
    LpSolution lpm = solve_lp_relaxation(stm);
    apply_lp(stm, lpm);
    CHECK(stm.status(0) == VertexStatus::Undecided);
    CHECK(stm.status(1) == VertexStatus::Undecided);
    CHECK(stm.status(2) == VertexStatus::OutOfCover);
}

TEST_CASE("stale lp solutions are rejected") {
    Graph g = t::cycle_graph(5);
    SolverState st(g);
    LpSolution lp = solve_lp_relaxation(st);
    st.set_status(0, VertexStatus::InCover, DecisionSource::Branching);
    CHECK_THROWS_AS(apply_lp(st, lp), std::logic_error);
}

TEST_CASE("unconfined accepts a dominated witness") {
    Graph g_k3_5 = t::complete_graph(3);
    SolverState k3(g_k3_5);
    CHECK(is_unconfined(k3, 0));
    auto out = apply_unconfined(k3);
    CHECK(out.reduced_any);
    CHECK(k3.cover_count() + t::oracle_mvc(t::residual_graph(k3)) == 2);
}

TEST_CASE("unconfined fires on C5 and stays sound") {
    Graph c5 = t::cycle_graph(5);
    SolverState st(c5);
    CHECK(is_unconfined(st, 0));
    apply_unconfined(st);
    check_rule_soundness(c5, st);
}

TEST_CASE("dominance witnesses are unconfined witnesses") {
    Rng rng(77);
    int checked = 0;
    for (int rep = 0; rep < 200; rep++) {
        Graph g = t::random_graph(4 + rng.below(8), 0.2 + 0.1 * rng.below(6), rng);
        SolverState st(g);
        for (int v = 0; v < g.num_vertices(); v++) {
            auto closed_v = st.closed_undecided_neighborhood(v);
            for (int w : st.undecided_neighbors(v)) {
                auto closed_w = st.closed_undecided_neighborhood(w);
                if (std::includes(closed_w.begin(), closed_w.end(), closed_v.begin(),
                                  closed_v.end())) {
                    CHECK(is_unconfined(st, w));
                    checked++;
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("funnel on a clique with a handle") {
    Graph g = t::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                {0, 4}, {1, 4}, {4, 5}, {5, 6}});
    SolverState st(g);
    auto out = apply_funnel(st);
    CHECK(out.reduced_any);
    check_rule_soundness(g, st);
}

TEST_CASE("degree-1 funnel behaves like deg1 on stars") {
    Graph star = t::star_graph(4);
    SolverState st(star);
    auto out = apply_funnel(st);
    CHECK(out.reduced_any);
    auto cover = unfold_solution(st.ledger(), st.cover_vertices(), st.total_vertices(),
                                 star.num_vertices());
    CHECK(cover == std::vector<int>{0});
    CHECK(st.cover_count() == 1);
}

TEST_CASE("funnel handles two-paths like the fold rule's dominance case") {
    Graph c6 = t::cycle_graph(6);
    SolverState st(c6);
    auto out = apply_funnel(st);
    CHECK(out.reduced_any);
    check_rule_soundness(c6, st);
}

TEST_CASE("desk fires on the cube") {
    Graph q3 = t::cube_graph();
    SolverState st(q3);
    auto out = apply_desk(st);
    CHECK(out.reduced_any);
    CHECK(st.cover_count() == 2);
    check_rule_soundness(q3, st);
    CHECK(t::oracle_mvc(q3) == 4);
}

TEST_CASE("no desk on plain C4 or chorded cycles") {
    Graph g_c4_6 = t::cycle_graph(4);
    SolverState c4(g_c4_6);
    CHECK(!apply_desk(c4).reduced_any);
    Graph chorded = t::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2},
                                      {0, 4}, {1, 4}, {2, 5}, {3, 5}});
    SolverState st(chorded);
    CHECK(!apply_desk(st).reduced_any);
}

TEST_CASE("reduce loop: trees empty out, C5 stays alive") {
    auto df2 = *preset_config("DF2");
    Graph tree = t::from_edges(15, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                                    {3, 7}, {3, 8}, {4, 9}, {5, 10}, {6, 11}, {6, 12},
                                    {8, 13}, {9, 14}});
    SolverState st(tree);
    CHECK(reduce(st, df2) == ReduceStatus::ReductionCut);
    CHECK(st.cover_count() == t::oracle_mvc(tree));

    // Fold contractions fire on any 2-regular cycle, so the loop resolves
    // C5 outright under the fold-bearing configurations.
    auto r0l1 = *preset_config("r0_l1");
    Graph g_c5_7 = t::cycle_graph(5);
    SolverState c5(g_c5_7);
    CHECK(reduce(c5, r0l1) == ReduceStatus::ReductionCut);
    CHECK(c5.cover_count() == t::oracle_mvc(g_c5_7));

    auto none = *preset_config("None");
    Graph g_p3_8 = t::path_graph(3);
    SolverState p3(g_p3_8);
    CHECK(reduce(p3, none) == ReduceStatus::Alive);
    CHECK(p3.undecided() == 3);
}

TEST_CASE("reduce is idempotent at a fixed point") {
    Rng rng(31);
    auto config = *preset_config("r2_l4");
    for (int rep = 0; rep < 30; rep++) {
        Graph g = t::random_graph(4 + rng.below(9), 0.3, rng);
        SolverState st(g);
        if (reduce(st, config) == ReduceStatus::Alive) {
            auto version = st.version();
            CHECK(reduce(st, config) == ReduceStatus::Alive);
            CHECK(st.version() == version);
        }
    }
}

TEST_CASE("twin unfold clause checked against the oracle") {
    Graph k33 = t::complete_bipartite(3, 3);
    auto config = *preset_config("r2_l4");
    config.brute_force_threshold = 2;
    SolveResult res = solve(k33, config);
    CHECK(res.value == 3);
    CHECK(t::is_vertex_cover(k33, res.cover));
    CHECK(static_cast<int>(res.cover.size()) == 3);
}

TEST_CASE("random per-rule soundness spot checks") {
    Rng rng(99);
    using Apply = ReductionOutcome (*)(SolverState&);
    Apply rules[] = {apply_deg1, apply_dominance, apply_fold2, apply_twin,
                     apply_unconfined, apply_funnel, apply_desk};
    for (int rep = 0; rep < 250; rep++) {
        Graph g = t::random_graph(4 + rng.below(9), 0.15 + 0.1 * rng.below(6), rng);
        SolverState st(g);
        auto out = rules[rep % 7](st);
        if (out.reduced_any) check_rule_soundness(g, st);
    }
}
