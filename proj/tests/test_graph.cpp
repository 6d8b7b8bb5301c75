#include <doctest.h>

#include <set>

#include "locald/config.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/graph.hpp"
#include "support.hpp"

using namespace locald;
using testsupport::config_of;

namespace {

bool has_code(const Error& e, errc code) { return e.code() == code; }

}  // namespace

TEST_CASE("build_graph shapes and validation") {
    const Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(p3.node_index("a"), p3.node_index("b")));
    CHECK_FALSE(p3.has_edge(p3.node_index("a"), p3.node_index("c")));

    CHECK_THROWS_WITH_AS(build_graph({{"a", "b"}, {"c", "d"}}), doctest::Contains("not connected"), Error);
    try {
        build_graph({{"a", "b"}, {"c", "d"}});
    } catch (const Error& e) {
        CHECK(has_code(e, errc::disconnected_graph));
    }
    CHECK_THROWS_AS(build_graph({{"a", "a"}}), Error);
    try {
        build_graph({{"a", "a"}});
    } catch (const Error& e) {
        CHECK(has_code(e, errc::self_loop));
    }
    try {
        build_graph({{"a", "b"}, {"b", "a"}});
    } catch (const Error& e) {
        CHECK(has_code(e, errc::duplicate_edge));
    }

    const Graph lonely = build_graph({}, {"only"});
    CHECK(lonely.n() == 1);

    // nodes are numbered in first-mention order, left endpoint first
    const Graph ordered = build_graph({{"m", "k"}, {"k", "z"}});
    CHECK(ordered.names == std::vector<std::string>{"m", "k", "z"});
}

TEST_CASE("ball matches the independent BFS oracle") {
    const Graph triangle = complete_graph(3);
    const Configuration tri = with_empty_inputs(triangle);
    const IdAssignment ids3 = ascending_ids(3);
    CHECK(ball(tri, ids3, 0, 1).n() == 3);

    const Graph p5 = path_graph(5);
    Configuration cfg = with_empty_inputs(p5);
    const IdAssignment ids5 = ascending_ids(5);
    const LocalView mid = ball(cfg, ids5, 2, 1);
    CHECK(mid.n() == 3);
    CHECK(mid.subgraph.edge_count() == 2);
    const LocalView self_only = ball(cfg, ids5, 2, 0);
    CHECK(self_only.n() == 1);
    CHECK(self_only.ids[0] == 3);

    // node sets equal {u : dist(u,v) <= t} for every graph up to 5 nodes
    for (int n = 1; n <= 5; ++n) {
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Configuration config = with_empty_inputs(to_graph(sg));
            const IdAssignment ids = ascending_ids(n);
            for (int v = 0; v < n; ++v) {
                const auto dist = testsupport::oracle_bfs(config.graph, v);
                std::vector<std::set<std::uint64_t>> by_radius;
                for (int t = 0; t <= n; ++t) {
                    const LocalView view = ball(config, ids, v, t);
                    std::set<std::uint64_t> got(view.ids.begin(), view.ids.end());
                    std::set<std::uint64_t> expect;
                    for (int u = 0; u < n; ++u)
                        if (dist[static_cast<std::size_t>(u)] <= t) expect.insert(ids.id(u));
                    CHECK(got == expect);
                    by_radius.push_back(got);
                }
                for (std::size_t t = 1; t < by_radius.size(); ++t)  // monotone in t
                    CHECK(std::includes(by_radius[t].begin(), by_radius[t].end(), by_radius[t - 1].begin(),
                                        by_radius[t - 1].end()));
            }
        }
    }

    CHECK_THROWS_AS(ball(cfg, ids5, 9, 1), Error);
}

TEST_CASE("prefix restriction and composition") {
    const Configuration p3 = config_of(path_graph(3), {"1", "0", "1"});
    const Configuration ab = prefix(p3, {0, 1});
    CHECK(ab.n() == 2);
    CHECK(ab.input(0).str() == "1");
    CHECK(ab.input(1).str() == "0");

    CHECK_THROWS_AS(prefix(p3, {0, 2}), Error);
    try {
        prefix(p3, {0, 2});
    } catch (const Error& e) {
        CHECK(e.code() == errc::disconnected_prefix);
    }

    const Configuration all = prefix(p3, {0, 1, 2});
    CHECK(all.graph.edge_count() == p3.graph.edge_count());
    CHECK(all.inputs == p3.inputs);

    // prefix(prefix(c,U),U') = prefix(c,U') for U' subset of U
    const Configuration p5 = config_of(path_graph(5), {"0", "1", "0", "1", "0"});
    const Configuration once = prefix(p5, {1, 2, 3});
    const Configuration twice = prefix(once, {0, 1});  // nodes 1,2 of the original
    const Configuration direct = prefix(p5, {1, 2});
    CHECK(twice.inputs == direct.inputs);
    CHECK(twice.graph.edge_count() == direct.graph.edge_count());
}

TEST_CASE("views_isomorphic") {
    const Configuration cyc = with_empty_inputs(cycle_graph(6));
    const IdAssignment ids = ascending_ids(6);
    const LocalView a = ball(cyc, ids, 0, 1);
    const LocalView b = ball(cyc, ids, 3, 1);
    CHECK(views_isomorphic(a, b, false));
    CHECK_FALSE(views_isomorphic(a, b, true));  // distinct ids
    CHECK(views_isomorphic(a, a, true));

    // star of degree 2 vs path of 3 centered at an end node
    const Configuration star = with_empty_inputs(star_graph(2));
    const Configuration path = with_empty_inputs(path_graph(3));
    const LocalView star_center = ball(star, ascending_ids(3), 0, 1);
    const LocalView path_end = ball(path, ascending_ids(3), 0, 2);
    CHECK_FALSE(views_isomorphic(star_center, path_end, false));

    // equivalence relation on a few small views
    std::vector<LocalView> views;
    for (int v = 0; v < 6; ++v) views.push_back(ball(cyc, ids, v, 1));
    for (const auto& x : views) CHECK(views_isomorphic(x, x, false));
    for (const auto& x : views)
        for (const auto& y : views) CHECK(views_isomorphic(x, y, false) == views_isomorphic(y, x, false));

    const Configuration big = with_empty_inputs(cycle_graph(12));
    CHECK_THROWS_AS(views_isomorphic(ball(big, ascending_ids(12), 0, 6), ball(big, ascending_ids(12), 1, 6), false),
                    Error);

    // transitivity across views with mixed inputs
    const Configuration striped = config_of(cycle_graph(6), {"0", "1", "0", "1", "0", "1"});
    const LocalView s0 = ball(striped, ids, 0, 1);
    const LocalView s2 = ball(striped, ids, 2, 1);
    const LocalView s4 = ball(striped, ids, 4, 1);
    CHECK(views_isomorphic(s0, s2, false));
    CHECK(views_isomorphic(s2, s4, false));
    CHECK(views_isomorphic(s0, s4, false));
    const LocalView s1 = ball(striped, ids, 1, 1);
    CHECK(views_isomorphic(s0, s1, false) == views_isomorphic(s1, s0, false));
}

TEST_CASE("view encoding is canonical for id-matching isomorphism") {
    const Configuration cyc = with_empty_inputs(cycle_graph(5));
    const IdAssignment ids = ascending_ids(5);
    for (int v = 0; v < 5; ++v) {
        const LocalView view = ball(cyc, ids, v, 1);
        const LocalView round_trip = decode_view(encode_view(view));
        CHECK(views_isomorphic(view, round_trip, true));
    }
    // different centers (hence different center ids) encode differently
    CHECK(encode_view(ball(cyc, ids, 0, 1)) != encode_view(ball(cyc, ids, 1, 1)));
}

TEST_CASE("find_splitters") {
    const Configuration p3 = config_of(path_graph(3), {"0", "0", "0"});

    const auto splitters = find_splitters(p3, 1);
    bool found = false;
    for (const Splitter& sp : splitters)
        found = found || (sp.s == std::vector<int>{1} && sp.u1 == std::vector<int>{0} && sp.u2 == std::vector<int>{2});
    CHECK(found);

    // triangle with radius bound 2: exhaustive tripartition enumeration says
    // no splitter keeps both sides nonempty
    const Configuration tri = with_empty_inputs(complete_graph(3));
    int both_sides = 0;
    for (const auto& digits : testsupport::oracle_tripartitions(3)) {
        std::vector<int> u1, u2;
        for (int v = 0; v < 3; ++v) {
            if (digits[static_cast<std::size_t>(v)] == 1) u1.push_back(v);
            if (digits[static_cast<std::size_t>(v)] == 2) u2.push_back(v);
        }
        if (!u1.empty() && !u2.empty() && testsupport::oracle_set_distance(tri.graph, u1, u2) >= 2) ++both_sides;
    }
    CHECK(both_sides == 0);
    for (const Splitter& sp : find_splitters(tri, 2)) CHECK((sp.u1.empty() || sp.u2.empty()));

    // radius bound 0 keeps every tripartition
    CHECK(find_splitters(tri, 0).size() == 27);

    // every returned splitter satisfies its invariants under recomputation
    for (const Splitter& sp : find_splitters(p3, 2)) {
        CHECK(sp.s.size() + sp.u1.size() + sp.u2.size() == 3);
        const int d = testsupport::oracle_set_distance(p3.graph, sp.u1, sp.u2);
        CHECK((d == -1 || d >= sp.radius_bound));
    }

    CHECK_THROWS_AS(find_splitters(with_empty_inputs(cycle_graph(9)), 1), Error);
}

TEST_CASE("connected graph counts up to isomorphism") {
    CHECK(connected_graphs(1).size() == 1);
    CHECK(connected_graphs(2).size() == 1);
    CHECK(connected_graphs(3).size() == 2);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
    CHECK(connected_graphs(6).size() == 112);
}

TEST_CASE("standard id assignments are distinct and valid") {
    for (int n : {1, 3, 8}) {
        const auto pool = standard_id_assignments(n);
        CHECK(pool.size() == 3);
        for (const auto& ids : pool) {
            std::set<std::uint64_t> seen(ids.ids.begin(), ids.ids.end());
            CHECK(static_cast<int>(seen.size()) == n);
        }
    }
}
