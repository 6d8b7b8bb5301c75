#include <doctest.h>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/languages.hpp"
#include "support.hpp"

using namespace locald;
using testsupport::config_of;

TEST_CASE("membership basics") {
    const Language& coloring = language("coloring");
    CHECK(coloring.member(config_of(path_graph(2), {"0", "1"})));
    CHECK_FALSE(coloring.member(config_of(path_graph(2), {"1", "1"})));

    const Language& leader = language("unique-leader");
    CHECK_FALSE(leader.member(config_of(path_graph(3), {"1", "0", "1"})));
    CHECK(leader.member(config_of(path_graph(3), {"0", "1", "0"})));
    CHECK(leader.member(config_of(path_graph(3), {"0", "0", "0"})));  // at most one
    CHECK_THROWS_AS(leader.member(config_of(path_graph(2), {"11", "0"})), Error);

    const Language& tree = language("tree");
    CHECK_FALSE(tree.member(with_empty_inputs(complete_graph(3))));
    CHECK(tree.member(with_empty_inputs(star_graph(3))));
    CHECK_FALSE(tree.member(config_of(path_graph(2), {"1", ""})));  // inputs must be empty

    const Language& size = language("inp-eq-size");
    CHECK(size.member(config_of(path_graph(3), {"11", "11", "11"})));
    CHECK_FALSE(size.member(config_of(path_graph(3), {"11", "11", "10"})));
    CHECK_FALSE(size.member(config_of(path_graph(2), {"11", "11"})));

    CHECK_THROWS_AS(language("planar").member(with_empty_inputs(path_graph(2))), Error);
    CHECK_THROWS_AS(language("interval").member(with_empty_inputs(path_graph(2))), Error);
    CHECK_THROWS_AS(language("no-such-thing"), Error);
}

TEST_CASE("registry resolves every advertised name") {
    for (const std::string& name : language_names()) CHECK(language(name).name.size() > 0);
    CHECK(language("cycle-free").member(with_empty_inputs(path_graph(4))));
}

TEST_CASE("consensus and spanning-tree") {
    const Language& consensus = language("consensus");
    auto pair_bits = [](const char* a, const char* b) {
        return encode_pair(Bitstring::parse(a), Bitstring::parse(b)).str();
    };
    CHECK(consensus.member(config_of(path_graph(2), {pair_bits("1", "1"), pair_bits("0", "1")})));
    CHECK_FALSE(consensus.member(config_of(path_graph(2), {pair_bits("0", "1"), pair_bits("0", "1")})));
    CHECK_FALSE(consensus.member(config_of(path_graph(2), {pair_bits("1", "1"), pair_bits("1", "0")})));

    const Language& spanning = language("spanning-tree");
    // name(v) = binary position, head = parent's name; root points nowhere
    auto named = [&](const char* name, const char* head) {
        return encode_pair(Bitstring::parse(name), Bitstring::parse(head)).str();
    };
    CHECK(spanning.member(config_of(path_graph(3), {named("1", ""), named("10", "1"), named("11", "10")})));
    // triangle where the selected edges close a cycle
    CHECK_FALSE(spanning.member(config_of(complete_graph(3),
                                          {named("1", "11"), named("10", "1"), named("11", "10")})));
}

TEST_CASE("tree agrees with the edge-count oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Configuration config = with_empty_inputs(to_graph(sg));
            CHECK(language("tree").member(config) == testsupport::oracle_tree(config.graph));
        }
    }
}

TEST_CASE("mis agrees with the brute-force oracle") {
    for (int n = 1; n <= 4; ++n) {
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Graph graph = to_graph(sg);
            std::vector<int> digits(static_cast<std::size_t>(n), 0);
            do {
                std::vector<Bitstring> inputs;
                for (int d : digits) inputs.push_back(Bitstring::raw(d != 0 ? "1" : "0"));
                const Configuration config{graph, inputs};
                CHECK(language("mis").member(config) == testsupport::oracle_mis(config));
            } while (next_assignment(digits, 2));
        }
    }
}

TEST_CASE("cover and containment") {
    auto cover_bits = [](const char* element, std::vector<std::vector<const char*>> sets) {
        CoverInput in;
        in.element = Bitstring::parse(element);
        for (const auto& set : sets) {
            std::vector<Bitstring> s;
            for (const char* e : set) s.push_back(Bitstring::parse(e));
            in.sets.push_back(std::move(s));
        }
        return encode_cover_input(in).str();
    };

    // single node, E=a, S={{a}}
    CHECK(member_cover(config_of(path_graph(1), {cover_bits("1", {{"1"}})})));
    // edge with singleton sets on each side: nothing equals {a,b}
    CHECK_FALSE(member_cover(config_of(path_graph(2), {cover_bits("1", {{"1"}}), cover_bits("0", {{"0"}})})));
    // superset is containment, not cover
    const Configuration superset =
        config_of(path_graph(2), {cover_bits("1", {{"1", "0", "11"}}), cover_bits("0", {})});
    CHECK_FALSE(member_cover(superset));
    CHECK(member_containment(superset));

    CHECK_FALSE(member_containment(config_of(path_graph(1), {cover_bits("1", {{}})})));
    // equality implies superset
    const Configuration exact = config_of(path_graph(2), {cover_bits("1", {{"1", "0"}}), cover_bits("0", {})});
    CHECK(member_cover(exact));
    CHECK(member_containment(exact));

    CHECK_THROWS_AS(member_cover(config_of(path_graph(1), {"1"})), Error);

    // registry names agree with the free functions
    CHECK(language("cover").member(exact));
    CHECK(language("containment").member(superset));
}

TEST_CASE("cover input codec round-trips canonically") {
    CoverInput in;
    in.element = Bitstring::parse("101");
    in.sets = {{Bitstring::parse("1"), Bitstring::parse("0"), Bitstring::parse("1")},
               {Bitstring::parse("11")},
               {Bitstring::parse("0"), Bitstring::parse("1")}};
    const Bitstring wire = encode_cover_input(in);
    const CoverInput decoded = decode_cover_input(wire);
    CHECK(decoded.element == in.element);
    CHECK(decoded.sets.size() == 2);  // duplicate set collapsed after sorting
    CHECK(encode_cover_input(decoded) == wire);
}

TEST_CASE("hereditary checks") {
    const HereditaryReport coloring = check_hereditary(language("coloring"), 4, default_alphabet(language("coloring"), 4));
    CHECK(coloring.hereditary);

    const HereditaryReport tree = check_hereditary(language("tree"), 4, default_alphabet(language("tree"), 4));
    CHECK(tree.hereditary);

    const HereditaryReport leader =
        check_hereditary(language("unique-leader"), 4, default_alphabet(language("unique-leader"), 4));
    CHECK(leader.hereditary);

    const HereditaryReport size =
        check_hereditary(language("inp-eq-size"), 4, default_alphabet(language("inp-eq-size"), 4));
    CHECK_FALSE(size.hereditary);
    REQUIRE(size.counterexample.has_value());
    // the found counterexample really is one
    CHECK(language("inp-eq-size").member(size.counterexample->config));
    CHECK_FALSE(language("inp-eq-size").member(prefix(size.counterexample->config, size.counterexample->prefix_nodes)));

    const HereditaryReport mis = check_hereditary(language("mis"), 4, default_alphabet(language("mis"), 4));
    CHECK_FALSE(mis.hereditary);
    REQUIRE(mis.counterexample.has_value());
    CHECK(mis.counterexample->config.n() == 2);  // frozen: found on the single edge
    CHECK(language("mis").member(mis.counterexample->config));
    CHECK_FALSE(language("mis").member(prefix(mis.counterexample->config, mis.counterexample->prefix_nodes)));

    CHECK_THROWS_AS(check_hereditary(language("coloring"), 7, default_alphabet(language("coloring"), 7)), Error);
}
