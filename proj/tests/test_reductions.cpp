#include <doctest.h>

#include "locald/deciders.hpp"
#include "locald/error.hpp"
#include "locald/reductions.hpp"
#include "support.hpp"

using namespace locald;
using testsupport::config_of;

TEST_CASE("psi budget values and truncation") {
    const Configuration edge = config_of(path_graph(2), {"0", "1"});
    const PsiBudget budget = psi_budget(edge, make_ids({1, 2}), 4);
    // raw values 2^(1+1)=4 and 2^(2+1)=8, truncated at the cap
    CHECK(budget.psi[0] == 4);
    CHECK(budget.psi[1] == 4);

    const PsiBudget small = psi_budget(edge, make_ids({1, 2}), 2);
    CHECK(small.psi[0] == 2);
    CHECK(small.psi[1] == 2);
}

TEST_CASE("reduce_to_cover preserves membership on tiny instances") {
    const Language& coloring = language("coloring");

    const Configuration good = config_of(path_graph(2), {"0", "1"});
    const Configuration good_image = reduce_to_cover(coloring, good, make_ids({1, 2}), 2);
    CHECK(member_cover(good_image));
    CHECK(member_containment(good_image));  // equality lifts to superset

    const Configuration bad = config_of(path_graph(2), {"0", "0"});
    const Configuration bad_image = reduce_to_cover(coloring, bad, make_ids({1, 2}), 2);
    CHECK_FALSE(member_cover(bad_image));

    // permuting ids rebuilds the views but not the verdict
    const Configuration swapped = reduce_to_cover(coloring, good, make_ids({2, 1}), 2);
    CHECK(member_cover(swapped));
    const Configuration swapped_bad = reduce_to_cover(coloring, bad, make_ids({2, 1}), 2);
    CHECK_FALSE(member_cover(swapped_bad));
}

TEST_CASE("reduce_to_containment preserves membership on tiny instances") {
    const Language& coloring = language("coloring");

    const Configuration good = config_of(path_graph(2), {"0", "1"});
    CHECK(member_containment(reduce_to_containment(coloring, 1, good, make_ids({1, 2}), 2)));

    const Configuration bad = config_of(path_graph(2), {"1", "1"});
    CHECK_FALSE(member_containment(reduce_to_containment(coloring, 1, bad, make_ids({1, 2}), 2)));

    // t = 0 still works on one-node instances
    const Configuration lone = config_of(path_graph(1), {"0"});
    CHECK(member_containment(reduce_to_containment(coloring, 0, lone, make_ids({1}), 2)));
}

TEST_CASE("psi cap violations fail loudly") {
    const Configuration edge = config_of(path_graph(2), {"0", "1"});
    CHECK_THROWS_AS(reduce_to_cover(language("coloring"), edge, make_ids({1, 4}), 2), Error);
    try {
        reduce_to_cover(language("coloring"), edge, make_ids({1, 4}), 2);  // id 4 needs 3 bits
    } catch (const Error& e) {
        CHECK(e.code() == errc::psi_cap_exceeded);
    }

    // the default cap of 4 asks for an enumeration far past the guard
    CHECK_THROWS_AS(reduce_to_cover(language("coloring"), edge, make_ids({1, 2}), 4), Error);
    try {
        reduce_to_cover(language("coloring"), edge, make_ids({1, 2}), 4);
    } catch (const Error& e) {
        CHECK(e.code() == errc::enumeration_too_large);
    }
}

TEST_CASE("check_reduction equivalence for cover and containment") {
    const std::vector<Bitstring> colors{Bitstring::raw("0"), Bitstring::raw("1")};
    const std::vector<std::uint64_t> pool{1, 2, 3};

    const ReductionCheck cover_check = check_reduction(cover_reduction(language("coloring"), 2), 2, pool, colors);
    CHECK(cover_check.ok);
    CHECK(cover_check.instances == 30);  // (K1: 2 inputs x 3 ids) + (K2: 4 inputs x 6 ids)

    const ReductionCheck containment_check =
        check_reduction(containment_reduction(language("coloring"), 1, 2), 2, pool, colors);
    CHECK(containment_check.ok);
}

TEST_CASE("a wrong reduction is caught") {
    LocalReduction identity;
    identity.name = "tree->coloring-identity";
    identity.source = &language("tree");
    identity.target = &language("coloring");
    identity.rounds = 0;
    identity.apply = [](const Configuration& config, const IdAssignment&) { return config; };

    const ReductionCheck check = check_reduction(identity, 2, {1, 2}, {Bitstring()});
    CHECK_FALSE(check.ok);
    REQUIRE(check.counterexample.has_value());
    // the K2 with empty inputs: a tree, but identical adjacent "colors"
    CHECK(check.counterexample->source_member);
    CHECK_FALSE(check.counterexample->target_member);
}

TEST_CASE("reduction composed with a target decider decides the source") {
    // re-encode each color in two bits: still a proper coloring question,
    // decidable by the plain coloring decider on the image
    LocalReduction recolor;
    recolor.name = "coloring->coloring-2bit";
    recolor.source = &language("coloring");
    recolor.target = &language("coloring");
    recolor.rounds = 0;
    recolor.apply = [](const Configuration& config, const IdAssignment&) {
        Configuration image = config;
        for (std::size_t v = 0; v < image.inputs.size(); ++v) {
            std::string wide;
            for (char c : image.inputs[v].str()) {
                wide.push_back(c);
                wide.push_back(c);
            }
            image.inputs[v] = Bitstring::raw(wide);
        }
        return image;
    };
    CHECK(check_reduction(recolor, 3, {1, 2, 3}, {Bitstring::raw("0"), Bitstring::raw("1")}).ok);

    for (const char* bits : {"01", "00", "10"}) {
        const Configuration config = config_of(path_graph(2), {std::string(1, bits[0]), std::string(1, bits[1])});
        const Configuration image = recolor.apply(config, ascending_ids(2));
        const bool via_decider = run(coloring_decider(), image, ascending_ids(2), std::nullopt, 0).accepted;
        CHECK(via_decider == language("coloring").member(config));
    }
}
