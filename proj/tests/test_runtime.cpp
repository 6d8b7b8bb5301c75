#include <doctest.h>

#include "locald/deciders.hpp"
#include "locald/error.hpp"
#include "locald/runtime.hpp"
#include "support.hpp"

using namespace locald;
using testsupport::config_of;

namespace {

NodeAlgorithm never_outputs() {
    NodeAlgorithm alg;
    alg.name = "never";
    alg.init = [](const NodeContext&) { return std::any(0); };
    alg.step = [](std::any&, int, const std::map<Port, Message>&, RandomStream&) { return StepResult{}; };
    return alg;
}

}  // namespace

TEST_CASE("one-round color exchange") {
    const Configuration good = config_of(path_graph(3), {"0", "1", "0"});
    const RunResult accepted = run(coloring_decider(), good, ascending_ids(3), std::nullopt, 1);
    CHECK(accepted.accepted);
    for (int r : accepted.rounds_used) CHECK(r == 1);

    const Configuration bad = config_of(path_graph(2), {"1", "1"});
    const RunResult rejected = run(coloring_decider(), bad, ascending_ids(2), std::nullopt, 1);
    CHECK_FALSE(rejected.accepted);
    CHECK(rejected.outputs[0] == Vote::no);
    CHECK(rejected.outputs[1] == Vote::no);
}

TEST_CASE("round cap") {
    const Configuration cfg = config_of(path_graph(2), {"0", "1"});
    CHECK_THROWS_AS(run(never_outputs(), cfg, ascending_ids(2), std::nullopt, 1, RunOptions{10}), Error);
    try {
        run(never_outputs(), cfg, ascending_ids(2), std::nullopt, 1, RunOptions{10});
    } catch (const Error& e) {
        CHECK(e.code() == errc::round_cap_exceeded);
    }
}

TEST_CASE("verdict is the AND rule") {
    CHECK(verdict(std::vector<Vote>{Vote::yes, Vote::yes, Vote::yes}));
    CHECK_FALSE(verdict(std::vector<Vote>{Vote::yes, Vote::no}));
    CHECK_FALSE(verdict(std::vector<Vote>{Vote::no, Vote::no}));
    CHECK_THROWS_AS(verdict(std::vector<Vote>{}), Error);
}

TEST_CASE("zero-round algorithms cost zero rounds") {
    const Configuration leaderless = config_of(path_graph(4), {"0", "0", "0", "0"});
    const RunResult result = run(unique_leader_decider(0.6), leaderless, ascending_ids(4), std::nullopt, 5);
    CHECK(result.accepted);
    for (int r : result.rounds_used) CHECK(r == 0);
}

TEST_CASE("determinism for a fixed seed") {
    const Configuration two = config_of(path_graph(5), {"1", "0", "0", "1", "0"});
    const IdAssignment ids = ascending_ids(5);
    const NodeAlgorithm alg = unique_leader_decider(0.5);
    const RunResult a = run(alg, two, ids, std::nullopt, 42);
    const RunResult b = run(alg, two, ids, std::nullopt, 42);
    CHECK(a.outputs == b.outputs);
    CHECK(a.rounds_used == b.rounds_used);

    bool any_difference = false;
    for (std::uint64_t seed = 0; seed < 32 && !any_difference; ++seed)
        any_difference = run(alg, two, ids, std::nullopt, seed).outputs != a.outputs;
    CHECK(any_difference);
}

TEST_CASE("estimate_acceptance") {
    const Configuration good = config_of(path_graph(3), {"0", "1", "0"});
    const ProbabilityEstimate sure = estimate_acceptance(coloring_decider(), good, ascending_ids(3), std::nullopt, 500, 7);
    CHECK(sure.point == 1.0);
    CHECK(sure.accept_count == 500);
    CHECK(sure.lo <= sure.point);
    CHECK(sure.hi >= sure.point);

    CHECK_THROWS_AS(estimate_acceptance(coloring_decider(), good, ascending_ids(3), std::nullopt, 0, 7), Error);
}

TEST_CASE("wilson interval frozen values") {
    const ProbabilityEstimate half = wilson_estimate(50, 100);
    CHECK(half.point == doctest::Approx(0.5));
    CHECK(half.lo == doctest::Approx(0.37527962504483986));
    CHECK(half.hi == doctest::Approx(0.6247203749551602));

    const ProbabilityEstimate none = wilson_estimate(0, 10);
    CHECK(none.lo == doctest::Approx(0.0));
    CHECK(none.hi == doctest::Approx(0.3988540933049081));

    const ProbabilityEstimate all = wilson_estimate(10, 10);
    CHECK(all.lo == doctest::Approx(0.6011459066950919));
    CHECK(all.hi == doctest::Approx(1.0));
}

TEST_CASE("synchrony: outputs depend only on the radius reached") {
    // Radius-1 collection on a path: an end node's ball has 2 nodes no
    // matter how long the tail is, an interior node's has 3.
    const auto count_nodes = [](const LocalView& view) { return view.n() >= 3 ? Vote::no : Vote::yes; };
    const NodeAlgorithm probe = ball_algorithm("probe", [](const NodeContext&) { return 1; }, count_nodes);

    const Configuration p4 = config_of(path_graph(4), {"0", "0", "0", "0"});
    const Configuration p6 = config_of(path_graph(6), {"0", "0", "0", "0", "0", "0"});
    const RunResult on_p4 = run(probe, p4, ascending_ids(4), std::nullopt, 3);
    const RunResult on_p6 = run(probe, p6, ascending_ids(6), std::nullopt, 3);
    CHECK(on_p4.outputs[0] == on_p6.outputs[0]);
    CHECK(on_p4.outputs[1] == Vote::no);
}

TEST_CASE("per-node locality under graph surgery") {
    // Extending the path beyond node 1's radius-1 ball must not change the
    // outputs of nodes 0 and 1.
    const Configuration before = config_of(path_graph(4), {"1", "0", "1", "0"});
    const Configuration extended = config_of(path_graph(5), {"1", "0", "1", "0", "1"});
    const RunResult r1 = run(mis_decider(), before, ascending_ids(4), std::nullopt, 9);
    const RunResult r2 = run(mis_decider(), extended, ascending_ids(5), std::nullopt, 9);
    CHECK(r1.outputs[0] == r2.outputs[0]);
    CHECK(r1.outputs[1] == r2.outputs[1]);
}

TEST_CASE("tape coins replay and counting") {
    const Configuration one_leader = config_of(path_graph(2), {"1", "0"});
    const IdAssignment ids = ascending_ids(2);

    // force the leader's 32 coin bits to zero: unit() == 0 < p, so "yes"
    TapeCoins zeros({std::vector<bool>(32, false), {}});
    const RunResult forced = run_with_coins(unique_leader_decider(0.6), one_leader, ids, std::nullopt, zeros);
    CHECK(forced.accepted);

    TapeCoins empty({{}, {}});
    CHECK_THROWS_AS(run_with_coins(unique_leader_decider(0.6), one_leader, ids, std::nullopt, empty),
                    TapeCoins::TapeExhausted);

    HashCoins hash(3);
    CountingCoins counting(hash);
    run_with_coins(unique_leader_decider(0.6), one_leader, ids, std::nullopt, counting);
    CHECK(counting.total() == 32);       // one bernoulli draw by the leader
    CHECK(counting.per_node()[1] == 0);  // the non-leader never draws
}
