#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "locald/config.hpp"
#include "locald/languages.hpp"
#include "locald/runtime.hpp"

namespace locald {

// ---------------------------------------------------------------------------
// One-round deterministic deciders and the zero-round randomized one.
// ---------------------------------------------------------------------------

/// Exchange colors, say "no" iff a neighbor shows the same color.
NodeAlgorithm coloring_decider();

/// Selected nodes reject a selected neighbor; unselected nodes reject when
/// no neighbor is selected. Inputs outside {0,1} vote "no".
NodeAlgorithm mis_decider();

/// Non-leaders always say "yes"; a leader says "yes" with probability p.
NodeAlgorithm unique_leader_decider(double p);

// ---------------------------------------------------------------------------
// Derandomization of hereditary languages.
// ---------------------------------------------------------------------------

/// Advertised (p,q)-decider contract of a bundled decider: members accepted
/// with probability >= p, non-members rejected with probability >= q,
/// within `radius` communication rounds.
struct DeciderSpec {
    double p = 1.0;
    double q = 1.0;
    int radius = 0;
};

DeciderSpec coloring_decider_spec();              // deterministic, one round
DeciderSpec mis_decider_spec();                   // deterministic, one round
DeciderSpec unique_leader_decider_spec(double p); // (p, 1-p^2), zero rounds

struct DerandParams {
    double delta = 0.0;
    int lambda = 0;
};

/// delta = (p^2+q-1)/2, lambda = 11*ceil(log p / log(1-delta)) clamped below
/// at 11. Throws threshold_violated when p^2+q <= 1.
DerandParams derand_params(double p, double q);

struct TstarOptions {
    int bit_budget = 20;        // exhaustive coin enumeration up to this many bits
    bool allow_sampling = true; // fall back to sampled maximization past the budget
    int samples = 1000;
    RunOptions run;
};

struct TstarResult {
    std::vector<int> t_running;  // t'_v: max running time over executions, floored at 1, rounded to 2^i
    std::vector<int> t_star;
    bool sampled = false;  // true when the bit budget forced the sampling fallback
    long executions = 0;
};

/// The doubling estimate: t'_v from all executions of the base decider (all
/// coin outcomes when they fit the bit budget, sampled otherwise), then the
/// smallest power of two with c*t'_v <= t*_v and t'_u <= t*_v for every u in
/// the ball of radius c*t*_v.
TstarResult estimate_tstar(const NodeAlgorithm& base, const Configuration& config, const IdAssignment& ids,
                           int c, std::uint64_t seed, TstarOptions options = {});

std::map<std::uint64_t, int> tstar_by_id(const TstarResult& result, const IdAssignment& ids);

/// Node u collects its ball of radius 2*lambda*t*_u and answers whether the
/// ball configuration is in the language. Sound for hereditary languages.
NodeAlgorithm algorithm_d(const Language& lang, const DerandParams& params,
                          std::map<std::uint64_t, int> tstar);

/// Centralized normal form of algorithm_d (ball + membership, no message
/// passing); the distributed implementation must agree with it everywhere.
std::vector<Vote> algorithm_d_reference(const Language& lang, const DerandParams& params,
                                        const std::vector<int>& tstar, const Configuration& config);

/// Evaluates the merge implication
///   (G[U1+S],x) in L and (G[U2+S],x) in L  =>  (G,x) in L
/// for one splitter. Throws disconnected_part when a side is not connected.
bool check_splitter_merge(const Language& lang, const Configuration& config, const Splitter& splitter);

// ---------------------------------------------------------------------------
// Generic ball collection.
// ---------------------------------------------------------------------------

/// Flood-and-decide: every round a node broadcasts everything it knows; it
/// outputs decide(view) as soon as the whole graph is known or enough rounds
/// guarantee the induced ball of its radius, whichever is first. With
/// per-node radii the guarantee needs uniform radii or completion; every
/// pipeline shipped here produces uniform radii.
NodeAlgorithm ball_algorithm(std::string name, std::function<int(const NodeContext&)> radius,
                             std::function<Vote(const LocalView&)> decide);

}  // namespace locald
