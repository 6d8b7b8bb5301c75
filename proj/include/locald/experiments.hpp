#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locald/certificates.hpp"
#include "locald/config.hpp"
#include "locald/deciders.hpp"
#include "locald/json_io.hpp"
#include "locald/languages.hpp"
#include "locald/runtime.hpp"

namespace locald {

// ---------------------------------------------------------------------------
// Threshold experiment: unique-leader acceptance against the closed form p^k.
// ---------------------------------------------------------------------------

struct ThresholdRow {
    int leaders = 0;
    int nodes = 0;
    double analytic = 0.0;
    ProbabilityEstimate estimate;
};

struct ThresholdReport {
    double p = 0.0;
    double q = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
    bool contract_holds = false;  // analytic: acceptance >= p on members, rejection >= q otherwise
    std::vector<ThresholdRow> rows;
};

ThresholdReport threshold_experiment(double p, double q, const std::vector<int>& leaders, long trials,
                                     std::uint64_t seed);

// ---------------------------------------------------------------------------
// Path/cycle fooling for deterministic tree deciders.
// ---------------------------------------------------------------------------

/// Builds the two 4n-node paths with consecutive ids (1..4n and
/// 2n+1..4n,1..2n) and the 4n-cycle, verifies that every cycle node's
/// radius-t view is id-isomorphic to a mid-path view, and runs the decider
/// on all three. A correct local decider accepts both paths, hence the
/// cycle too. Throws radius_too_large when t >= n.
FoolingReport path_cycle_fooling(const NodeAlgorithm& decider, int t, int n, RunOptions options = {});

// ---------------------------------------------------------------------------
// Exhaustive sweeps.
// ---------------------------------------------------------------------------

struct SweepMismatch {
    Configuration config;
    bool oracle = false;
    bool decided = false;
};

struct SweepReport {
    std::string decider;
    std::string language;
    int max_n = 0;
    std::uint64_t seed = 0;
    long instances = 0;
    long mismatches = 0;
    std::optional<SweepMismatch> first_mismatch;
};

/// Runs a deterministic decider on every connected configuration up to
/// max_n (graphs up to isomorphism, inputs over the alphabet) and compares
/// the verdict with the membership oracle.
SweepReport sweep_decider_vs_oracle(const NodeAlgorithm& decider, const Language& lang, int max_n,
                                    const std::vector<Bitstring>& alphabet, std::uint64_t seed);

/// Same comparison for algorithm_d with constant t*: the distributed run up
/// to sim_max_n, the centralized normal form up to max_n.
SweepReport derand_sweep(const Language& lang, const DerandParams& params, int tstar, int max_n,
                         int sim_max_n, const std::vector<Bitstring>& alphabet, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Report serialization (stable field order for byte-identical reruns).
// ---------------------------------------------------------------------------

Json threshold_report_to_json(const ThresholdReport& report);
std::string threshold_report_to_csv(const ThresholdReport& report);
Json sweep_report_to_json(const SweepReport& report);

/// Provenance block: seed + parameter echo + instance hash where relevant.
Json provenance(std::uint64_t seed, const Json& parameters, const Configuration* config,
                const IdAssignment* ids);

}  // namespace locald
