#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locald/config.hpp"

namespace locald {

// ---------------------------------------------------------------------------
// Randomness. Every node gets an independent stream per round, derived from
// (seed, node id, round) with a counter-based mixer, so results do not depend
// on the order nodes are stepped in.
// ---------------------------------------------------------------------------

std::uint64_t mix64(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0, std::uint64_t d = 0);

class RandomStream {
public:
    virtual ~RandomStream() = default;
    virtual bool bit() = 0;

    std::uint64_t bits(int count);
    /// Uniform in [0,1) from 32 bits.
    double unit();
    bool bernoulli(double p) { return unit() < p; }
};

class HashStream final : public RandomStream {
public:
    HashStream(std::uint64_t seed, std::uint64_t node_id, std::uint64_t round)
        : seed_(seed), node_id_(node_id), round_(round) {}
    bool bit() override;

private:
    std::uint64_t seed_, node_id_, round_;
    std::uint64_t block_ = 0, drawn_ = 0;
};

/// Source of per-(node, round) streams. The default is hash-based; tests
/// and the t* estimator substitute forced tapes or counting wrappers.
class CoinSource {
public:
    virtual ~CoinSource() = default;
    virtual std::unique_ptr<RandomStream> stream(int node_index, std::uint64_t node_id, int round) = 0;
};

class HashCoins final : public CoinSource {
public:
    explicit HashCoins(std::uint64_t seed) : seed_(seed) {}
    std::unique_ptr<RandomStream> stream(int node_index, std::uint64_t node_id, int round) override;

private:
    std::uint64_t seed_;
};

/// Replays a fixed tape per node (consumed across rounds). Draws past the
/// end of a tape throw TapeExhausted so callers can enumerate extensions.
class TapeCoins final : public CoinSource {
public:
    struct TapeExhausted {
        int node_index;
    };

    explicit TapeCoins(std::vector<std::vector<bool>> tapes) : tapes_(std::move(tapes)) {}
    std::unique_ptr<RandomStream> stream(int node_index, std::uint64_t node_id, int round) override;
    const std::vector<std::size_t>& consumed() const { return consumed_; }
    void reset();

private:
    std::vector<std::vector<bool>> tapes_;
    std::vector<std::size_t> consumed_;
};

/// Wraps another source and counts bits drawn per node.
class CountingCoins final : public CoinSource {
public:
    explicit CountingCoins(CoinSource& inner) : inner_(inner) {}
    std::unique_ptr<RandomStream> stream(int node_index, std::uint64_t node_id, int round) override;
    std::uint64_t total() const;
    const std::vector<std::uint64_t>& per_node() const { return counts_; }

private:
    CoinSource& inner_;
    std::vector<std::uint64_t> counts_;
};

// ---------------------------------------------------------------------------
// Node algorithms and the synchronous runner.
// ---------------------------------------------------------------------------

using Port = int;          // stable neighbor index, never an id
using Message = std::string;  // opaque payload, the simulator never inspects it

enum class Vote : std::uint8_t { yes, no };

struct NodeContext {
    std::uint64_t id = 0;
    Bitstring input;
    std::optional<Bitstring> certificate;
    int degree = 0;
};

struct StepResult {
    std::map<Port, Message> outbox;
    std::optional<Vote> output;
};

/// Per-round pure step function. Round r sees messages sent in round r-1
/// (round 0 sees none); a node that outputs is terminated and is never
/// stepped again. rounds_used(v) is the round index at which v output, so
/// a decision made before any message exchange costs 0 rounds.
struct NodeAlgorithm {
    std::string name;
    std::function<std::any(const NodeContext&)> init;
    std::function<StepResult(std::any& state, int round, const std::map<Port, Message>& inbox,
                             RandomStream& coins)> step;
};

struct RunResult {
    std::vector<Vote> outputs;
    std::vector<int> rounds_used;
    bool accepted = false;
};

/// AND decision rule: accept iff no node said "no".
bool verdict(std::span<const Vote> outputs);

struct RunOptions {
    int round_cap = -1;  // -1 means 2*|V|
};

RunResult run(const NodeAlgorithm& alg, const Configuration& config, const IdAssignment& ids,
              const std::optional<Certificate>& certificate, std::uint64_t seed, RunOptions options = {});

RunResult run_with_coins(const NodeAlgorithm& alg, const Configuration& config, const IdAssignment& ids,
                         const std::optional<Certificate>& certificate, CoinSource& coins,
                         RunOptions options = {});

// ---------------------------------------------------------------------------
// Monte Carlo estimation.
// ---------------------------------------------------------------------------

struct ProbabilityEstimate {
    long trials = 0;
    long accept_count = 0;
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval at 99% confidence.
ProbabilityEstimate wilson_estimate(long accept_count, long trials);

/// Runs `trials` independent simulations with seeds mix64(seed, trial).
/// Reproducible for a fixed seed and insensitive to evaluation order.
ProbabilityEstimate estimate_acceptance(const NodeAlgorithm& alg, const Configuration& config,
                                        const IdAssignment& ids, const std::optional<Certificate>& certificate,
                                        long trials, std::uint64_t seed, RunOptions options = {});

// ---------------------------------------------------------------------------
// Algorithm shapes.
// ---------------------------------------------------------------------------

/// Decide immediately from own (id, input, certificate) and coins.
NodeAlgorithm zero_round_algorithm(std::string name,
                                   std::function<Vote(const NodeContext&, RandomStream&)> decide);

/// Round 0 broadcasts make_message(ctx) on every port; round 1 decides from
/// the received messages (one per port, port-indexed).
NodeAlgorithm one_round_algorithm(std::string name, std::function<Message(const NodeContext&)> make_message,
                                  std::function<Vote(const NodeContext&, const std::vector<Message>&, RandomStream&)> decide);

}  // namespace locald
