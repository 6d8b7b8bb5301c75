#include "locald/runtime.hpp"

#include <algorithm>
#include <cmath>

#include "locald/error.hpp"

namespace locald {

std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    // splitmix64 finalizer over a simple combination of the inputs
    std::uint64_t z = a;
    z += 0x9E3779B97F4A7C15ull * (b + 1);
    z += 0xC2B2AE3D27D4EB4Full * (c + 1);
    z += 0x165667B19E3779F9ull * (d + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t RandomStream::bits(int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 1) | static_cast<std::uint64_t>(bit());
    return v;
}

double RandomStream::unit() {
    return static_cast<double>(bits(32)) / 4294967296.0;
}

bool HashStream::bit() {
    if (drawn_ % 64 == 0) block_ = mix64(seed_, node_id_, round_, drawn_ / 64 + 1);
    const bool b = (block_ >> (drawn_ % 64)) & 1;
    ++drawn_;
    return b;
}

std::unique_ptr<RandomStream> HashCoins::stream(int, std::uint64_t node_id, int round) {
    return std::make_unique<HashStream>(seed_, node_id, static_cast<std::uint64_t>(round));
}

namespace {

class TapeStream final : public RandomStream {
public:
    TapeStream(const std::vector<bool>& tape, std::size_t& cursor, int node_index)
        : tape_(tape), cursor_(cursor), node_index_(node_index) {}
    bool bit() override {
        if (cursor_ >= tape_.size()) throw TapeCoins::TapeExhausted{node_index_};
        return tape_[cursor_++];
    }

private:
    const std::vector<bool>& tape_;
    std::size_t& cursor_;
    int node_index_;
};

class CountingStream final : public RandomStream {
public:
    CountingStream(std::unique_ptr<RandomStream> inner, std::uint64_t& counter)
        : inner_(std::move(inner)), counter_(counter) {}
    bool bit() override {
        ++counter_;
        return inner_->bit();
    }

private:
    std::unique_ptr<RandomStream> inner_;
    std::uint64_t& counter_;
};

}  // namespace

std::unique_ptr<RandomStream> TapeCoins::stream(int node_index, std::uint64_t, int) {
    if (consumed_.size() < tapes_.size()) consumed_.resize(tapes_.size(), 0);
    return std::make_unique<TapeStream>(tapes_[static_cast<std::size_t>(node_index)],
                                        consumed_[static_cast<std::size_t>(node_index)], node_index);
}

void TapeCoins::reset() {
    consumed_.assign(tapes_.size(), 0);
}

std::unique_ptr<RandomStream> CountingCoins::stream(int node_index, std::uint64_t node_id, int round) {
    if (counts_.size() <= static_cast<std::size_t>(node_index)) counts_.resize(static_cast<std::size_t>(node_index) + 1, 0);
    return std::make_unique<CountingStream>(inner_.stream(node_index, node_id, round),
                                            counts_[static_cast<std::size_t>(node_index)]);
}

std::uint64_t CountingCoins::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts_) sum += c;
    return sum;
}

bool verdict(std::span<const Vote> outputs) {
    if (outputs.empty()) fail(errc::malformed_input, "verdict needs at least one output");
    for (Vote v : outputs) {
        if (v == Vote::no) return false;
    }
    return true;
}

RunResult run_with_coins(const NodeAlgorithm& alg, const Configuration& config, const IdAssignment& ids,
                         const std::optional<Certificate>& certificate, CoinSource& coins, RunOptions options) {
    const int n = config.n();
    if (static_cast<int>(ids.ids.size()) != n) fail(errc::malformed_input, "id assignment does not cover the graph");
    if (certificate && static_cast<int>(certificate->values.size()) != n)
        fail(errc::malformed_input, "certificate must be defined on all nodes");
    const int cap = options.round_cap >= 0 ? options.round_cap : 2 * n;

    std::vector<std::any> states(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        NodeContext ctx;
        ctx.id = ids.id(v);
        ctx.input = config.input(v);
        if (certificate) ctx.certificate = certificate->values[static_cast<std::size_t>(v)];
        ctx.degree = config.graph.degree(v);
        states[static_cast<std::size_t>(v)] = alg.init(ctx);
    }

    RunResult result;
    result.outputs.assign(static_cast<std::size_t>(n), Vote::yes);
    result.rounds_used.assign(static_cast<std::size_t>(n), -1);

    std::vector<std::map<Port, Message>> inboxes(static_cast<std::size_t>(n));
    int remaining = n;
    for (int round = 0; round <= cap && remaining > 0; ++round) {
        std::vector<std::map<Port, Message>> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (result.rounds_used[static_cast<std::size_t>(v)] >= 0) continue;
            auto stream = coins.stream(v, ids.id(v), round);
            StepResult step = alg.step(states[static_cast<std::size_t>(v)], round,
                                       inboxes[static_cast<std::size_t>(v)], *stream);
            // Messages sent in round r are delivered at round r+1. A final
            // round's outbox still goes out with the output.
            const auto& nbrs = config.graph.adj[static_cast<std::size_t>(v)];
            for (const auto& [port, payload] : step.outbox) {
                if (port < 0 || port >= static_cast<int>(nbrs.size()))
                    fail(errc::unknown_node, "outbox port out of range in " + alg.name);
                const int w = nbrs[static_cast<std::size_t>(port)];
                const auto& back = config.graph.adj[static_cast<std::size_t>(w)];
                const int back_port = static_cast<int>(std::lower_bound(back.begin(), back.end(), v) - back.begin());
                next[static_cast<std::size_t>(w)][back_port] = payload;
            }
            if (step.output.has_value()) {
                result.outputs[static_cast<std::size_t>(v)] = *step.output;
                result.rounds_used[static_cast<std::size_t>(v)] = round;
                --remaining;
            }
        }
        inboxes = std::move(next);
    }
    if (remaining > 0)
        fail(errc::round_cap_exceeded, alg.name + " has nodes without output after " + std::to_string(cap) + " rounds");
    result.accepted = verdict(result.outputs);
    return result;
}

RunResult run(const NodeAlgorithm& alg, const Configuration& config, const IdAssignment& ids,
              const std::optional<Certificate>& certificate, std::uint64_t seed, RunOptions options) {
    HashCoins coins(seed);
    return run_with_coins(alg, config, ids, certificate, coins, options);
}

ProbabilityEstimate wilson_estimate(long accept_count, long trials) {
    constexpr double z = 2.5758293035489004;  // two-sided 99%
    ProbabilityEstimate est;
    est.trials = trials;
    est.accept_count = accept_count;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(accept_count) / n;
    est.point = phat;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    est.lo = std::max(0.0, center - half);
    est.hi = std::min(1.0, center + half);
    return est;
}

ProbabilityEstimate estimate_acceptance(const NodeAlgorithm& alg, const Configuration& config,
                                        const IdAssignment& ids, const std::optional<Certificate>& certificate,
                                        long trials, std::uint64_t seed, RunOptions options) {
    if (trials < 1) fail(errc::malformed_input, "trials must be at least 1");
    long accepted = 0;
    for (long i = 0; i < trials; ++i) {
        if (run(alg, config, ids, certificate, mix64(seed, static_cast<std::uint64_t>(i)), options).accepted)
            ++accepted;
    }
    return wilson_estimate(accepted, trials);
}

NodeAlgorithm zero_round_algorithm(std::string name,
                                   std::function<Vote(const NodeContext&, RandomStream&)> decide) {
    NodeAlgorithm alg;
    alg.name = std::move(name);
    alg.init = [](const NodeContext& ctx) { return std::any(ctx); };
    alg.step = [decide = std::move(decide)](std::any& state, int, const std::map<Port, Message>&,
                                            RandomStream& coins) {
        StepResult out;
        out.output = decide(std::any_cast<const NodeContext&>(state), coins);
        return out;
    };
    return alg;
}

NodeAlgorithm one_round_algorithm(std::string name, std::function<Message(const NodeContext&)> make_message,
                                  std::function<Vote(const NodeContext&, const std::vector<Message>&, RandomStream&)> decide) {
    NodeAlgorithm alg;
    alg.name = std::move(name);
    alg.init = [](const NodeContext& ctx) { return std::any(ctx); };
    alg.step = [make_message = std::move(make_message), decide = std::move(decide)](
                   std::any& state, int round, const std::map<Port, Message>& inbox, RandomStream& coins) {
        const auto& ctx = std::any_cast<const NodeContext&>(state);
        StepResult out;
        if (round == 0) {
            const Message payload = make_message(ctx);
            for (int port = 0; port < ctx.degree; ++port) out.outbox[port] = payload;
            return out;
        }
        std::vector<Message> messages;
        messages.reserve(inbox.size());
        for (const auto& [port, payload] : inbox) messages.push_back(payload);
        out.output = decide(ctx, messages, coins);
        return out;
    };
    return alg;
}

}  // namespace locald
