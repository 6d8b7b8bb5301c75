#include "locald/deciders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "locald/error.hpp"

namespace locald {

NodeAlgorithm coloring_decider() {
    return one_round_algorithm(
        "coloring-decider",
        [](const NodeContext& ctx) { return ctx.input.str(); },
        [](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream&) {
            for (const Message& m : msgs)
                if (m == ctx.input.str()) return Vote::no;
            return Vote::yes;
        });
}

NodeAlgorithm mis_decider() {
    return one_round_algorithm(
        "mis-decider",
        [](const NodeContext& ctx) { return ctx.input.str(); },
        [](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream&) {
            const bool in_set = ctx.input.str() == "1";
            if (!in_set && ctx.input.str() != "0") return Vote::no;
            bool neighbor_in_set = false;
            for (const Message& m : msgs) neighbor_in_set = neighbor_in_set || m == "1";
            if (in_set && neighbor_in_set) return Vote::no;   // not independent
            if (!in_set && !neighbor_in_set) return Vote::no; // not maximal
            return Vote::yes;
        });
}

NodeAlgorithm unique_leader_decider(double p) {
    if (!(p > 0.0 && p <= 1.0)) fail(errc::malformed_input, "p must be in (0,1]");
    return zero_round_algorithm("unique-leader-decider", [p](const NodeContext& ctx, RandomStream& coins) {
        if (ctx.input.str() == "0") return Vote::yes;
        if (ctx.input.str() != "1") return Vote::no;
        return coins.bernoulli(p) ? Vote::yes : Vote::no;
    });
}

DeciderSpec coloring_decider_spec() { return {1.0, 1.0, 1}; }

DeciderSpec mis_decider_spec() { return {1.0, 1.0, 1}; }

DeciderSpec unique_leader_decider_spec(double p) { return {p, 1.0 - p * p, 0}; }

DerandParams derand_params(double p, double q) {
    if (!(p > 0.0 && p <= 1.0 && q > 0.0 && q <= 1.0)) fail(errc::malformed_input, "p,q must be in (0,1]");
    if (!(p * p + q > 1.0))
        fail(errc::threshold_violated, "derandomization requires p^2+q > 1");
    DerandParams params;
    params.delta = (p * p + q - 1.0) / 2.0;
    const double ratio = std::log(p) / std::log(1.0 - params.delta);
    params.lambda = 11 * static_cast<int>(std::ceil(ratio));
    if (params.lambda < 11) params.lambda = 11;  // log p = 0 at p = 1
    return params;
}

// ---------------------------------------------------------------------------
// Knowledge flooding.
// ---------------------------------------------------------------------------

namespace {

struct KnownNode {
    Bitstring input;
    int degree = 0;
};

struct Knowledge {
    std::uint64_t self = 0;
    std::map<std::uint64_t, KnownNode> nodes;
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;

    bool complete() const {
        std::map<std::uint64_t, int> incident;
        for (const auto& [a, b] : edges) {
            ++incident[a];
            ++incident[b];
        }
        for (const auto& [id, info] : nodes)
            if (incident[id] != info.degree) return false;
        return true;
    }

    Message serialize() const {
        BitWriter w;
        w.nat(self);
        w.nat(nodes.size());
        for (const auto& [id, info] : nodes) {
            w.nat(id);
            w.nat(static_cast<std::uint64_t>(info.degree));
            w.field(info.input);
        }
        w.nat(edges.size());
        for (const auto& [a, b] : edges) {
            w.nat(a);
            w.nat(b);
        }
        return w.take().str();
    }

    void merge_message(const Message& payload) {
        BitReader r(Bitstring::raw(payload));
        const std::uint64_t sender = r.nat();
        const std::uint64_t node_count = r.nat();
        for (std::uint64_t i = 0; i < node_count; ++i) {
            const std::uint64_t id = r.nat();
            KnownNode info;
            info.degree = static_cast<int>(r.nat());
            info.input = r.field();
            nodes.emplace(id, std::move(info));
        }
        const std::uint64_t edge_count = r.nat();
        for (std::uint64_t i = 0; i < edge_count; ++i) {
            const std::uint64_t a = r.nat();
            const std::uint64_t b = r.nat();
            edges.insert({std::min(a, b), std::max(a, b)});
        }
        edges.insert({std::min(self, sender), std::max(self, sender)});
    }

    /// Induced ball of `radius` around self; exact whenever the knowledge
    /// covers it (complete graph, or radius+1 flooding rounds).
    LocalView view(int radius) const {
        std::vector<std::uint64_t> order;
        order.reserve(nodes.size());
        for (const auto& [id, info] : nodes) order.push_back(id);
        std::map<std::uint64_t, int> index;
        for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

        std::vector<std::vector<int>> adj(order.size());
        for (const auto& [a, b] : edges) {
            adj[static_cast<std::size_t>(index.at(a))].push_back(index.at(b));
            adj[static_cast<std::size_t>(index.at(b))].push_back(index.at(a));
        }
        std::vector<int> dist(order.size(), -1);
        std::vector<int> queue{index.at(self)};
        dist[static_cast<std::size_t>(index.at(self))] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }

        LocalView view;
        view.radius = radius;
        std::map<std::uint64_t, int> new_index;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (dist[i] >= 0 && dist[i] <= radius) {
                new_index[order[i]] = view.n();
                view.subgraph.names.push_back("id" + std::to_string(order[i]));
                view.inputs.push_back(nodes.at(order[i]).input);
                view.ids.push_back(order[i]);
            }
        }
        view.center = new_index.at(self);
        view.subgraph.adj.assign(static_cast<std::size_t>(view.n()), {});
        for (const auto& [a, b] : edges) {
            const auto ia = new_index.find(a);
            const auto ib = new_index.find(b);
            if (ia != new_index.end() && ib != new_index.end()) {
                view.subgraph.adj[static_cast<std::size_t>(ia->second)].push_back(ib->second);
                view.subgraph.adj[static_cast<std::size_t>(ib->second)].push_back(ia->second);
            }
        }
        for (auto& row : view.subgraph.adj) std::sort(row.begin(), row.end());
        return view;
    }
};

struct BallState {
    Knowledge knowledge;
    int radius = 0;
    int degree = 0;
};

}  // namespace

NodeAlgorithm ball_algorithm(std::string name, std::function<int(const NodeContext&)> radius,
                             std::function<Vote(const LocalView&)> decide) {
    NodeAlgorithm alg;
    alg.name = std::move(name);
    alg.init = [radius = std::move(radius)](const NodeContext& ctx) {
        BallState state;
        state.radius = radius(ctx);
        state.degree = ctx.degree;
        state.knowledge.self = ctx.id;
        state.knowledge.nodes.emplace(ctx.id, KnownNode{ctx.input, ctx.degree});
        return std::any(std::move(state));
    };
    alg.step = [decide = std::move(decide)](std::any& raw, int round, const std::map<Port, Message>& inbox,
                                            RandomStream&) {
        auto& state = std::any_cast<BallState&>(raw);
        for (const auto& [port, payload] : inbox) state.knowledge.merge_message(payload);
        StepResult out;
        const Message payload = state.knowledge.serialize();
        for (int port = 0; port < state.degree; ++port) out.outbox[port] = payload;
        if (state.radius == 0 || round >= state.radius + 1 || state.knowledge.complete())
            out.output = decide(state.knowledge.view(state.radius));
        return out;
    };
    return alg;
}

NodeAlgorithm algorithm_d(const Language& lang, const DerandParams& params,
                          std::map<std::uint64_t, int> tstar) {
    const auto member_fn = lang.member;
    const int lambda = params.lambda;
    return ball_algorithm(
        "algorithm-d[" + lang.name + "]",
        [tstar = std::move(tstar), lambda](const NodeContext& ctx) {
            const auto it = tstar.find(ctx.id);
            if (it == tstar.end()) fail(errc::malformed_input, "no t* value for id " + std::to_string(ctx.id));
            return 2 * lambda * it->second;
        },
        [member_fn](const LocalView& view) {
            return member_fn(config_of_view(view)) ? Vote::yes : Vote::no;
        });
}

std::vector<Vote> algorithm_d_reference(const Language& lang, const DerandParams& params,
                                        const std::vector<int>& tstar, const Configuration& config) {
    const int n = config.n();
    if (static_cast<int>(tstar.size()) != n) fail(errc::malformed_input, "t* must be given for every node");

    // Group nodes by ball node-set so each distinct ball is judged once.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        const int radius = 2 * params.lambda * tstar[static_cast<std::size_t>(v)];
        const auto dist = bfs_distances(config.graph, v);
        std::vector<int> nodes;
        for (int u = 0; u < n; ++u)
            if (dist[static_cast<std::size_t>(u)] <= radius) nodes.push_back(u);
        groups[std::move(nodes)].push_back(v);
    }
    std::vector<Vote> votes(static_cast<std::size_t>(n), Vote::yes);
    for (const auto& [nodes, members] : groups) {
        Configuration ball_config;
        ball_config.graph = induced_subgraph(config.graph, nodes);
        ball_config.inputs.reserve(nodes.size());
        for (int u : nodes) ball_config.inputs.push_back(config.input(u));
        const Vote vote = lang.member(ball_config) ? Vote::yes : Vote::no;
        for (int v : members) votes[static_cast<std::size_t>(v)] = vote;
    }
    return votes;
}

// ---------------------------------------------------------------------------
// t* estimation.
// ---------------------------------------------------------------------------

namespace {

int next_pow2(int v) {
    int p = 1;
    while (p < v) p *= 2;
    return p;
}

}  // namespace

TstarResult estimate_tstar(const NodeAlgorithm& base, const Configuration& config, const IdAssignment& ids,
                           int c, std::uint64_t seed, TstarOptions options) {
    if (c < 1) fail(errc::malformed_input, "c must be positive");
    const int n = config.n();
    TstarResult result;
    std::vector<int> max_rounds(static_cast<std::size_t>(n), 0);

    auto absorb = [&](const RunResult& r) {
        for (int v = 0; v < n; ++v)
            max_rounds[static_cast<std::size_t>(v)] =
                std::max(max_rounds[static_cast<std::size_t>(v)], r.rounds_used[static_cast<std::size_t>(v)]);
        ++result.executions;
    };

    // Enumerate all coin outcomes by extending per-node tapes on demand; the
    // tape depth is bounded by the bit budget, past which we sample.
    std::vector<std::vector<std::vector<bool>>> stack{
        std::vector<std::vector<bool>>(static_cast<std::size_t>(n))};
    bool budget_blown = false;
    while (!stack.empty() && !budget_blown) {
        auto tapes = std::move(stack.back());
        stack.pop_back();
        std::size_t total_bits = 0;
        for (const auto& tape : tapes) total_bits += tape.size();
        if (total_bits > static_cast<std::size_t>(options.bit_budget)) {
            budget_blown = true;
            break;
        }
        try {
            TapeCoins coins(tapes);
            absorb(run_with_coins(base, config, ids, std::nullopt, coins, options.run));
        } catch (const TapeCoins::TapeExhausted& e) {
            for (const bool extension : {false, true}) {
                auto extended = tapes;
                extended[static_cast<std::size_t>(e.node_index)].push_back(extension);
                stack.push_back(std::move(extended));
            }
        }
    }
    if (budget_blown) {
        if (!options.allow_sampling)
            fail(errc::bit_budget_exceeded,
                 "decider draws more than " + std::to_string(options.bit_budget) + " coin bits");
        result.sampled = true;
        result.executions = 0;
        std::fill(max_rounds.begin(), max_rounds.end(), 0);
        for (int i = 0; i < options.samples; ++i)
            absorb(run(base, config, ids, std::nullopt, mix64(seed, static_cast<std::uint64_t>(i)), options.run));
    }

    // t'_v: running times floored at one round, rounded up to powers of two.
    result.t_running.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        result.t_running[static_cast<std::size_t>(v)] = next_pow2(std::max(1, max_rounds[static_cast<std::size_t>(v)]));

    result.t_star.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(config.graph, v);
        const int own = result.t_running[static_cast<std::size_t>(v)];
        for (int t = 1;; t *= 2) {
            if (c * own > t) continue;
            bool ball_ok = true;
            for (int u = 0; u < n && ball_ok; ++u) {
                if (dist[static_cast<std::size_t>(u)] <= c * t)
                    ball_ok = result.t_running[static_cast<std::size_t>(u)] <= t;
            }
            if (ball_ok) {
                result.t_star[static_cast<std::size_t>(v)] = t;
                break;
            }
        }
    }
    return result;
}

std::map<std::uint64_t, int> tstar_by_id(const TstarResult& result, const IdAssignment& ids) {
    std::map<std::uint64_t, int> out;
    for (std::size_t v = 0; v < ids.ids.size(); ++v) out[ids.ids[v]] = result.t_star[v];
    return out;
}

bool check_splitter_merge(const Language& lang, const Configuration& config, const Splitter& splitter) {
    auto side = [&](const std::vector<int>& u_side) {
        std::vector<int> keep = splitter.s;
        keep.insert(keep.end(), u_side.begin(), u_side.end());
        std::sort(keep.begin(), keep.end());
        if (keep.empty()) fail(errc::disconnected_part, "splitter side is empty");
        std::vector<char> in_set(static_cast<std::size_t>(config.n()), 0);
        for (int v : keep) in_set[static_cast<std::size_t>(v)] = 1;
        if (!subset_connected(config.graph, in_set))
            fail(errc::disconnected_part, "splitter side does not induce a connected subgraph");
        Configuration part;
        part.graph = induced_subgraph(config.graph, keep);
        part.inputs.reserve(keep.size());
        for (int v : keep) part.inputs.push_back(config.input(v));
        return part;
    };
    const Configuration g1 = side(splitter.u1);
    const Configuration g2 = side(splitter.u2);
    if (!lang.member(g1) || !lang.member(g2)) return true;  // implication holds vacuously
    return lang.member(config);
}

}  // namespace locald
