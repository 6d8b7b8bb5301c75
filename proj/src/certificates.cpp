#include "locald/certificates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

Certificate tree_certify(const Configuration& config) {
    if (!language("tree").member(config))
        fail(errc::not_in_language, "tree_certify expects a tree with empty inputs");
    const auto dist = bfs_distances(config.graph, 0);
    Certificate cert;
    cert.values.reserve(static_cast<std::size_t>(config.n()));
    for (int d : dist) cert.values.push_back(Bitstring::of_nat(static_cast<std::uint64_t>(d)));
    return cert;
}

NodeAlgorithm tree_verifier() {
    return one_round_algorithm(
        "tree-verifier",
        [](const NodeContext& ctx) { return ctx.certificate ? ctx.certificate->str() : Message(); },
        [](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream&) {
            if (!ctx.input.empty()) return Vote::no;
            if (!ctx.certificate) return Vote::no;
            const auto own = ctx.certificate->to_nat();
            if (!own) return Vote::no;
            std::vector<std::uint64_t> neighbor_values;
            for (const Message& m : msgs) {
                const auto value = Bitstring::parse(m).to_nat();
                if (!value) return Vote::no;
                neighbor_values.push_back(*value);
            }
            if (*own == 0) {
                for (std::uint64_t w : neighbor_values)
                    if (w != 1) return Vote::no;
                return Vote::yes;
            }
            int parents = 0;
            for (std::uint64_t w : neighbor_values) {
                if (w == *own - 1) {
                    ++parents;
                } else if (w != *own + 1) {
                    return Vote::no;
                }
            }
            return parents == 1 ? Vote::yes : Vote::no;
        });
}

// ---------------------------------------------------------------------------
// Universal scheme.
// ---------------------------------------------------------------------------

namespace {

/// Shared payload of a map certificate ((G',x') without the label) so
/// agreement checks are a sub-field comparison.
Bitstring encode_map_payload(const MapCertificate& cert) {
    BitWriter w;
    w.nat(static_cast<std::uint64_t>(cert.size));
    for (const Bitstring& input : cert.inputs) w.field(input);
    w.nat(cert.edges.size());
    for (auto [a, b] : cert.edges) {
        w.nat(static_cast<std::uint64_t>(a - 1));
        w.nat(static_cast<std::uint64_t>(b - 1));
    }
    return w.take();
}

MapCertificate decode_map_payload(const Bitstring& payload) {
    BitReader r(payload);
    MapCertificate cert;
    cert.size = static_cast<int>(r.nat());
    if (cert.size < 1 || cert.size > 4096) fail(errc::bad_certificate, "map size out of range");
    cert.inputs.reserve(static_cast<std::size_t>(cert.size));
    for (int i = 0; i < cert.size; ++i) cert.inputs.push_back(r.field());
    const std::uint64_t edge_count = r.nat();
    if (edge_count > static_cast<std::uint64_t>(cert.size) * static_cast<std::uint64_t>(cert.size))
        fail(errc::bad_certificate, "map edge count out of range");
    std::set<std::pair<int, int>> seen;
    for (std::uint64_t i = 0; i < edge_count; ++i) {
        int a = static_cast<int>(r.nat()) + 1;
        int b = static_cast<int>(r.nat()) + 1;
        if (a < 1 || a > cert.size || b < 1 || b > cert.size || a == b)
            fail(errc::bad_certificate, "map edge endpoints out of range");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) fail(errc::bad_certificate, "duplicate map edge");
        cert.edges.emplace_back(a, b);
    }
    r.expect_done();
    return cert;
}

std::vector<std::vector<int>> map_adjacency(const MapCertificate& cert) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(cert.size));
    for (auto [a, b] : cert.edges) {
        adj[static_cast<std::size_t>(a - 1)].push_back(b);
        adj[static_cast<std::size_t>(b - 1)].push_back(a);
    }
    return adj;
}

bool map_connected(const MapCertificate& cert) {
    const auto adj = map_adjacency(cert);
    std::vector<char> seen(static_cast<std::size_t>(cert.size), 0);
    std::vector<int> queue{1};
    seen[0] = 1;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : adj[static_cast<std::size_t>(queue[head] - 1)]) {
            if (!seen[static_cast<std::size_t>(w - 1)]) {
                seen[static_cast<std::size_t>(w - 1)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == cert.size;
}

Configuration map_config(const MapCertificate& cert) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(cert.size));
    for (int i = 1; i <= cert.size; ++i) names.push_back("m" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : cert.edges) edges.emplace_back(a - 1, b - 1);
    return Configuration{make_graph(std::move(names), edges), cert.inputs};
}

/// Labels 1..n by ascending id.
std::vector<int> labels_by_ascending_id(const IdAssignment& ids) {
    std::vector<int> order(ids.ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return ids.ids[static_cast<std::size_t>(a)] < ids.ids[static_cast<std::size_t>(b)];
    });
    std::vector<int> label(ids.ids.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        label[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
    return label;
}

}  // namespace

Bitstring encode_map_certificate(const MapCertificate& cert) {
    BitWriter w;
    w.field(encode_map_payload(cert));
    w.nat(static_cast<std::uint64_t>(cert.own_label - 1));
    return w.take();
}

MapCertificate decode_map_certificate(const Bitstring& encoded) {
    BitReader r(encoded);
    MapCertificate cert = decode_map_payload(r.field());
    cert.own_label = static_cast<int>(r.nat()) + 1;
    r.expect_done();
    if (cert.own_label < 1 || cert.own_label > cert.size) fail(errc::bad_certificate, "own label out of range");
    return cert;
}

Certificate universal_certify(const Configuration& config, const IdAssignment& ids) {
    const std::vector<int> label = labels_by_ascending_id(ids);
    MapCertificate base;
    base.size = config.n();
    base.inputs.assign(static_cast<std::size_t>(config.n()), Bitstring());
    for (int v = 0; v < config.n(); ++v)
        base.inputs[static_cast<std::size_t>(label[static_cast<std::size_t>(v)] - 1)] = config.input(v);
    for (auto [u, v] : config.graph.edges()) {
        int a = label[static_cast<std::size_t>(u)], b = label[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        base.edges.emplace_back(a, b);
    }
    std::sort(base.edges.begin(), base.edges.end());
    Certificate cert;
    cert.values.reserve(static_cast<std::size_t>(config.n()));
    for (int v = 0; v < config.n(); ++v) {
        MapCertificate mine = base;
        mine.own_label = label[static_cast<std::size_t>(v)];
        cert.values.push_back(encode_map_certificate(mine));
    }
    return cert;
}

NodeAlgorithm universal_bpnld_decider(const Language& lang, double p) {
    if (!(p > 0.0 && p <= 1.0)) fail(errc::malformed_input, "p must be in (0,1]");
    const auto member_fn = lang.member;
    return one_round_algorithm(
        "universal-bpnld[" + lang.name + "]",
        [](const NodeContext& ctx) { return ctx.certificate ? ctx.certificate->str() : Message(); },
        [member_fn, p](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream& coins) {
            if (!ctx.certificate) return Vote::no;
            MapCertificate mine;
            Bitstring my_payload;
            try {
                BitReader r(*ctx.certificate);
                my_payload = r.field();
                mine = decode_map_payload(my_payload);
                mine.own_label = static_cast<int>(r.nat()) + 1;
                r.expect_done();
            } catch (const Error&) {
                return Vote::no;
            }
            if (mine.own_label < 1 || mine.own_label > mine.size) return Vote::no;
            if (!map_connected(mine)) return Vote::no;
            // the input written on the map at my label must be my input
            if (!(mine.inputs[static_cast<std::size_t>(mine.own_label - 1)] == ctx.input)) return Vote::no;

            // neighbors must carry the same map and be labeled consistently
            const auto adj = map_adjacency(mine);
            const auto& my_row = adj[static_cast<std::size_t>(mine.own_label - 1)];
            if (static_cast<int>(msgs.size()) != ctx.degree || ctx.degree != static_cast<int>(my_row.size()))
                return Vote::no;
            std::vector<int> neighbor_labels;
            for (const Message& m : msgs) {
                try {
                    BitReader r(Bitstring::parse(m));
                    const Bitstring payload = r.field();
                    if (!(payload == my_payload)) return Vote::no;
                    const int label = static_cast<int>(r.nat()) + 1;
                    r.expect_done();
                    neighbor_labels.push_back(label);
                } catch (const Error&) {
                    return Vote::no;
                }
            }
            std::sort(neighbor_labels.begin(), neighbor_labels.end());
            std::vector<int> expected = my_row;
            std::sort(expected.begin(), expected.end());
            if (neighbor_labels != expected) return Vote::no;

            // unbounded local computation: judge the map centrally
            if (!member_fn(map_config(mine))) return Vote::no;

            if (mine.own_label != 1) return Vote::yes;
            return coins.bernoulli(p) ? Vote::yes : Vote::no;
        });
}

std::pair<Configuration, Certificate> double_cover(const Configuration& config, const Certificate& cert) {
    const int n = config.n();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(2 * n));
    for (int side = 0; side < 2; ++side)
        for (int v = 0; v < n; ++v)
            names.push_back(config.graph.names[static_cast<std::size_t>(v)] + "#" + std::to_string(side));
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : config.graph.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    Configuration cover;
    cover.graph = make_graph(std::move(names), edges);  // disconnected iff bipartite
    cover.inputs.reserve(static_cast<std::size_t>(2 * n));
    Certificate lifted;
    lifted.values.reserve(static_cast<std::size_t>(2 * n));
    for (int side = 0; side < 2; ++side) {
        for (int v = 0; v < n; ++v) {
            cover.inputs.push_back(config.input(v));
            lifted.values.push_back(cert.values[static_cast<std::size_t>(v)]);
        }
    }
    return {std::move(cover), std::move(lifted)};
}

IdAssignment double_cover_ids(int doubled_n) {
    return ascending_ids(doubled_n);
}

// ---------------------------------------------------------------------------
// Containment scheme.
// ---------------------------------------------------------------------------

namespace {

struct ContainmentPayload {
    MapCertificate candidate;              // labeled candidate configuration
    std::vector<std::uint64_t> candidate_ids;  // by label
    std::vector<Bitstring> candidate_set;  // canonical sorted
    std::uint64_t leader_id = 0;
};

Bitstring encode_containment_payload(const ContainmentPayload& p) {
    BitWriter w;
    w.field(encode_map_payload(p.candidate));
    for (std::uint64_t id : p.candidate_ids) w.nat(id);
    w.field(encode_list(p.candidate_set));
    w.nat(p.leader_id);
    return w.take();
}

ContainmentPayload decode_containment_payload(const Bitstring& payload) {
    BitReader r(payload);
    ContainmentPayload p;
    p.candidate = decode_map_payload(r.field());
    p.candidate_ids.reserve(static_cast<std::size_t>(p.candidate.size));
    for (int i = 0; i < p.candidate.size; ++i) p.candidate_ids.push_back(r.nat());
    p.candidate_set = decode_list(r.field());
    p.leader_id = r.nat();
    r.expect_done();
    std::set<std::uint64_t> distinct(p.candidate_ids.begin(), p.candidate_ids.end());
    if (distinct.size() != p.candidate_ids.size()) fail(errc::bad_certificate, "candidate ids not distinct");
    // a disconnected candidate is not a configuration; without this check a
    // fantasy component could host the leader unchecked
    if (!map_connected(p.candidate)) fail(errc::bad_certificate, "candidate configuration not connected");
    return p;
}

bool set_contains(const std::vector<Bitstring>& sorted_set, const Bitstring& value) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), value,
                              [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
}

}  // namespace

Certificate containment_certify(const Configuration& config, const IdAssignment& ids) {
    if (!member_containment(config))
        fail(errc::not_in_language, "containment_certify expects a containment member");

    std::vector<CoverInput> parsed;
    std::vector<Bitstring> elements;
    for (const Bitstring& x : config.inputs) {
        CoverInput in = decode_cover_input(x);
        elements.push_back(in.element);
        parsed.push_back(std::move(in));
    }
    std::sort(elements.begin(), elements.end(),
              [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    const std::vector<int> label = labels_by_ascending_id(ids);
    // leader: the smallest-labeled node holding a witnessing set
    int leader = -1;
    std::vector<Bitstring> witness;
    for (int rank = 1; rank <= config.n() && leader < 0; ++rank) {
        int v = -1;
        for (int u = 0; u < config.n(); ++u)
            if (label[static_cast<std::size_t>(u)] == rank) v = u;
        for (const auto& set : parsed[static_cast<std::size_t>(v)].sets) {
            const bool superset = std::includes(
                set.begin(), set.end(), elements.begin(), elements.end(),
                [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
            if (superset) {
                leader = v;
                witness = set;
                break;
            }
        }
    }

    ContainmentPayload payload;
    payload.candidate.size = config.n();
    payload.candidate.inputs.assign(static_cast<std::size_t>(config.n()), Bitstring());
    for (int v = 0; v < config.n(); ++v)
        payload.candidate.inputs[static_cast<std::size_t>(label[static_cast<std::size_t>(v)] - 1)] = config.input(v);
    for (auto [u, v] : config.graph.edges()) {
        int a = label[static_cast<std::size_t>(u)], b = label[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        payload.candidate.edges.emplace_back(a, b);
    }
    std::sort(payload.candidate.edges.begin(), payload.candidate.edges.end());
    payload.candidate.own_label = 1;  // unused in the shared payload
    payload.candidate_ids.resize(static_cast<std::size_t>(config.n()));
    for (int i = 0; i < config.n(); ++i)
        payload.candidate_ids[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i + 1);
    payload.candidate_set = witness;
    std::sort(payload.candidate_set.begin(), payload.candidate_set.end(),
              [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
    payload.leader_id = static_cast<std::uint64_t>(label[static_cast<std::size_t>(leader)]);

    const Bitstring shared = encode_containment_payload(payload);
    Certificate cert;
    cert.values.reserve(static_cast<std::size_t>(config.n()));
    for (int v = 0; v < config.n(); ++v) {
        BitWriter w;
        w.field(shared);
        w.nat(static_cast<std::uint64_t>(label[static_cast<std::size_t>(v)]));  // candidate id of own copy
        cert.values.push_back(w.take());
    }
    return cert;
}

NodeAlgorithm containment_verifier() {
    return one_round_algorithm(
        "containment-verifier",
        [](const NodeContext& ctx) {
            BitWriter w;
            w.field(ctx.certificate ? *ctx.certificate : Bitstring());
            w.field(ctx.input);
            return w.take().str();
        },
        [](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream&) {
            if (!ctx.certificate) return Vote::no;
            Bitstring shared;
            ContainmentPayload payload;
            std::uint64_t my_candidate_id = 0;
            CoverInput my_input;
            try {
                BitReader r(*ctx.certificate);
                shared = r.field();
                my_candidate_id = r.nat();
                r.expect_done();
                payload = decode_containment_payload(shared);
                my_input = decode_cover_input(ctx.input);
            } catch (const Error&) {
                return Vote::no;
            }

            // element of every node must lie in the candidate set
            if (!set_contains(payload.candidate_set, my_input.element)) return Vote::no;

            // leader u* and own copy v' must exist on the candidate
            int leader_label = -1, own_label = -1;
            for (int i = 0; i < payload.candidate.size; ++i) {
                if (payload.candidate_ids[static_cast<std::size_t>(i)] == payload.leader_id) leader_label = i + 1;
                if (payload.candidate_ids[static_cast<std::size_t>(i)] == my_candidate_id) own_label = i + 1;
            }
            if (leader_label < 0 || own_label < 0) return Vote::no;

            // the leader's copy must hold the candidate set in its collection
            try {
                const CoverInput leader_input =
                    decode_cover_input(payload.candidate.inputs[static_cast<std::size_t>(leader_label - 1)]);
                if (std::find(leader_input.sets.begin(), leader_input.sets.end(), payload.candidate_set) ==
                    leader_input.sets.end())
                    return Vote::no;
            } catch (const Error&) {
                return Vote::no;
            }

            // neighbors: same shared fields; gather their candidate ids and inputs
            if (static_cast<int>(msgs.size()) != ctx.degree) return Vote::no;
            std::vector<std::pair<std::uint64_t, Bitstring>> neighbor_claims;
            for (const Message& m : msgs) {
                try {
                    BitReader rm(Bitstring::parse(m));
                    const Bitstring their_cert = rm.field();
                    const Bitstring their_input = rm.field();
                    rm.expect_done();
                    BitReader rc(their_cert);
                    const Bitstring their_shared = rc.field();
                    const std::uint64_t their_candidate_id = rc.nat();
                    rc.expect_done();
                    if (!(their_shared == shared)) return Vote::no;
                    neighbor_claims.emplace_back(their_candidate_id, their_input);
                } catch (const Error&) {
                    return Vote::no;
                }
            }

            // neighborhood check of v against its copy v'
            if (!(payload.candidate.inputs[static_cast<std::size_t>(own_label - 1)] == ctx.input)) return Vote::no;
            const auto adj = map_adjacency(payload.candidate);
            const auto& copy_row = adj[static_cast<std::size_t>(own_label - 1)];
            if (static_cast<int>(copy_row.size()) != ctx.degree) return Vote::no;
            std::vector<std::uint64_t> expected_ids;
            for (int w : copy_row)
                expected_ids.push_back(payload.candidate_ids[static_cast<std::size_t>(w - 1)]);
            std::sort(expected_ids.begin(), expected_ids.end());
            std::vector<std::uint64_t> seen_ids;
            for (const auto& [cid, input] : neighbor_claims) seen_ids.push_back(cid);
            std::sort(seen_ids.begin(), seen_ids.end());
            if (expected_ids != seen_ids) return Vote::no;
            for (const auto& [cid, input] : neighbor_claims) {
                int their_label = -1;
                for (int i = 0; i < payload.candidate.size; ++i)
                    if (payload.candidate_ids[static_cast<std::size_t>(i)] == cid) their_label = i + 1;
                if (!(payload.candidate.inputs[static_cast<std::size_t>(their_label - 1)] == input)) return Vote::no;
            }
            return Vote::yes;
        });
}

// ---------------------------------------------------------------------------
// Adversarial search and the duplication attack.
// ---------------------------------------------------------------------------

std::optional<Certificate> adversarial_certificate_search(const NodeAlgorithm& verifier,
                                                          const Configuration& config, const IdAssignment& ids,
                                                          int value_bound, long space_limit) {
    if (value_bound < 0) fail(errc::malformed_input, "value bound must be non-negative");
    const int n = config.n();
    double space = 1.0;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(value_bound + 1);
    if (space > static_cast<double>(space_limit))
        fail(errc::search_space_too_large, "certificate space has more than " + std::to_string(space_limit) + " points");

    std::vector<Bitstring> values;
    for (int v = 0; v <= value_bound; ++v) values.push_back(Bitstring::of_nat(static_cast<std::uint64_t>(v)));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    do {
        Certificate cert;
        cert.values.reserve(static_cast<std::size_t>(n));
        for (int d : digits) cert.values.push_back(values[static_cast<std::size_t>(d)]);
        if (run(verifier, config, ids, cert, 0).accepted) return cert;
    } while (next_assignment(digits, value_bound + 1));
    return std::nullopt;
}

NodeAlgorithm inpeqsize_verifier() {
    return one_round_algorithm(
        "inp-eq-size-verifier",
        [](const NodeContext& ctx) {
            BitWriter w;
            w.field(ctx.certificate ? *ctx.certificate : Bitstring());
            w.field(ctx.input);
            return w.take().str();
        },
        [](const NodeContext& ctx, const std::vector<Message>& msgs, RandomStream&) {
            if (!ctx.certificate) return Vote::no;
            const auto claimed = ctx.input.to_nat();
            if (!claimed || *claimed == 0) return Vote::no;
            const auto position = ctx.certificate->to_nat();
            if (!position || *position >= *claimed) return Vote::no;

            std::vector<std::uint64_t> neighbor_positions;
            for (const Message& m : msgs) {
                try {
                    BitReader r(Bitstring::parse(m));
                    const auto their_position = r.field().to_nat();
                    const Bitstring their_input = r.field();
                    r.expect_done();
                    if (!their_position || !(their_input == ctx.input)) return Vote::no;
                    neighbor_positions.push_back(*their_position);
                } catch (const Error&) {
                    return Vote::no;
                }
            }

            const std::uint64_t n = *claimed;
            if (n == 1) return ctx.degree == 0 ? Vote::yes : Vote::no;
            if (n == 2) {
                if (ctx.degree != 1) return Vote::no;
                return neighbor_positions[0] == 1 - *position ? Vote::yes : Vote::no;
            }
            if (ctx.degree != 2) return Vote::no;
            std::vector<std::uint64_t> expected{(*position + 1) % n, (*position + n - 1) % n};
            std::sort(expected.begin(), expected.end());
            std::sort(neighbor_positions.begin(), neighbor_positions.end());
            return neighbor_positions == expected ? Vote::yes : Vote::no;
        });
}

Certificate inpeqsize_certify(const Configuration& config) {
    if (!language("inp-eq-size").member(config))
        fail(errc::not_in_language, "inputs do not spell the graph size");
    const int n = config.n();
    Certificate cert;
    cert.values.assign(static_cast<std::size_t>(n), Bitstring());
    if (n == 1) {
        cert.values[0] = Bitstring::of_nat(0);
        return cert;
    }
    for (int v = 0; v < n; ++v)
        if (config.graph.degree(v) != (n == 2 ? 1 : 2))
            fail(errc::not_in_language, "position certificates exist for cycle instances only");
    // walk the cycle from node 0
    int prev = -1, current = 0;
    for (int pos = 0; pos < n; ++pos) {
        cert.values[static_cast<std::size_t>(current)] = Bitstring::of_nat(static_cast<std::uint64_t>(pos));
        int next = -1;
        for (int w : config.graph.adj[static_cast<std::size_t>(current)])
            if (w != prev) next = w;
        prev = current;
        current = next < 0 ? prev : next;
    }
    return cert;
}

FoolingReport inpeqsize_fooling(const NodeAlgorithm& verifier, int t, std::uint64_t) {
    if (t < 1) fail(errc::malformed_input, "the attack needs t >= 1");
    const int n = 2 * t + 1;

    Configuration member;
    member.graph = cycle_graph(n);
    member.inputs.assign(static_cast<std::size_t>(n), Bitstring::of_nat(static_cast<std::uint64_t>(n)));
    const IdAssignment member_ids = ascending_ids(n);

    const auto found = adversarial_certificate_search(verifier, member, member_ids, n - 1);
    if (!found)
        fail(errc::no_accepting_certificate, "verifier rejects the member cycle for every certificate");

    Configuration nonmember;
    nonmember.graph = cycle_graph(2 * n);
    nonmember.inputs.assign(static_cast<std::size_t>(2 * n), Bitstring::of_nat(static_cast<std::uint64_t>(n)));
    const IdAssignment fresh_ids = standard_id_assignments(2 * n).back();

    Certificate duplicated;
    duplicated.values.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) duplicated.values.push_back(found->values[static_cast<std::size_t>(i % n)]);

    const RunResult member_run = run(verifier, member, member_ids, *found, 1);
    const RunResult outcome = run(verifier, nonmember, fresh_ids, duplicated, 1);

    FoolingReport report;
    report.kind = "inp-eq-size-duplication";
    report.member_instances.emplace_back(member, member_ids);
    report.nonmember_config = nonmember;
    report.nonmember_ids = fresh_ids;
    report.member_certificate = *found;
    report.witness_certificate = duplicated;
    report.nonmember_outputs = outcome.outputs;
    report.member_all_accepted = member_run.accepted;
    report.fooled = outcome.accepted;
    return report;
}

}  // namespace locald
