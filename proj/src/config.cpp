#include "locald/config.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "locald/error.hpp"

namespace locald {

Configuration make_configuration(Graph graph, std::vector<Bitstring> inputs) {
    if (static_cast<int>(inputs.size()) != graph.n())
        fail(errc::malformed_input, "input must be defined for every node");
    return Configuration{std::move(graph), std::move(inputs)};
}

Configuration with_empty_inputs(Graph graph) {
    std::vector<Bitstring> inputs(static_cast<std::size_t>(graph.n()));
    return Configuration{std::move(graph), std::move(inputs)};
}

int IdAssignment::index_of(std::uint64_t id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return static_cast<int>(i);
    }
    return -1;
}

IdAssignment make_ids(std::vector<std::uint64_t> ids) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t v : ids) {
        if (v == 0) fail(errc::malformed_input, "ids must be positive");
        if (!seen.insert(v).second) fail(errc::malformed_input, "ids must be pairwise distinct");
    }
    return IdAssignment{std::move(ids)};
}

IdAssignment ascending_ids(int n) {
    std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), std::uint64_t{1});
    return IdAssignment{std::move(ids)};
}

std::vector<IdAssignment> standard_id_assignments(int n, int count) {
    std::vector<IdAssignment> pool;
    pool.push_back(ascending_ids(n));
    if (count >= 2) {
        std::vector<std::uint64_t> desc(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) desc[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(n - i);
        pool.push_back(make_ids(std::move(desc)));
    }
    if (count >= 3) {
        // Fixed Fisher-Yates over n+1..2n; seed constant so pools are stable.
        std::vector<std::uint64_t> shuffled(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) shuffled[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(n + 1 + i);
        std::uint64_t state = 0xA11CEull;
        auto next = [&state]() {
            state += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        };
        for (int i = n - 1; i > 0; --i)
            std::swap(shuffled[static_cast<std::size_t>(i)],
                      shuffled[static_cast<std::size_t>(next() % static_cast<std::uint64_t>(i + 1))]);
        pool.push_back(make_ids(std::move(shuffled)));
    }
    return pool;
}

static LocalView view_from_nodes(const Configuration& config, const IdAssignment& ids, int v,
                                 std::vector<int> nodes, int radius) {
    LocalView view;
    view.radius = radius;
    view.subgraph = induced_subgraph(config.graph, nodes);
    view.inputs.reserve(nodes.size());
    view.ids.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        view.inputs.push_back(config.input(nodes[i]));
        view.ids.push_back(ids.id(nodes[i]));
        if (nodes[i] == v) view.center = static_cast<int>(i);
    }
    return view;
}

LocalView ball(const Configuration& config, const IdAssignment& ids, int v, int t) {
    if (v < 0 || v >= config.n()) fail(errc::unknown_node, "ball center out of range");
    if (t < 0) fail(errc::malformed_input, "ball radius must be non-negative");
    const auto dist = bfs_distances(config.graph, v);
    std::vector<int> nodes;
    for (int u = 0; u < config.n(); ++u) {
        if (dist[static_cast<std::size_t>(u)] <= t) nodes.push_back(u);
    }
    return view_from_nodes(config, ids, v, std::move(nodes), t);
}

LocalView star_view(const Configuration& config, const IdAssignment& ids, int v) {
    if (v < 0 || v >= config.n()) fail(errc::unknown_node, "star center out of range");
    std::vector<int> nodes{v};
    for (int w : config.graph.adj[static_cast<std::size_t>(v)]) nodes.push_back(w);
    std::sort(nodes.begin(), nodes.end());
    LocalView view = view_from_nodes(config, ids, v, std::move(nodes), 1);
    // Drop edges not incident to the center: a star, not the induced ball.
    Graph star;
    star.names = view.subgraph.names;
    star.adj.assign(static_cast<std::size_t>(view.n()), {});
    for (int w : view.subgraph.adj[static_cast<std::size_t>(view.center)]) {
        star.adj[static_cast<std::size_t>(view.center)].push_back(w);
        star.adj[static_cast<std::size_t>(w)].push_back(view.center);
    }
    for (auto& row : star.adj) std::sort(row.begin(), row.end());
    view.subgraph = std::move(star);
    return view;
}

Configuration config_of_view(const LocalView& view) {
    return Configuration{view.subgraph, view.inputs};
}

Configuration prefix(const Configuration& config, const std::vector<int>& keep) {
    if (keep.empty()) fail(errc::disconnected_prefix, "prefix must keep at least one node");
    std::vector<char> in_set(static_cast<std::size_t>(config.n()), 0);
    for (int v : keep) {
        if (v < 0 || v >= config.n()) fail(errc::unknown_node, "prefix node out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    if (!subset_connected(config.graph, in_set))
        fail(errc::disconnected_prefix, "induced subgraph of the prefix is not connected");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Configuration out;
    out.graph = induced_subgraph(config.graph, sorted);
    out.inputs.reserve(sorted.size());
    for (int v : sorted) out.inputs.push_back(config.input(v));
    return out;
}

namespace {

struct IsoSearch {
    const LocalView& a;
    const LocalView& b;
    bool match_ids;
    std::vector<int> map_ab;  // a-index -> b-index, -1 unset
    std::vector<char> used_b;

    bool compatible(int va, int vb) const {
        if (a.subgraph.degree(va) != b.subgraph.degree(vb)) return false;
        if (a.inputs[static_cast<std::size_t>(va)] != b.inputs[static_cast<std::size_t>(vb)]) return false;
        if (match_ids && a.ids[static_cast<std::size_t>(va)] != b.ids[static_cast<std::size_t>(vb)]) return false;
        // Adjacency with already-mapped nodes must agree both ways.
        for (int u = 0; u < a.n(); ++u) {
            const int mu = map_ab[static_cast<std::size_t>(u)];
            if (mu < 0) continue;
            if (a.subgraph.has_edge(va, u) != b.subgraph.has_edge(vb, mu)) return false;
        }
        return true;
    }

    bool extend(int va) {
        while (va < a.n() && map_ab[static_cast<std::size_t>(va)] >= 0) ++va;
        if (va == a.n()) return true;
        for (int vb = 0; vb < b.n(); ++vb) {
            if (used_b[static_cast<std::size_t>(vb)]) continue;
            if (!compatible(va, vb)) continue;
            map_ab[static_cast<std::size_t>(va)] = vb;
            used_b[static_cast<std::size_t>(vb)] = 1;
            if (extend(va + 1)) return true;
            map_ab[static_cast<std::size_t>(va)] = -1;
            used_b[static_cast<std::size_t>(vb)] = 0;
        }
        return false;
    }
};

}  // namespace

bool views_isomorphic(const LocalView& a, const LocalView& b, bool match_ids, int node_cap) {
    if (a.n() > node_cap || b.n() > node_cap)
        fail(errc::view_too_large, "view exceeds the isomorphism node cap");
    if (a.n() != b.n()) return false;
    if (a.subgraph.edge_count() != b.subgraph.edge_count()) return false;

    IsoSearch search{a, b, match_ids,
                     std::vector<int>(static_cast<std::size_t>(a.n()), -1),
                     std::vector<char>(static_cast<std::size_t>(b.n()), 0)};
    if (!search.compatible(a.center, b.center)) return false;
    search.map_ab[static_cast<std::size_t>(a.center)] = b.center;
    search.used_b[static_cast<std::size_t>(b.center)] = 1;
    return search.extend(0);
}

Bitstring encode_view(const LocalView& view) {
    const int k = view.n();
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return view.ids[static_cast<std::size_t>(x)] < view.ids[static_cast<std::size_t>(y)];
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (view.ids[static_cast<std::size_t>(order[i - 1])] == view.ids[static_cast<std::size_t>(order[i])])
            fail(errc::malformed_input, "view encoding requires distinct ids");
    }
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    BitWriter w;
    w.nat(static_cast<std::uint64_t>(k));
    w.nat(static_cast<std::uint64_t>(pos[static_cast<std::size_t>(view.center)]));
    for (int i = 0; i < k; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        w.nat(view.ids[static_cast<std::size_t>(v)]);
        w.field(view.inputs[static_cast<std::size_t>(v)]);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            w.bit(view.subgraph.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
    return w.take();
}

LocalView decode_view(const Bitstring& encoded) {
    BitReader r(encoded);
    const int k = static_cast<int>(r.nat());
    if (k <= 0 || k > 64) fail(errc::malformed_input, "view size out of range");
    const int center = static_cast<int>(r.nat());
    if (center < 0 || center >= k) fail(errc::malformed_input, "view center out of range");
    LocalView view;
    view.center = center;
    view.radius = 0;  // radius is not part of the wire identity
    view.ids.reserve(static_cast<std::size_t>(k));
    view.inputs.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        view.ids.push_back(r.nat());
        view.inputs.push_back(r.field());
    }
    view.subgraph.names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) view.subgraph.names.push_back("id" + std::to_string(view.ids[static_cast<std::size_t>(i)]));
    view.subgraph.adj.assign(static_cast<std::size_t>(k), {});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (r.bit()) {
                view.subgraph.adj[static_cast<std::size_t>(i)].push_back(j);
                view.subgraph.adj[static_cast<std::size_t>(j)].push_back(i);
            }
    r.expect_done();
    return view;
}

std::vector<Splitter> find_splitters(const Configuration& config, int radius_bound, int node_cap) {
    const int n = config.n();
    if (n > node_cap) fail(errc::graph_too_large, "splitter enumeration capped at " + std::to_string(node_cap));
    if (radius_bound < 0) fail(errc::malformed_input, "radius bound must be non-negative");

    std::vector<Splitter> out;
    std::vector<int> part(static_cast<std::size_t>(n), 0);  // 0=S, 1=U1, 2=U2
    while (true) {
        Splitter sp;
        sp.radius_bound = radius_bound;
        for (int v = 0; v < n; ++v) {
            switch (part[static_cast<std::size_t>(v)]) {
                case 0: sp.s.push_back(v); break;
                case 1: sp.u1.push_back(v); break;
                default: sp.u2.push_back(v); break;
            }
        }
        const int d = set_distance(config.graph, sp.u1, sp.u2);
        if (d == -1 || d >= radius_bound) out.push_back(std::move(sp));

        int i = n - 1;
        while (i >= 0 && part[static_cast<std::size_t>(i)] == 2) part[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++part[static_cast<std::size_t>(i)];
    }
    return out;
}

std::uint64_t instance_hash(const Configuration& config, const IdAssignment* ids) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    feed(static_cast<std::uint64_t>(config.n()));
    for (auto [u, v] : config.graph.edges()) {
        feed(static_cast<std::uint64_t>(u));
        feed(static_cast<std::uint64_t>(v));
    }
    for (const Bitstring& s : config.inputs) {
        feed(static_cast<std::uint64_t>(s.size()));
        for (char c : s.str()) feed(static_cast<std::uint64_t>(c));
    }
    if (ids != nullptr)
        for (std::uint64_t id : ids->ids) feed(id);
    return h;
}

}  // namespace locald
