#include "locald/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "locald/error.hpp"

namespace locald {

bool Graph::has_edge(int u, int v) const {
    const auto& row = adj[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj) twice += static_cast<int>(row.size());
    return twice / 2;
}

int Graph::node_index(std::string_view name) const {
    for (int i = 0; i < n(); ++i) {
        if (names[static_cast<std::size_t>(i)] == name) return i;
    }
    fail(errc::unknown_node, "no node named '" + std::string(name) + "'");
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph make_graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges) {
    if (names.empty()) fail(errc::malformed_input, "graph needs at least one node");
    {
        std::set<std::string> seen;
        for (const auto& name : names) {
            if (!seen.insert(name).second) fail(errc::malformed_input, "duplicate node name '" + name + "'");
        }
    }
    Graph g;
    g.names = std::move(names);
    g.adj.assign(g.names.size(), {});
    std::set<std::pair<int, int>> seen_edges;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) fail(errc::unknown_node, "edge endpoint out of range");
        if (u == v) fail(errc::self_loop, "self-loop at '" + g.names[static_cast<std::size_t>(u)] + "'");
        auto key = std::minmax(u, v);
        if (!seen_edges.insert({key.first, key.second}).second)
            fail(errc::duplicate_edge, "repeated edge " + g.names[static_cast<std::size_t>(u)] + "-" +
                                           g.names[static_cast<std::size_t>(v)]);
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());

    const auto dist = bfs_distances(g, 0);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end())
        fail(errc::disconnected_graph, "graph is not connected");
    return g;
}

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& isolated) {
    if (edges.empty() && isolated.empty()) fail(errc::unknown_node, "no edges and no isolated node declared");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    };
    std::vector<std::pair<int, int>> idx_edges;
    for (const auto& [a, b] : edges) {
        const int first = intern(a);
        const int second = intern(b);
        idx_edges.emplace_back(first, second);
    }
    for (const auto& name : isolated) intern(name);
    return make_graph(std::move(names), idx_edges);
}

static std::vector<std::string> numbered_names(int n, const char* prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(numbered_names(n, "v"), edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return make_graph(numbered_names(n, "v"), edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(numbered_names(leaves + 1, "v"), edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(numbered_names(n, "v"), edges);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    return bfs_distances_from_set(g, {src});
}

std::vector<int> bfs_distances_from_set(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue;
    for (int s : sources) {
        if (s < 0 || s >= g.n()) fail(errc::unknown_node, "BFS source out of range");
        if (dist[static_cast<std::size_t>(s)] == -1) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int set_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return -1;
    const auto dist = bfs_distances_from_set(g, a);
    int best = -1;
    for (int v : b) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d >= 0 && (best == -1 || d < best)) best = d;
    }
    return best;
}

bool subset_connected(const Graph& g, const std::vector<char>& in_set) {
    int start = -1;
    int count = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (in_set[static_cast<std::size_t>(v)]) {
            if (start == -1) start = v;
            ++count;
        }
    }
    if (count == 0) return false;
    std::deque<int> queue{start};
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (in_set[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == count;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> new_of_old(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_of_old[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    Graph sub;
    sub.names.reserve(keep.size());
    for (int v : keep) sub.names.push_back(g.names[static_cast<std::size_t>(v)]);
    sub.adj.assign(keep.size(), {});
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int w : g.adj[static_cast<std::size_t>(keep[i])]) {
            const int j = new_of_old[static_cast<std::size_t>(w)];
            if (j >= 0) sub.adj[i].push_back(j);
        }
    }
    return sub;
}

}  // namespace locald
