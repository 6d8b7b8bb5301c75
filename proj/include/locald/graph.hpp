#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locald {

/// Connected undirected graph. Nodes are dense indices 0..n-1 carrying a
/// display name; identities live in IdAssignment, never here. Adjacency
/// lists are sorted and symmetric, with no self-loops or parallel edges.
struct Graph {
    std::vector<std::string> names;
    std::vector<std::vector<int>> adj;

    int n() const { return static_cast<int>(names.size()); }
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int node_index(std::string_view name) const;  // unknown_node if absent

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
};

/// Validating constructor from an explicit node list. Throws self_loop,
/// duplicate_edge, unknown_node (edge index out of range), or
/// disconnected_graph.
Graph make_graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

/// Build from named edge pairs; nodes appear in first-mention order.
/// `isolated` declares nodes with no incident edge (a single isolated
/// node is the only connected possibility).
Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& isolated = {});

// Convenience shapes used throughout tests and experiments.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// BFS distances from src; every node is reachable in a valid Graph.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Multi-source BFS; -1 marks unreachable (or sources empty).
std::vector<int> bfs_distances_from_set(const Graph& g, const std::vector<int>& sources);

/// Minimum pairwise distance between two node sets; -1 means "infinite"
/// (either side empty).
int set_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

bool subset_connected(const Graph& g, const std::vector<char>& in_set);

/// Induced subgraph on `keep` (ascending indices). `old_of_new[i]` maps the
/// new index i back to the original node.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace locald
