// Test-side oracles, independent of the library paths they check.
#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "locald/config.hpp"
#include "locald/graph.hpp"

namespace testsupport {

// Plain BFS written against the adjacency lists only; the oracle for ball()
// and distance-based claims.
inline std::vector<int> oracle_bfs(const locald::Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
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

// Independence + maximality checked directly from the definition.
inline bool oracle_mis(const locald::Configuration& c) {
    const int n = c.n();
    std::vector<bool> selected(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (c.input(v).str() != "0" && c.input(v).str() != "1") return false;
        selected[static_cast<std::size_t>(v)] = c.input(v).str() == "1";
    }
    for (int u = 0; u < n; ++u)
        for (int v : c.graph.adj[static_cast<std::size_t>(u)])
            if (selected[static_cast<std::size_t>(u)] && selected[static_cast<std::size_t>(v)]) return false;
    for (int u = 0; u < n; ++u) {
        if (selected[static_cast<std::size_t>(u)]) continue;
        bool covered = false;
        for (int v : c.graph.adj[static_cast<std::size_t>(u)]) covered = covered || selected[static_cast<std::size_t>(v)];
        if (!covered) return false;
    }
    return true;
}

// Tree test by edge count; graphs here are connected by construction.
inline bool oracle_tree(const locald::Graph& g) {
    int edges = 0;
    for (const auto& row : g.adj) edges += static_cast<int>(row.size());
    return edges / 2 == g.n() - 1;
}

// All tripartitions of {0..n-1} as (part assignment digit vectors).
inline std::vector<std::vector<int>> oracle_tripartitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(digits);
        int i = n - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == 2) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
    }
    return out;
}

inline int oracle_set_distance(const locald::Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    int best = -1;
    for (int u : a) {
        const auto dist = oracle_bfs(g, u);
        for (int v : b) {
            if (dist[static_cast<std::size_t>(v)] >= 0 && (best == -1 || dist[static_cast<std::size_t>(v)] < best))
                best = dist[static_cast<std::size_t>(v)];
        }
    }
    return best;
}

inline locald::Configuration config_of(const locald::Graph& g, const std::vector<std::string>& bits) {
    std::vector<locald::Bitstring> inputs;
    inputs.reserve(bits.size());
    for (const auto& b : bits) inputs.push_back(locald::Bitstring::parse(b));
    return locald::make_configuration(g, std::move(inputs));
}

}  // namespace testsupport
