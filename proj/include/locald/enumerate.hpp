#pragma once

#include <cstdint>
#include <vector>

#include "locald/config.hpp"
#include "locald/graph.hpp"

namespace locald {

/// Compact graph on n <= 8 nodes: bit k of `mask` is the edge (i,j), i<j,
/// in colexicographic order.
struct SmallGraph {
    int n = 0;
    std::uint32_t mask = 0;
};

int edge_bit(int i, int j);  // i < j
bool mask_has_edge(std::uint32_t mask, int i, int j);
bool mask_connected(int n, std::uint32_t mask);

/// Minimal edge mask over all relabelings (partition refinement with
/// branching, exhaustive fallback never needed at n <= 8).
std::uint32_t canonical_mask(int n, std::uint32_t mask);

/// All connected graphs on exactly n nodes up to isomorphism, cached.
/// n > 8 throws graph_too_large.
const std::vector<SmallGraph>& connected_graphs(int n);

Graph to_graph(const SmallGraph& g);

/// Odometer over assignments digits in [0, base); returns false after the
/// last one (all digits reset to 0).
bool next_assignment(std::vector<int>& digits, int base);

/// All ordered injections of k values drawn from pool.
std::vector<std::vector<std::uint64_t>> ordered_injections(const std::vector<std::uint64_t>& pool, int k);

/// All bitstrings of length <= max_len, in canonical (length, lex) order.
std::vector<Bitstring> all_bitstrings_up_to(int max_len);

}  // namespace locald
