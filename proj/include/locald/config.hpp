#pragma once

#include <cstdint>
#include <vector>

#include "locald/bitstring.hpp"
#include "locald/graph.hpp"

namespace locald {

/// The pair (G, x): a connected graph plus a per-node input bitstring.
struct Configuration {
    Graph graph;
    std::vector<Bitstring> inputs;

    int n() const { return graph.n(); }
    const Bitstring& input(int v) const { return inputs[static_cast<std::size_t>(v)]; }
};

Configuration make_configuration(Graph graph, std::vector<Bitstring> inputs);

/// Configuration with every input equal to ε.
Configuration with_empty_inputs(Graph graph);

/// Distinct positive integers, one per node. Node handles stay internal
/// indices so the same configuration can run under many assignments.
struct IdAssignment {
    std::vector<std::uint64_t> ids;

    std::uint64_t id(int v) const { return ids[static_cast<std::size_t>(v)]; }
    int index_of(std::uint64_t id) const;  // -1 if absent
};

IdAssignment make_ids(std::vector<std::uint64_t> ids);

/// ids 1..n in node order.
IdAssignment ascending_ids(int n);

/// A small pool of canonical assignments (ascending, descending, and a
/// seeded shuffle over n+1..2n) used wherever a test quantifies over
/// "all pool assignments".
std::vector<IdAssignment> standard_id_assignments(int n, int count = 3);

/// Per-node advice bitstrings consumed by nondeterministic verifiers.
struct Certificate {
    std::vector<Bitstring> values;
};

/// The ball B_G(v,t): induced subgraph of every node at distance <= t from
/// the center, with inputs and ids carried along. Node order inside
/// `subgraph` is ascending original index, so construction is deterministic.
struct LocalView {
    Graph subgraph;
    int center = 0;
    int radius = 0;
    std::vector<Bitstring> inputs;
    std::vector<std::uint64_t> ids;

    int n() const { return subgraph.n(); }
};

LocalView ball(const Configuration& config, const IdAssignment& ids, int v, int t);

/// Star view: the center, its neighbors, and only the center's edges.
/// This is the radius-1 "local view" that cover elements are made of; it
/// is not an induced ball when neighbors are adjacent to each other.
LocalView star_view(const Configuration& config, const IdAssignment& ids, int v);

Configuration config_of_view(const LocalView& view);

/// Restriction (G[U], x[U]); throws disconnected_prefix when G[U] is not
/// connected. `keep` holds ascending node indices.
Configuration prefix(const Configuration& config, const std::vector<int>& keep);

/// Center-preserving, input-preserving isomorphism test (id-preserving too
/// when match_ids). Brute-force with degree/input pruning; views larger
/// than node_cap throw view_too_large.
bool views_isomorphic(const LocalView& a, const LocalView& b, bool match_ids, int node_cap = 10);

/// Canonical bit encoding of a view with distinct ids: nodes ordered by
/// ascending id, so two views are id-matching-isomorphic iff their
/// encodings are equal.
Bitstring encode_view(const LocalView& view);
LocalView decode_view(const Bitstring& encoded);

/// Tripartition (S, U1, U2) of V with dist(U1,U2) >= radius_bound.
struct Splitter {
    std::vector<int> s;
    std::vector<int> u1;
    std::vector<int> u2;
    int radius_bound = 0;
};

/// Exhaustive enumeration of all qualifying tripartitions (parts may be
/// empty; an empty side makes the distance infinite). Graphs above
/// node_cap throw graph_too_large.
std::vector<Splitter> find_splitters(const Configuration& config, int radius_bound, int node_cap = 8);

/// FNV-1a over a canonical serialization; used for report provenance.
std::uint64_t instance_hash(const Configuration& config, const IdAssignment* ids);

}  // namespace locald
