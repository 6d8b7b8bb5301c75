#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "locald/config.hpp"
#include "locald/languages.hpp"
#include "locald/runtime.hpp"

namespace locald {

// ---------------------------------------------------------------------------
// Tree scheme: distance certificates, verified in one round.
// ---------------------------------------------------------------------------

/// BFS distances from the first node, encoded as naturals. Throws
/// not_in_language unless the configuration is a tree with empty inputs.
Certificate tree_certify(const Configuration& config);

/// One-round checks: y(v) parses as a non-negative integer; y(v)=0 forces
/// every neighbor to 1; y(v)>0 forces exactly one neighbor to y(v)-1 and all
/// others to y(v)+1. Inputs must be empty. Anything unparseable votes "no".
NodeAlgorithm tree_verifier();

// ---------------------------------------------------------------------------
// Universal scheme: a labeled map of the whole configuration at every node.
// ---------------------------------------------------------------------------

struct MapCertificate {
    int size = 0;
    std::vector<Bitstring> inputs;             // by label, 1-based label l at inputs[l-1]
    std::vector<std::pair<int, int>> edges;    // 1-based labels, first < second
    int own_label = 0;
};

Bitstring encode_map_certificate(const MapCertificate& cert);
MapCertificate decode_map_certificate(const Bitstring& encoded);

/// Map certificate per node: an isomorphic copy of (G,x) with nodes labeled
/// 1..n by ascending id, plus the node's own label.
Certificate universal_certify(const Configuration& config, const IdAssignment& ids);

/// One-round randomized decider: checks own input against the map, agreement
/// and labeling consistency with neighbors, and map membership in the
/// language; then label 1 says "yes" with probability p, everyone else
/// deterministically. A (p, 1-p^2)-decider for any language.
NodeAlgorithm universal_bpnld_decider(const Language& lang, double p);

/// Bipartite double cover with certificates copied to both lifts; the
/// canonical soundness obstacle for the universal decider. Throws
/// disconnected_graph when the input graph is bipartite.
std::pair<Configuration, Certificate> double_cover(const Configuration& config, const Certificate& cert);
IdAssignment double_cover_ids(int doubled_n);

// ---------------------------------------------------------------------------
// Containment scheme.
// ---------------------------------------------------------------------------

/// Certificate fields per node: the candidate configuration (labeled copy of
/// the instance with identity ids), the witnessing candidate set, the node's
/// own candidate id, and the candidate leader id.
Certificate containment_certify(const Configuration& config, const IdAssignment& ids);

/// One-round checks from the completeness proof: neighbor agreement on the
/// candidate configuration/set/leader, E(v) in the set, existence of the
/// leader and of the node's own copy, the set being held by the leader's
/// copy, and the neighborhood check of v against its copy.
NodeAlgorithm containment_verifier();

// ---------------------------------------------------------------------------
// Adversarial certificate search and the size-language fooling attack.
// ---------------------------------------------------------------------------

/// Exhaustively tries every certificate with per-node values 0..value_bound
/// (lexicographic, node 0 most significant) and returns the first one every
/// node accepts, or nullopt. Spaces above space_limit throw
/// search_space_too_large.
std::optional<Certificate> adversarial_certificate_search(const NodeAlgorithm& verifier,
                                                          const Configuration& config, const IdAssignment& ids,
                                                          int value_bound, long space_limit = 4000000);

/// Cycle-position scheme for inp-eq-size: y(v) is a position mod the claimed
/// size, neighbors must sit at adjacent positions and carry the same input.
/// Complete on cycle members; no verifier for this language can be sound,
/// which inpeqsize_fooling demonstrates.
NodeAlgorithm inpeqsize_verifier();

/// Positions around a cycle member (paths of length <= 2 degenerate).
Certificate inpeqsize_certify(const Configuration& config);

struct FoolingReport {
    std::string kind;
    std::vector<std::pair<Configuration, IdAssignment>> member_instances;
    Configuration nonmember_config;
    IdAssignment nonmember_ids;
    std::optional<Certificate> member_certificate;
    std::optional<Certificate> witness_certificate;
    std::vector<Vote> nonmember_outputs;
    bool member_all_accepted = false;
    bool views_indistinguishable = true;
    bool fooled = false;
};

/// The certificate-duplication attack: find an accepting certificate on the
/// cycle C with 2t+1 nodes and inputs 2t+1, copy it onto both halves of the
/// cycle C' with 4t+2 nodes (a non-member), and run the verifier there under
/// a fresh id assignment. Throws no_accepting_certificate when the verifier
/// rejects even the member.
FoolingReport inpeqsize_fooling(const NodeAlgorithm& verifier, int t, std::uint64_t seed);

}  // namespace locald
