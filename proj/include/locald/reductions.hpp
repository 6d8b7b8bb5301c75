#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locald/config.hpp"
#include "locald/languages.hpp"

namespace locald {

/// psi(v) = 2^(|Id(v)| + |x(v)|) truncated at cap; |Id| is the minimal
/// binary length, |x| the input length.
struct PsiBudget {
    std::vector<int> psi;
    int cap = 4;
};

PsiBudget psi_budget(const Configuration& config, const IdAssignment& ids, int cap);

struct EnumLimits {
    long max_candidates = 2000000;  // enumeration work guard, fails loudly beyond
};

/// L -> cover: E(v) is the star view at v (center, neighbors, inputs, ids);
/// S(v) enumerates the view-sets of every member configuration with at most
/// psi(v) nodes, inputs of length <= psi(v), and ids of <= psi(v) bits.
/// The instance itself must fit those bounds (psi_cap_exceeded otherwise);
/// enumerations past the guard throw enumeration_too_large.
Configuration reduce_to_cover(const Language& lang, const Configuration& config, const IdAssignment& ids,
                              int cap = 4, EnumLimits limits = {});

/// L -> containment: same construction with radius-t ball views.
Configuration reduce_to_containment(const Language& lang, int t, const Configuration& config,
                                    const IdAssignment& ids, int cap = 4, EnumLimits limits = {});

/// Constant-round per-node transformation preserving membership. The
/// transform is carried as a whole-configuration map whose per-node outputs
/// only use the radius-`rounds` view, matching the normalized two-stage form
/// of a constant-time local algorithm.
struct LocalReduction {
    std::string name;
    const Language* source = nullptr;
    const Language* target = nullptr;
    int rounds = 0;
    std::function<Configuration(const Configuration&, const IdAssignment&)> apply;
};

LocalReduction cover_reduction(const Language& source, int cap = 4, EnumLimits limits = {});
LocalReduction containment_reduction(const Language& source, int t, int cap = 4, EnumLimits limits = {});

struct ReductionCounterexample {
    Configuration config;
    IdAssignment ids;
    bool source_member = false;
    bool target_member = false;
};

struct ReductionCheck {
    bool ok = true;
    long instances = 0;
    std::optional<ReductionCounterexample> counterexample;
};

/// Membership equivalence over every connected configuration up to node_cap
/// (graphs up to isomorphism, inputs over the alphabet, all id injections
/// from the pool). node_cap > 6 throws graph_too_large.
ReductionCheck check_reduction(const LocalReduction& reduction, int node_cap,
                               const std::vector<std::uint64_t>& id_pool,
                               const std::vector<Bitstring>& alphabet);

}  // namespace locald
