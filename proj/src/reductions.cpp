#include "locald/reductions.hpp"

#include <algorithm>
#include <map>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

PsiBudget psi_budget(const Configuration& config, const IdAssignment& ids, int cap) {
    if (cap < 1) fail(errc::malformed_input, "psi cap must be positive");
    PsiBudget budget;
    budget.cap = cap;
    budget.psi.reserve(static_cast<std::size_t>(config.n()));
    for (int v = 0; v < config.n(); ++v) {
        const int exponent = bit_length(ids.id(v)) + config.input(v).size();
        const long raw = exponent >= 31 ? static_cast<long>(cap) + 1 : (1L << exponent);
        budget.psi.push_back(static_cast<int>(std::min<long>(raw, cap)));
    }
    return budget;
}

namespace {

enum class ViewKind { star, ball };

Bitstring node_view_encoding(const Configuration& config, const IdAssignment& ids, int v, ViewKind kind,
                             int radius) {
    if (kind == ViewKind::star) return encode_view(star_view(config, ids, v));
    return encode_view(ball(config, ids, v, radius));
}

std::vector<Bitstring> view_set(const Configuration& config, const IdAssignment& ids, ViewKind kind,
                                int radius) {
    std::vector<Bitstring> set;
    set.reserve(static_cast<std::size_t>(config.n()));
    for (int v = 0; v < config.n(); ++v) set.push_back(node_view_encoding(config, ids, v, kind, radius));
    std::sort(set.begin(), set.end(), [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

double candidate_count(int bound) {
    const double strings = static_cast<double>((1L << (bound + 1)) - 1);
    const double id_pool = static_cast<double>((1L << bound) - 1);
    double total = 0;
    for (int k = 1; k <= bound && k <= 8; ++k) {
        double graphs = static_cast<double>(connected_graphs(k).size());
        double injections = 1;
        for (int i = 0; i < k; ++i) injections *= id_pool - i;
        double inputs = 1;
        for (int i = 0; i < k; ++i) inputs *= strings;
        total += graphs * inputs * injections;
    }
    return total;
}

/// All view-sets of member configurations with k <= bound nodes, input
/// length <= bound, id bit-length <= bound. Candidate graphs run up to
/// isomorphism; a view-set is invariant under relabeling, so this covers
/// every labeled candidate.
std::vector<std::vector<Bitstring>> member_view_sets(const Language& lang, ViewKind kind, int radius,
                                                     int bound, const EnumLimits& limits) {
    if (bound > 8) fail(errc::enumeration_too_large, "psi bound beyond the 8-node graph enumeration");
    if (candidate_count(bound) > static_cast<double>(limits.max_candidates))
        fail(errc::enumeration_too_large,
             "candidate enumeration for psi bound " + std::to_string(bound) + " exceeds the guard");

    const std::vector<Bitstring> strings = all_bitstrings_up_to(bound);
    std::vector<std::uint64_t> id_pool;
    for (std::uint64_t id = 1; id < (1ull << bound); ++id) id_pool.push_back(id);

    std::vector<std::vector<Bitstring>> family;
    for (int k = 1; k <= bound; ++k) {
        const auto injections = ordered_injections(id_pool, k);
        for (const SmallGraph& sg : connected_graphs(k)) {
            const Graph graph = to_graph(sg);
            std::vector<int> digits(static_cast<std::size_t>(k), 0);
            do {
                Configuration candidate;
                candidate.graph = graph;
                candidate.inputs.reserve(static_cast<std::size_t>(k));
                for (int d : digits) candidate.inputs.push_back(strings[static_cast<std::size_t>(d)]);
                if (!lang.member(candidate)) continue;
                for (const auto& assignment : injections)
                    family.push_back(view_set(candidate, IdAssignment{assignment}, kind, radius));
            } while (next_assignment(digits, static_cast<int>(strings.size())));
        }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

Configuration reduce_impl(const Language& lang, const Configuration& config, const IdAssignment& ids,
                          ViewKind kind, int radius, int cap, const EnumLimits& limits) {
    const PsiBudget budget = psi_budget(config, ids, cap);
    const int reach = *std::max_element(budget.psi.begin(), budget.psi.end());
    if (config.n() > reach)
        fail(errc::psi_cap_exceeded, "instance has more nodes than the psi bound covers");
    for (int v = 0; v < config.n(); ++v) {
        if (bit_length(ids.id(v)) > reach)
            fail(errc::psi_cap_exceeded, "id " + std::to_string(ids.id(v)) + " needs more bits than the cap allows");
        if (config.input(v).size() > reach)
            fail(errc::psi_cap_exceeded, "input at node " + std::to_string(v) + " is longer than the cap allows");
    }

    std::map<int, std::vector<std::vector<Bitstring>>> family_by_bound;
    Configuration image;
    image.graph = config.graph;
    image.inputs.reserve(static_cast<std::size_t>(config.n()));
    for (int v = 0; v < config.n(); ++v) {
        const int bound = budget.psi[static_cast<std::size_t>(v)];
        auto it = family_by_bound.find(bound);
        if (it == family_by_bound.end())
            it = family_by_bound.emplace(bound, member_view_sets(lang, kind, radius, bound, limits)).first;
        CoverInput input;
        input.element = node_view_encoding(config, ids, v, kind, radius);
        input.sets = it->second;
        image.inputs.push_back(encode_cover_input(input));
    }
    return image;
}

}  // namespace

Configuration reduce_to_cover(const Language& lang, const Configuration& config, const IdAssignment& ids,
                              int cap, EnumLimits limits) {
    return reduce_impl(lang, config, ids, ViewKind::star, 1, cap, limits);
}

Configuration reduce_to_containment(const Language& lang, int t, const Configuration& config,
                                    const IdAssignment& ids, int cap, EnumLimits limits) {
    if (t < 0) fail(errc::malformed_input, "verification radius must be non-negative");
    return reduce_impl(lang, config, ids, ViewKind::ball, t, cap, limits);
}

LocalReduction cover_reduction(const Language& source, int cap, EnumLimits limits) {
    LocalReduction red;
    red.name = source.name + "->cover";
    red.source = &source;
    red.target = &language("cover");
    red.rounds = 1;
    red.apply = [&source, cap, limits](const Configuration& config, const IdAssignment& ids) {
        return reduce_to_cover(source, config, ids, cap, limits);
    };
    return red;
}

LocalReduction containment_reduction(const Language& source, int t, int cap, EnumLimits limits) {
    LocalReduction red;
    red.name = source.name + "->containment";
    red.source = &source;
    red.target = &language("containment");
    red.rounds = t;
    red.apply = [&source, t, cap, limits](const Configuration& config, const IdAssignment& ids) {
        return reduce_to_containment(source, t, config, ids, cap, limits);
    };
    return red;
}

ReductionCheck check_reduction(const LocalReduction& reduction, int node_cap,
                               const std::vector<std::uint64_t>& id_pool,
                               const std::vector<Bitstring>& alphabet) {
    if (node_cap > 6) fail(errc::graph_too_large, "reduction check capped at 6 nodes");
    if (alphabet.empty()) fail(errc::malformed_input, "reduction check needs a nonempty alphabet");

    ReductionCheck check;
    for (int n = 1; n <= node_cap; ++n) {
        const auto assignments = ordered_injections(id_pool, n);
        if (assignments.empty()) fail(errc::malformed_input, "id pool smaller than the node count");
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Graph graph = to_graph(sg);
            std::vector<int> digits(static_cast<std::size_t>(n), 0);
            do {
                Configuration config;
                config.graph = graph;
                config.inputs.reserve(static_cast<std::size_t>(n));
                for (int d : digits) config.inputs.push_back(alphabet[static_cast<std::size_t>(d)]);
                for (const auto& raw_ids : assignments) {
                    const IdAssignment ids{raw_ids};
                    ++check.instances;
                    const bool source_member = reduction.source->member(config);
                    const bool target_member = reduction.target->member(reduction.apply(config, ids));
                    if (source_member != target_member) {
                        check.ok = false;
                        check.counterexample = ReductionCounterexample{config, ids, source_member, target_member};
                        return check;
                    }
                }
            } while (next_assignment(digits, static_cast<int>(alphabet.size())));
        }
    }
    return check;
}

}  // namespace locald
