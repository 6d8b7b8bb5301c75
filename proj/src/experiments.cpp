#include "locald/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

ThresholdReport threshold_experiment(double p, double q, const std::vector<int>& leaders, long trials,
                                     std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0 && q > 0.0 && q <= 1.0)) fail(errc::malformed_input, "p,q must be in (0,1]");
    ThresholdReport report;
    report.p = p;
    report.q = q;
    report.trials = trials;
    report.seed = seed;

    const NodeAlgorithm decider = unique_leader_decider(p);
    bool holds = true;
    for (int k : leaders) {
        if (k < 0) fail(errc::malformed_input, "leader count must be non-negative");
        const int n = std::max(4, k);
        Configuration config;
        config.graph = path_graph(n);
        config.inputs.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) config.inputs.push_back(Bitstring::raw(v < k ? "1" : "0"));

        ThresholdRow row;
        row.leaders = k;
        row.nodes = n;
        row.analytic = std::pow(p, k);
        row.estimate = estimate_acceptance(decider, config, ascending_ids(n), std::nullopt, trials,
                                           mix64(seed, static_cast<std::uint64_t>(k)));
        report.rows.push_back(row);

        // contract on the analytic values: members need acceptance >= p,
        // non-members rejection >= q
        if (k <= 1 && row.analytic < p - 1e-12) holds = false;
        if (k >= 2 && 1.0 - row.analytic < q - 1e-12) holds = false;
    }
    report.contract_holds = holds;
    return report;
}

FoolingReport path_cycle_fooling(const NodeAlgorithm& decider, int t, int n, RunOptions options) {
    if (n < 1) fail(errc::malformed_input, "n must be positive");
    if (t >= n) fail(errc::radius_too_large, "the indistinguishability ranges need t < n");
    const int total = 4 * n;

    Configuration p1;
    p1.graph = path_graph(total);
    p1.inputs.assign(static_cast<std::size_t>(total), Bitstring());
    IdAssignment p1_ids = ascending_ids(total);

    Configuration p2 = p1;
    std::vector<std::uint64_t> rotated(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        rotated[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>((2 * n + i) % total + 1);
    IdAssignment p2_ids = make_ids(std::move(rotated));

    Configuration cycle;
    cycle.graph = cycle_graph(total);
    cycle.inputs.assign(static_cast<std::size_t>(total), Bitstring());
    IdAssignment cycle_ids = ascending_ids(total);

    // Each cycle node must look exactly like a mid-path node of P1 or P2
    // (ids included): ids n+1..3n sit mid-P1, the rest mid-P2.
    bool indistinguishable = true;
    for (int j = 0; j < total && indistinguishable; ++j) {
        const int id = j + 1;
        const LocalView cycle_view = ball(cycle, cycle_ids, j, t);
        LocalView path_view;
        if (id >= n + 1 && id <= 3 * n) {
            path_view = ball(p1, p1_ids, id - 1, t);
        } else {
            const int position = id >= 3 * n + 1 ? id - (2 * n + 1) : id + 2 * n - 1;
            path_view = ball(p2, p2_ids, position, t);
        }
        indistinguishable = views_isomorphic(cycle_view, path_view, true, 2 * t + 1);
    }

    const RunResult on_p1 = run(decider, p1, p1_ids, std::nullopt, 7, options);
    const RunResult on_p2 = run(decider, p2, p2_ids, std::nullopt, 7, options);
    const RunResult on_cycle = run(decider, cycle, cycle_ids, std::nullopt, 7, options);

    FoolingReport report;
    report.kind = "path-cycle";
    report.member_instances.emplace_back(std::move(p1), std::move(p1_ids));
    report.member_instances.emplace_back(std::move(p2), std::move(p2_ids));
    report.nonmember_config = std::move(cycle);
    report.nonmember_ids = std::move(cycle_ids);
    report.nonmember_outputs = on_cycle.outputs;
    report.member_all_accepted = on_p1.accepted && on_p2.accepted;
    report.views_indistinguishable = indistinguishable;
    report.fooled = report.member_all_accepted && on_cycle.accepted;
    return report;
}

namespace {

SweepReport sweep_impl(const std::string& decider_name, const Language& lang, int max_n,
                       const std::vector<Bitstring>& alphabet, std::uint64_t seed,
                       const std::function<bool(const Configuration&, const IdAssignment&)>& decide) {
    SweepReport report;
    report.decider = decider_name;
    report.language = lang.name;
    report.max_n = max_n;
    report.seed = seed;
    for (int n = 1; n <= max_n; ++n) {
        const IdAssignment ids = ascending_ids(n);
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Graph graph = to_graph(sg);
            std::vector<int> digits(static_cast<std::size_t>(n), 0);
            do {
                Configuration config;
                config.graph = graph;
                config.inputs.reserve(static_cast<std::size_t>(n));
                for (int d : digits) config.inputs.push_back(alphabet[static_cast<std::size_t>(d)]);
                ++report.instances;
                const bool oracle = lang.member(config);
                const bool decided = decide(config, ids);
                if (oracle != decided) {
                    ++report.mismatches;
                    if (!report.first_mismatch) report.first_mismatch = SweepMismatch{config, oracle, decided};
                }
            } while (next_assignment(digits, static_cast<int>(alphabet.size())));
        }
    }
    return report;
}

}  // namespace

SweepReport sweep_decider_vs_oracle(const NodeAlgorithm& decider, const Language& lang, int max_n,
                                    const std::vector<Bitstring>& alphabet, std::uint64_t seed) {
    return sweep_impl(decider.name, lang, max_n, alphabet, seed,
                      [&](const Configuration& config, const IdAssignment& ids) {
                          return run(decider, config, ids, std::nullopt, seed).accepted;
                      });
}

SweepReport derand_sweep(const Language& lang, const DerandParams& params, int tstar, int max_n,
                         int sim_max_n, const std::vector<Bitstring>& alphabet, std::uint64_t seed) {
    return sweep_impl("algorithm-d[" + lang.name + "]", lang, max_n, alphabet, seed,
                      [&](const Configuration& config, const IdAssignment& ids) {
                          const std::vector<int> per_node(static_cast<std::size_t>(config.n()), tstar);
                          const auto reference = algorithm_d_reference(lang, params, per_node, config);
                          const bool ref_verdict = verdict(reference);
                          if (config.n() <= sim_max_n) {
                              std::map<std::uint64_t, int> by_id;
                              for (std::uint64_t id : ids.ids) by_id[id] = tstar;
                              const NodeAlgorithm alg = algorithm_d(lang, params, std::move(by_id));
                              const RunResult result =
                                  run(alg, config, ids, std::nullopt, seed, RunOptions{2 * config.n() + 4});
                              if (result.accepted != ref_verdict || result.outputs != reference)
                                  fail(errc::malformed_input,
                                       "algorithm_d simulation disagrees with its normal form");
                          }
                          return ref_verdict;
                      });
}

Json threshold_report_to_json(const ThresholdReport& report) {
    Json rows = Json::array();
    for (const ThresholdRow& row : report.rows) {
        Json entry;
        entry["leaders"] = row.leaders;
        entry["nodes"] = row.nodes;
        entry["analytic"] = row.analytic;
        entry["estimate"] = estimate_to_json(row.estimate);
        rows.push_back(std::move(entry));
    }
    Json doc;
    doc["kind"] = "threshold";
    doc["p"] = report.p;
    doc["q"] = report.q;
    doc["trials"] = report.trials;
    doc["contract_holds"] = report.contract_holds;
    doc["rows"] = std::move(rows);
    doc["provenance"] = provenance(report.seed,
                                   Json::object({{"p", report.p}, {"q", report.q}, {"trials", report.trials}}),
                                   nullptr, nullptr);
    return doc;
}

std::string threshold_report_to_csv(const ThresholdReport& report) {
    std::ostringstream out;
    out << "leaders,nodes,trials,analytic,point,wilson_lo,wilson_hi\n";
    for (const ThresholdRow& row : report.rows) {
        out << row.leaders << ',' << row.nodes << ',' << row.estimate.trials << ',' << row.analytic << ','
            << row.estimate.point << ',' << row.estimate.lo << ',' << row.estimate.hi << '\n';
    }
    return out.str();
}

Json sweep_report_to_json(const SweepReport& report) {
    Json doc;
    doc["kind"] = "sweep";
    doc["decider"] = report.decider;
    doc["language"] = report.language;
    doc["max_n"] = report.max_n;
    doc["instances"] = report.instances;
    doc["provenance"] = provenance(report.seed,
                                   Json::object({{"decider", report.decider}, {"language", report.language},
                                                 {"max_n", report.max_n}}),
                                   nullptr, nullptr);
    doc["mismatches"] = report.mismatches;
    if (report.first_mismatch) {
        Json mismatch;
        mismatch["instance"] = instance_to_json(
            Instance{report.first_mismatch->config, ascending_ids(report.first_mismatch->config.n()), std::nullopt});
        mismatch["oracle"] = report.first_mismatch->oracle;
        mismatch["decider"] = report.first_mismatch->decided;
        doc["first_mismatch"] = std::move(mismatch);
    }
    return doc;
}

Json provenance(std::uint64_t seed, const Json& parameters, const Configuration* config,
                const IdAssignment* ids) {
    Json doc;
    doc["seed"] = seed;
    doc["parameters"] = parameters;
    if (config != nullptr) doc["instance_hash"] = instance_hash(*config, ids);
    return doc;
}

}  // namespace locald
