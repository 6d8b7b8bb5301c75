// Command-line front end: runs deciders and verifiers on JSON instances,
// estimates acceptance probabilities, generates certificates, applies the
// cover/containment reductions, and drives the batch experiments. JSON goes
// to stdout, a short human summary to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "locald/certificates.hpp"
#include "locald/deciders.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/experiments.hpp"
#include "locald/json_io.hpp"
#include "locald/reductions.hpp"

namespace {

using namespace locald;

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("LOCALD_SEED")) return std::strtoull(env, nullptr, 10);
    return flag_seed;
}

NodeAlgorithm decider_by_name(const std::string& name, const std::string& lang, double p, int tstar) {
    if (name == "coloring") return coloring_decider();
    if (name == "mis") return mis_decider();
    if (name == "unique-leader") return unique_leader_decider(p);
    if (name == "tree-verifier") return tree_verifier();
    if (name == "containment-verifier") return containment_verifier();
    if (name == "inpeqsize-verifier") return inpeqsize_verifier();
    if (name == "universal") return universal_bpnld_decider(language(lang), p);
    if (name == "algorithm-d") {
        fail(errc::malformed_input,
             "algorithm-d needs an instance; use `run` which wires t*=" + std::to_string(tstar) + " per node");
    }
    fail(errc::unknown_language, "no decider named '" + name + "'");
}

NodeAlgorithm instance_decider(const std::string& name, const std::string& lang, double p, double q, int tstar,
                               const Instance& instance) {
    if (name == "algorithm-d") {
        const DerandParams params = derand_params(p, q);
        std::map<std::uint64_t, int> by_id;
        for (std::uint64_t id : instance.ids.ids) by_id[id] = tstar;
        return algorithm_d(language(lang), params, std::move(by_id));
    }
    return decider_by_name(name, lang, p, tstar);
}

Certificate certify_by_scheme(const std::string& scheme, const Instance& instance) {
    if (scheme == "tree") return tree_certify(instance.config);
    if (scheme == "universal") return universal_certify(instance.config, instance.ids);
    if (scheme == "containment") return containment_certify(instance.config, instance.ids);
    if (scheme == "inpeqsize") return inpeqsize_certify(instance.config);
    fail(errc::unknown_language, "no certificate scheme named '" + scheme + "'");
}

NodeAlgorithm verifier_by_scheme(const std::string& scheme, const std::string& lang, double p) {
    if (scheme == "tree") return tree_verifier();
    if (scheme == "universal") return universal_bpnld_decider(language(lang), p);
    if (scheme == "containment") return containment_verifier();
    if (scheme == "inpeqsize") return inpeqsize_verifier();
    fail(errc::unknown_language, "no certificate scheme named '" + scheme + "'");
}

void emit(const Json& doc, const std::string& summary) {
    std::cout << doc.dump(2) << '\n';
    std::cerr << summary << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local decision experiments"};
    app.require_subcommand(1);

    std::string graph_path = "-";
    std::string decider_name, scheme, lang_name = "coloring", target = "cover", kind, certificate_path, csv_path;
    double p = 0.6, q = 0.6;
    long trials = 100000;
    std::uint64_t seed = 1;
    int tstar = 1, radius = 1, cap = 4, max_n = 4, leaders_max = 3, round_cap = -1, node_cap = 2;

    auto* cmd_run = app.add_subcommand("run", "run a decider once and report the verdict");
    cmd_run->add_option("--decider", decider_name)->required();
    cmd_run->add_option("--graph", graph_path);
    cmd_run->add_option("--lang", lang_name);
    cmd_run->add_option("--p", p);
    cmd_run->add_option("--q", q);
    cmd_run->add_option("--tstar", tstar);
    cmd_run->add_option("--seed", seed);
    cmd_run->add_option("--round-cap", round_cap);

    auto* cmd_estimate = app.add_subcommand("estimate", "Monte Carlo acceptance probability");
    cmd_estimate->add_option("--decider", decider_name)->required();
    cmd_estimate->add_option("--graph", graph_path);
    cmd_estimate->add_option("--lang", lang_name);
    cmd_estimate->add_option("--p", p);
    cmd_estimate->add_option("--q", q);
    cmd_estimate->add_option("--tstar", tstar);
    cmd_estimate->add_option("--trials", trials);
    cmd_estimate->add_option("--seed", seed);

    auto* cmd_certify = app.add_subcommand("certify", "generate an honest certificate");
    cmd_certify->add_option("--scheme", scheme)->required();
    cmd_certify->add_option("--graph", graph_path);

    auto* cmd_verify = app.add_subcommand("verify", "run a certificate verifier");
    cmd_verify->add_option("--scheme", scheme)->required();
    cmd_verify->add_option("--graph", graph_path);
    cmd_verify->add_option("--certificate", certificate_path);
    cmd_verify->add_option("--lang", lang_name);
    cmd_verify->add_option("--p", p);
    cmd_verify->add_option("--seed", seed);

    auto* cmd_reduce = app.add_subcommand("reduce", "apply the cover/containment reduction");
    cmd_reduce->add_option("--lang", lang_name)->required();
    cmd_reduce->add_option("--target", target)->check(CLI::IsMember({"cover", "containment"}));
    cmd_reduce->add_option("--t", radius);
    cmd_reduce->add_option("--cap", cap);
    cmd_reduce->add_option("--graph", graph_path);

    auto* cmd_experiment = app.add_subcommand("experiment", "batch experiments");
    cmd_experiment->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"threshold", "fool-ld", "fool-nld", "reduce-check", "hereditary-check",
                               "derand-check", "estimate"}));
    cmd_experiment->add_option("--p", p);
    cmd_experiment->add_option("--q", q);
    cmd_experiment->add_option("--trials", trials);
    cmd_experiment->add_option("--seed", seed);
    cmd_experiment->add_option("--lang", lang_name);
    cmd_experiment->add_option("--t", radius);
    cmd_experiment->add_option("--tstar", tstar);
    cmd_experiment->add_option("--cap", cap);
    cmd_experiment->add_option("--max-n", max_n);
    cmd_experiment->add_option("--node-cap", node_cap);
    cmd_experiment->add_option("--leaders-max", leaders_max);
    cmd_experiment->add_option("--csv", csv_path);
    cmd_experiment->add_option("--graph", graph_path);
    cmd_experiment->add_option("--decider", decider_name);

    auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive decider-vs-oracle comparison");
    cmd_sweep->add_option("--decider", decider_name)->required();
    cmd_sweep->add_option("--lang", lang_name)->required();
    cmd_sweep->add_option("--max-n", max_n);
    cmd_sweep->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        seed = effective_seed(seed);

        if (cmd_run->parsed()) {
            const Instance instance = load_instance(graph_path);
            const NodeAlgorithm alg = instance_decider(decider_name, lang_name, p, q, tstar, instance);
            const RunResult result =
                run(alg, instance.config, instance.ids, instance.certificate, seed, RunOptions{round_cap});
            emit(run_result_to_json(instance.config, result),
                 alg.name + ": " + (result.accepted ? "accept" : "reject"));
        } else if (cmd_estimate->parsed()) {
            const Instance instance = load_instance(graph_path);
            const NodeAlgorithm alg = instance_decider(decider_name, lang_name, p, q, tstar, instance);
            const ProbabilityEstimate estimate =
                estimate_acceptance(alg, instance.config, instance.ids, instance.certificate, trials, seed);
            Json doc = estimate_to_json(estimate);
            doc["provenance"] = provenance(seed, Json::object({{"decider", decider_name}, {"trials", trials}}),
                                           &instance.config, &instance.ids);
            emit(doc, alg.name + ": acceptance ~= " + std::to_string(estimate.point));
        } else if (cmd_certify->parsed()) {
            const Instance instance = load_instance(graph_path);
            const Certificate cert = certify_by_scheme(scheme, instance);
            emit(certificate_to_json(instance.config, cert), scheme + ": certificate generated");
        } else if (cmd_verify->parsed()) {
            Instance instance = load_instance(graph_path);
            if (!certificate_path.empty()) {
                std::ifstream in(certificate_path);
                if (!in) fail(errc::io_error, "cannot open '" + certificate_path + "'");
                Json doc = Json::parse(in, nullptr, false);
                if (doc.is_discarded()) fail(errc::malformed_input, "invalid certificate JSON");
                instance.certificate = certificate_from_json(instance.config, doc);
            }
            const NodeAlgorithm alg = verifier_by_scheme(scheme, lang_name, p);
            const RunResult result = run(alg, instance.config, instance.ids, instance.certificate, seed);
            emit(run_result_to_json(instance.config, result),
                 alg.name + ": " + (result.accepted ? "accept" : "reject"));
        } else if (cmd_reduce->parsed()) {
            const Instance instance = load_instance(graph_path);
            const Language& lang = language(lang_name);
            const Configuration image = target == "cover"
                                            ? reduce_to_cover(lang, instance.config, instance.ids, cap)
                                            : reduce_to_containment(lang, radius, instance.config, instance.ids, cap);
            emit(instance_to_json(Instance{image, instance.ids, std::nullopt}),
                 lang.name + " -> " + target + ": reduced instance emitted");
        } else if (cmd_experiment->parsed()) {
            if (kind == "threshold") {
                std::vector<int> ks;
                for (int k = 0; k <= leaders_max; ++k) ks.push_back(k);
                const ThresholdReport report = threshold_experiment(p, q, ks, trials, seed);
                if (!csv_path.empty()) {
                    std::ofstream out(csv_path);
                    out << threshold_report_to_csv(report);
                }
                emit(threshold_report_to_json(report),
                     std::string("threshold: contract ") + (report.contract_holds ? "holds" : "violated"));
            } else if (kind == "fool-ld") {
                const DerandParams params{0.355, 1};  // deliberately small radius for the construction
                std::map<std::uint64_t, int> by_id;
                for (int i = 1; i <= 4 * max_n; ++i) by_id[static_cast<std::uint64_t>(i)] = tstar;
                const NodeAlgorithm alg = algorithm_d(language("tree"), params, std::move(by_id));
                const FoolingReport report = path_cycle_fooling(alg, radius + 2 * tstar, max_n);
                emit(fooling_report_to_json(report),
                     std::string("fool-ld: ") + (report.fooled ? "cycle accepted" : "not fooled"));
            } else if (kind == "fool-nld") {
                const FoolingReport report = inpeqsize_fooling(inpeqsize_verifier(), radius, seed);
                emit(fooling_report_to_json(report),
                     std::string("fool-nld: ") + (report.fooled ? "verifier fooled" : "not fooled"));
            } else if (kind == "reduce-check") {
                const LocalReduction red = target == "containment"
                                               ? containment_reduction(language(lang_name), radius, cap)
                                               : cover_reduction(language(lang_name), cap);
                const ReductionCheck check = check_reduction(
                    red, node_cap, {1, 2, 3}, {Bitstring::raw("0"), Bitstring::raw("1")});
                Json doc;
                doc["kind"] = "reduce-check";
                doc["reduction"] = red.name;
                doc["ok"] = check.ok;
                doc["instances"] = check.instances;
                emit(doc, std::string("reduce-check: ") + (check.ok ? "equivalent" : "counterexample found"));
            } else if (kind == "hereditary-check") {
                const Language& lang = language(lang_name);
                const HereditaryReport report = check_hereditary(lang, node_cap, default_alphabet(lang, node_cap));
                Json doc;
                doc["kind"] = "hereditary-check";
                doc["language"] = lang.name;
                doc["node_cap"] = node_cap;
                doc["hereditary"] = report.hereditary;
                doc["configs_checked"] = report.configs_checked;
                if (report.counterexample) {
                    doc["counterexample"] = instance_to_json(Instance{
                        report.counterexample->config, ascending_ids(report.counterexample->config.n()), std::nullopt});
                    Json keep = Json::array();
                    for (int v : report.counterexample->prefix_nodes) keep.push_back(v);
                    doc["counterexample_prefix"] = std::move(keep);
                }
                emit(doc, std::string("hereditary-check: ") + (report.hereditary ? "hereditary" : "not hereditary"));
            } else if (kind == "derand-check") {
                const Language& lang = language(lang_name);
                const SweepReport report = derand_sweep(lang, derand_params(p, q), tstar, max_n,
                                                        std::min(max_n, 5), default_alphabet(lang, max_n), seed);
                emit(sweep_report_to_json(report),
                     "derand-check: " + std::to_string(report.mismatches) + " mismatches over " +
                         std::to_string(report.instances) + " instances");
            } else if (kind == "estimate") {
                const Instance instance = load_instance(graph_path);
                const NodeAlgorithm alg = instance_decider(decider_name, lang_name, p, q, tstar, instance);
                const ProbabilityEstimate estimate =
                    estimate_acceptance(alg, instance.config, instance.ids, instance.certificate, trials, seed);
                Json doc = estimate_to_json(estimate);
                doc["provenance"] = provenance(seed, Json::object({{"decider", decider_name}, {"trials", trials}}),
                                               &instance.config, &instance.ids);
                emit(doc, "estimate: " + std::to_string(estimate.point));
            }
        } else if (cmd_sweep->parsed()) {
            const Language& lang = language(lang_name);
            const NodeAlgorithm alg = decider_by_name(decider_name, lang_name, p, tstar);
            const SweepReport report =
                sweep_decider_vs_oracle(alg, lang, max_n, default_alphabet(lang, max_n), seed);
            emit(sweep_report_to_json(report),
                 "sweep: " + std::to_string(report.mismatches) + " mismatches over " +
                     std::to_string(report.instances) + " instances");
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
