#include "locald/json_io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "locald/error.hpp"

namespace locald {

Instance instance_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        fail(errc::malformed_input, "instance document needs a \"nodes\" array");

    std::vector<std::string> names;
    std::vector<Bitstring> inputs;
    std::vector<std::uint64_t> ids;
    std::vector<Bitstring> cert_values;
    bool any_certificate = false;

    for (const auto& node : doc["nodes"]) {
        if (!node.contains("name")) fail(errc::malformed_input, "node without a \"name\"");
        names.push_back(node["name"].get<std::string>());
        inputs.push_back(Bitstring::parse(node.value("input", std::string())));
        ids.push_back(node.value("id", static_cast<std::uint64_t>(names.size())));
        if (node.contains("certificate")) {
            any_certificate = true;
            cert_values.push_back(Bitstring::parse(node["certificate"].get<std::string>()));
        } else {
            cert_values.push_back(Bitstring());
        }
    }

    // node order is the declaration order; edges refer to declared names
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        for (const auto& edge : doc["edges"]) {
            if (!edge.is_array() || edge.size() != 2) fail(errc::malformed_input, "edges must be [a,b] pairs");
            const auto a = index.find(edge[0].get<std::string>());
            const auto b = index.find(edge[1].get<std::string>());
            if (a == index.end() || b == index.end())
                fail(errc::unknown_node, "edge references an undeclared node");
            edges.emplace_back(a->second, b->second);
        }
    }

    Instance instance{make_configuration(make_graph(std::move(names), edges), std::move(inputs)),
                      make_ids(std::move(ids)), std::nullopt};
    if (any_certificate) instance.certificate = Certificate{std::move(cert_values)};
    return instance;
}

Json instance_to_json(const Instance& instance) {
    Json doc;
    doc["nodes"] = Json::array();
    for (int v = 0; v < instance.config.n(); ++v) {
        Json node;
        node["name"] = instance.config.graph.names[static_cast<std::size_t>(v)];
        node["input"] = instance.config.input(v).str();
        node["id"] = instance.ids.id(v);
        if (instance.certificate) node["certificate"] = instance.certificate->values[static_cast<std::size_t>(v)].str();
        doc["nodes"].push_back(std::move(node));
    }
    doc["edges"] = Json::array();
    for (auto [u, v] : instance.config.graph.edges())
        doc["edges"].push_back(Json::array({instance.config.graph.names[static_cast<std::size_t>(u)],
                                            instance.config.graph.names[static_cast<std::size_t>(v)]}));
    return doc;
}

Instance load_instance(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(errc::io_error, "cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(errc::malformed_input, "invalid JSON in '" + path + "'");
    return instance_from_json(doc);
}

Json certificate_to_json(const Configuration& config, const Certificate& cert) {
    Json values = Json::object();
    for (int v = 0; v < config.n(); ++v)
        values[config.graph.names[static_cast<std::size_t>(v)]] = cert.values[static_cast<std::size_t>(v)].str();
    Json doc;
    doc["values"] = std::move(values);
    return doc;
}

Certificate certificate_from_json(const Configuration& config, const Json& doc) {
    if (!doc.contains("values") || !doc["values"].is_object())
        fail(errc::malformed_input, "certificate document needs a \"values\" object");
    Certificate cert;
    cert.values.assign(static_cast<std::size_t>(config.n()), Bitstring());
    for (int v = 0; v < config.n(); ++v) {
        const std::string& name = config.graph.names[static_cast<std::size_t>(v)];
        if (!doc["values"].contains(name)) fail(errc::malformed_input, "certificate missing node '" + name + "'");
        cert.values[static_cast<std::size_t>(v)] = Bitstring::parse(doc["values"][name].get<std::string>());
    }
    return cert;
}

Json run_result_to_json(const Configuration& config, const RunResult& result) {
    Json outputs = Json::object();
    Json rounds = Json::object();
    for (int v = 0; v < config.n(); ++v) {
        const std::string& name = config.graph.names[static_cast<std::size_t>(v)];
        outputs[name] = result.outputs[static_cast<std::size_t>(v)] == Vote::yes ? "yes" : "no";
        rounds[name] = result.rounds_used[static_cast<std::size_t>(v)];
    }
    Json doc;
    doc["outputs"] = std::move(outputs);
    doc["rounds_used"] = std::move(rounds);
    doc["verdict"] = result.accepted ? "accept" : "reject";
    return doc;
}

Json estimate_to_json(const ProbabilityEstimate& estimate) {
    Json doc;
    doc["trials"] = estimate.trials;
    doc["accept_count"] = estimate.accept_count;
    doc["point"] = estimate.point;
    doc["interval"] = Json::object({{"lo", estimate.lo}, {"hi", estimate.hi}});
    doc["confidence"] = 0.99;
    return doc;
}

Json fooling_report_to_json(const FoolingReport& report) {
    Json doc;
    doc["kind"] = report.kind;
    doc["members"] = Json::array();
    for (const auto& [config, ids] : report.member_instances)
        doc["members"].push_back(instance_to_json(Instance{config, ids, std::nullopt}));
    Instance nonmember{report.nonmember_config, report.nonmember_ids, report.witness_certificate};
    doc["nonmember"] = instance_to_json(nonmember);
    if (report.member_certificate)
        doc["member_certificate"] = certificate_to_json(report.member_instances.front().first, *report.member_certificate);
    Json outputs = Json::array();
    for (Vote v : report.nonmember_outputs) outputs.push_back(v == Vote::yes ? "yes" : "no");
    doc["nonmember_outputs"] = std::move(outputs);
    doc["member_all_accepted"] = report.member_all_accepted;
    doc["views_indistinguishable"] = report.views_indistinguishable;
    doc["fooled"] = report.fooled;
    return doc;
}

}  // namespace locald
