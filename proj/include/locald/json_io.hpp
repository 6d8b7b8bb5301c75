#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "locald/certificates.hpp"
#include "locald/config.hpp"
#include "locald/runtime.hpp"

namespace locald {

using Json = nlohmann::ordered_json;

/// One graph/configuration document:
///   {"nodes":[{"name":str,"input":"0101","id":int}],"edges":[[str,str]]}
/// Node "input" defaults to the empty string, "id" to 1..n in listing order.
/// A per-node "certificate" field is accepted and emitted when present.
struct Instance {
    Configuration config;
    IdAssignment ids;
    std::optional<Certificate> certificate;
};

Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& instance);

/// Reads an instance document from a file path, or stdin when path is "-".
Instance load_instance(const std::string& path);

Json certificate_to_json(const Configuration& config, const Certificate& cert);
Certificate certificate_from_json(const Configuration& config, const Json& doc);

Json run_result_to_json(const Configuration& config, const RunResult& result);
Json estimate_to_json(const ProbabilityEstimate& estimate);
Json fooling_report_to_json(const FoolingReport& report);

}  // namespace locald
