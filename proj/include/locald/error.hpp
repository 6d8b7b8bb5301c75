#pragma once

#include <stdexcept>
#include <string>

namespace locald {

enum class errc {
    disconnected_graph,
    self_loop,
    duplicate_edge,
    unknown_node,
    disconnected_prefix,
    view_too_large,
    graph_too_large,
    round_cap_exceeded,
    malformed_input,
    unsupported,
    unknown_language,
    threshold_violated,
    bit_budget_exceeded,
    not_in_language,
    search_space_too_large,
    no_accepting_certificate,
    psi_cap_exceeded,
    enumeration_too_large,
    disconnected_part,
    radius_too_large,
    bad_certificate,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace locald
