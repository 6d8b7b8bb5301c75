#include "locald/bitstring.hpp"

#include <bit>

#include "locald/error.hpp"

namespace locald {

Bitstring Bitstring::parse(std::string_view text) {
    for (char c : text) {
        if (c != '0' && c != '1') fail(errc::malformed_input, "bitstring must contain only 0/1");
    }
    Bitstring s;
    s.bits_.assign(text);
    return s;
}

Bitstring Bitstring::raw(std::string bits) {
    Bitstring s;
    s.bits_ = std::move(bits);
    return s;
}

Bitstring Bitstring::of_nat(std::uint64_t value) {
    if (value == 0) return raw("0");
    std::string out;
    for (int i = bit_length(value) - 1; i >= 0; --i) out.push_back((value >> i) & 1 ? '1' : '0');
    return raw(std::move(out));
}

std::optional<std::uint64_t> Bitstring::to_nat() const {
    if (bits_.empty() || bits_.size() > 64) return std::nullopt;
    if (bits_.size() > 1 && bits_[0] == '0') return std::nullopt;  // leading zero
    std::uint64_t v = 0;
    for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    return v;
}

int bit_length(std::uint64_t value) {
    return 64 - std::countl_zero(value);
}

void BitWriter::nat(std::uint64_t value) {
    // Elias gamma of value+1: k zeros, then the (k+1)-bit binary form.
    const std::uint64_t m = value + 1;
    const int len = bit_length(m);
    for (int i = 0; i < len - 1; ++i) out_.push_back('0');
    for (int i = len - 1; i >= 0; --i) out_.push_back((m >> i) & 1 ? '1' : '0');
}

void BitWriter::field(const Bitstring& s) {
    nat(static_cast<std::uint64_t>(s.size()));
    bits(s);
}

bool BitReader::bit() {
    if (pos_ >= src_.str().size()) fail(errc::malformed_input, "truncated bit encoding");
    return src_.str()[pos_++] == '1';
}

std::uint64_t BitReader::nat() {
    int zeros = 0;
    while (!bit()) {
        if (++zeros > 63) fail(errc::malformed_input, "gamma prefix too long");
    }
    std::uint64_t m = 1;
    for (int i = 0; i < zeros; ++i) m = (m << 1) | static_cast<std::uint64_t>(bit());
    return m - 1;
}

Bitstring BitReader::field() {
    const std::uint64_t len = nat();
    if (len > src_.str().size() - pos_) fail(errc::malformed_input, "truncated field");
    Bitstring s = Bitstring::raw(src_.str().substr(pos_, len));
    pos_ += len;
    return s;
}

void BitReader::expect_done() {
    if (!done()) fail(errc::malformed_input, "trailing bits after encoding");
}

Bitstring encode_list(std::span<const Bitstring> items) {
    BitWriter w;
    w.nat(items.size());
    for (const Bitstring& s : items) w.field(s);
    return w.take();
}

std::vector<Bitstring> decode_list(const Bitstring& encoded) {
    BitReader r(encoded);
    const std::uint64_t count = r.nat();
    if (count > static_cast<std::uint64_t>(encoded.size())) fail(errc::malformed_input, "list count exceeds payload");
    std::vector<Bitstring> items;
    items.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) items.push_back(r.field());
    r.expect_done();
    return items;
}

Bitstring encode_pair(const Bitstring& first, const Bitstring& second) {
    BitWriter w;
    w.field(first);
    w.field(second);
    return w.take();
}

std::pair<Bitstring, Bitstring> decode_pair(const Bitstring& encoded) {
    BitReader r(encoded);
    Bitstring a = r.field();
    Bitstring b = r.field();
    r.expect_done();
    return {std::move(a), std::move(b)};
}

const char* errc_name(errc code) {
    switch (code) {
        case errc::disconnected_graph: return "DisconnectedGraph";
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::unknown_node: return "UnknownNode";
        case errc::disconnected_prefix: return "DisconnectedPrefix";
        case errc::view_too_large: return "ViewTooLarge";
        case errc::graph_too_large: return "GraphTooLarge";
        case errc::round_cap_exceeded: return "RoundCapExceeded";
        case errc::malformed_input: return "MalformedInput";
        case errc::unsupported: return "Unsupported";
        case errc::unknown_language: return "UnknownLanguage";
        case errc::threshold_violated: return "ThresholdViolated";
        case errc::bit_budget_exceeded: return "BitBudgetExceeded";
        case errc::not_in_language: return "NotInLanguage";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::no_accepting_certificate: return "NoAcceptingCertificateFound";
        case errc::psi_cap_exceeded: return "PsiCapExceeded";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::disconnected_part: return "DisconnectedPart";
        case errc::radius_too_large: return "RadiusTooLarge";
        case errc::bad_certificate: return "BadCertificate";
        case errc::io_error: return "IoError";
    }
    return "Error";
}

}  // namespace locald
