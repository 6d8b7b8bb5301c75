#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locald {

/// An ordered sequence of bits. The empty string is the empty input ε.
/// Stored as '0'/'1' characters, which is also the serialized form.
class Bitstring {
public:
    Bitstring() = default;

    /// Validates that `text` contains only '0'/'1'. Throws malformed_input.
    static Bitstring parse(std::string_view text);

    /// Unchecked construction from a string already known to be 0/1.
    static Bitstring raw(std::string bits);

    /// Canonical encoding of a non-negative integer: "0" for zero,
    /// minimal binary without leading zeros otherwise.
    static Bitstring of_nat(std::uint64_t value);

    bool empty() const { return bits_.empty(); }
    int size() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_[static_cast<std::size_t>(i)] == '1'; }
    const std::string& str() const { return bits_; }

    /// Strict inverse of of_nat: rejects ε and leading zeros.
    std::optional<std::uint64_t> to_nat() const;

    bool operator==(const Bitstring&) const = default;

    /// Canonical order: by length first, then lexicographic.
    friend bool operator<(const Bitstring& a, const Bitstring& b) {
        if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
        return a.bits_ < b.bits_;
    }
    friend bool canonical_less(const Bitstring& a, const Bitstring& b) { return a < b; }

private:
    std::string bits_;
};

/// Number of bits in the minimal binary representation; bit_length(0) = 0.
int bit_length(std::uint64_t value);

/// Bit-level writer/reader used for the self-delimiting wire encodings
/// (cover inputs, local views, certificates). Numbers use Elias gamma
/// on n+1 so zero is representable.
class BitWriter {
public:
    void bit(bool b) { out_.push_back(b ? '1' : '0'); }
    void nat(std::uint64_t value);
    void bits(const Bitstring& s) { out_ += s.str(); }
    void field(const Bitstring& s);  // nat(len) + raw bits
    Bitstring take() { return Bitstring::raw(std::move(out_)); }

private:
    std::string out_;
};

class BitReader {
public:
    explicit BitReader(Bitstring source) : src_(std::move(source)) {}

    bool bit();
    std::uint64_t nat();
    Bitstring field();
    bool done() const { return pos_ == src_.str().size(); }
    void expect_done();  // malformed_input on trailing bits

private:
    Bitstring src_;
    std::size_t pos_ = 0;
};

/// Length-prefixed list of bitstrings, the basic composite wire format.
Bitstring encode_list(std::span<const Bitstring> items);
std::vector<Bitstring> decode_list(const Bitstring& encoded);

/// Two-field convenience used by pair-structured inputs (Consensus,
/// SpanningTree, cover/containment).
Bitstring encode_pair(const Bitstring& first, const Bitstring& second);
std::pair<Bitstring, Bitstring> decode_pair(const Bitstring& encoded);

}  // namespace locald
